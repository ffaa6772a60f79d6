from .formatting import MINUS, TENSOR, format_tensor, format_vector, tensor_names
