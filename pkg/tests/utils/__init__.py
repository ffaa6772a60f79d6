from .test_helpers import cases, load_config, print_result, to_matrix, to_vector
