from .field import Field
from .matrix import Matrix, Vector, linear_combination
from .subspace import Subspace
