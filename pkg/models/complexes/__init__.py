from .resolution import Coresolution, Resolution
from .cochain_complex import CochainComplex, FunctorResult, HochschildComparison
