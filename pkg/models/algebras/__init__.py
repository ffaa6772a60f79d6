from .presentation import AlgebraPresentation
from .enveloping import EnvelopingAlgebra
