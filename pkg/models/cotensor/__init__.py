from .cotensor_results import CotensorHomResult, CotensorResult, DComparison, GeneratedSubmodule
