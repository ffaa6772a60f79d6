from .frobenius_data import FrobeniusData
from .search_strategy import SearchStrategy
