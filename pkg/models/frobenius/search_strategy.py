from enum import Enum


class SearchStrategy(str, Enum):
    BUILTIN_DEFAULT = "builtin-default"
    RANDOMIZED = "randomized"
    EXHAUSTIVE = "exhaustive"
