"""
This package contains custom warning classes for the application.

It provides a structured way to issue warnings in different contexts, such as:
- Performance-related warnings (worker pools)
- Inconclusive searches over infinite fields

All warning classes can be imported from this module for ease of use.

Example:
    from app.warnings import ExcessiveProcessesWarning, InconclusiveSearchWarning
"""
from .base_warning import CustomWarning
from .performance_warnings import ExcessiveProcessesWarning
from .search_warnings import InconclusiveSearchWarning
