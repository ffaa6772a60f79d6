"""
Contains custom errors related to Input/Output operations.
It includes errors for missing input files and missing test templates.
"""

from app.errors.base_error import CustomError


class TemplateNotFoundError(FileNotFoundError, CustomError):
    """Custom error for missing template files."""
    def __init__(self, template_path):
        self.template_path = template_path
        self.message = f"Template not found: {self.template_path}"
        super().__init__(self.message)


class InputFileNotFoundError(FileNotFoundError, CustomError):
    """Raised when an algebra, module or counit file does not exist."""
    def __init__(self, path):
        self.path = path
        self.message = f"Input file not found: {self.path}"
        super().__init__(self.message)
