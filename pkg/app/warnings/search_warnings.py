"""
Contains custom warnings related to searches that cannot certify a negative answer.
"""

from app.warnings.base_warning import CustomWarning


class InconclusiveSearchWarning(CustomWarning):
	"""Warning for a randomized search that ran out of tries over an infinite field."""

	def __init__(self, tries: int, field_label: str):
		super().__init__(
			f"No nondegenerate functional found in {tries} random tries over {field_label}; "
			f"this does not show the algebra is not Frobenius."
		)
