from .command_report import CommandReport, dump_json
from .verify_results import CellResult, CheckOutcome, Status, VerifyCell
