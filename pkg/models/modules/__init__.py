from .module_rep import ComoduleRep, ModuleRep, Side
from .check_report import CheckReport
