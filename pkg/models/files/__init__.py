from .algebra_file_model import AlgebraFileModel
from .module_file_model import ModuleFileModel
from .counit_file_model import CounitFileModel
from .job_spec import Command, JobSpec
