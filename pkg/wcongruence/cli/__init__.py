from .cli import build_parser, main
from .compute import QUANTITIES, cmd_compute, format_value
from .report import FORMATS, Report, Skip
from .runner import JOBS_ENV, GridRunner, VerifyRequest, default_jobs
from .selftest import EXAMPLES, MODULES, SelfTest
