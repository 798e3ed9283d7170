from .document import AnalysisDocument as AnalysisDocument
from .exit_codes import ExitCode as ExitCode
from .main import build_parser as build_parser
from .main import main as main
from .settings import CliSettings as CliSettings
