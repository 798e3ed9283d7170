from .analyze import AnalyzeCommand as AnalyzeCommand
from .base import Command as Command
from .base import CommandContext as CommandContext
from .curve import CurveCommand as CurveCommand
from .generate import GenerateCommand as GenerateCommand
from .simulate import SimulateCommand as SimulateCommand
from .validate import ValidateCommand as ValidateCommand
