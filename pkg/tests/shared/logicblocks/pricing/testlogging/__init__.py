from .logger import CapturingLogger as CapturingLogger
from .logger import LogEvent as LogEvent
from .logger import LogLevel as LogLevel
