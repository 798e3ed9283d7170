from .clock import Clock as Clock
from .clock import StaticClock as StaticClock
from .clock import SystemClock as SystemClock
from .files import write_atomically as write_atomically
from .numbers import format_number as format_number
