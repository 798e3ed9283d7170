from . import data as data
from .builders import DemandSystemBuilder as DemandSystemBuilder
