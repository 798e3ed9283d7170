from .profile import DominanceProfile as DominanceProfile
from .profile import GershgorinDiscs as GershgorinDiscs
from .profile import InteractionKind as InteractionKind
from .profile import InteractionSummary as InteractionSummary
from .profile import ProductPair as ProductPair
from .profile import classify_interactions as classify_interactions
from .profile import dominance_profile as dominance_profile
from .profile import gershgorin_discs as gershgorin_discs
from .system import DemandSystem as DemandSystem
from .system import build_demand_system as build_demand_system
from .system import expected_demand as expected_demand
