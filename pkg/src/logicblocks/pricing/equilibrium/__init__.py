from .prices import PriceVector as PriceVector
from .prices import Prices as Prices
from .prices import best_response as best_response
from .prices import best_responses as best_responses
from .prices import build_ane as build_ane
from .prices import payoff_gradient as payoff_gradient
from .prices import player_payoff as player_payoff
from .prices import price_array as price_array
from .prices import total_revenue as total_revenue
from .solve import EquilibriumPair as EquilibriumPair
from .solve import centralized_optimum as centralized_optimum
from .solve import equilibrium_pair as equilibrium_pair
from .solve import nash_equilibrium as nash_equilibrium
