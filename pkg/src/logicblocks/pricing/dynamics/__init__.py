from .learning import DEFAULT_EPS as DEFAULT_EPS
from .learning import DEFAULT_MAX_ITERS as DEFAULT_MAX_ITERS
from .learning import best_response_contraction as best_response_contraction
from .learning import best_response_dynamics as best_response_dynamics
from .learning import eta_max as eta_max
from .learning import (
    gradient_play_contraction as gradient_play_contraction,
)
from .learning import gradient_play as gradient_play
from .learning import iterate_best_responses as iterate_best_responses
from .learning import iterate_gradient_play as iterate_gradient_play
from .trajectory import TrajectoryRecord as TrajectoryRecord
from .trajectory import thinned_steps as thinned_steps
from .trajectory import trajectory_csv as trajectory_csv
