from .bounds import alpha as alpha
from .bounds import beta as beta
from .bounds import mu_bound as mu_bound
from .bounds import spectral_poa as spectral_poa
from .bounds import y_eigenvalue_interval as y_eigenvalue_interval
from .matrices import PoaMatrices as PoaMatrices
from .matrices import build_poa_matrices as build_poa_matrices
from .matrices import loewner_comparison_check as loewner_comparison_check
from .matrices import rayleigh_poa as rayleigh_poa
from .report import PoaReport as PoaReport
from .report import analyse as analyse
from .report import poa_extremes as poa_extremes
from .report import poa_of_intercept as poa_of_intercept
from .spectral import ExactPoaMin as ExactPoaMin
from .spectral import NormalizedInteraction as NormalizedInteraction
from .spectral import exact_poa_min as exact_poa_min
from .spectral import normalized_interaction as normalized_interaction
