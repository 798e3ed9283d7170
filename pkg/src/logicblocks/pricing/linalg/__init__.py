from .kernel import SymmetricEigen as SymmetricEigen
from .kernel import asymmetry as asymmetry
from .kernel import eig_sym as eig_sym
from .kernel import max_abs as max_abs
from .kernel import solve_spd as solve_spd
from .kernel import spd_inverse as spd_inverse
from .kernel import spd_inverse_sqrt as spd_inverse_sqrt
from .kernel import spd_sqrt as spd_sqrt
from .kernel import symmetrise as symmetrise
