from .models import SymmetricReference as SymmetricReference
from .models import make_star as make_star
from .models import make_symmetric as make_symmetric
from .models import symmetric_reference as symmetric_reference
from .randomised import make_random as make_random
from .specs import RandomSpec as RandomSpec
from .specs import SignMode as SignMode
from .specs import StarSpec as StarSpec
from .specs import SymmetricModelSpec as SymmetricModelSpec
