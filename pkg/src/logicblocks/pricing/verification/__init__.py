from .oracles import oracle_centralized as oracle_centralized
from .oracles import oracle_nash as oracle_nash
from .oracles import oracle_poa_min as oracle_poa_min
from .result import OracleQuantity as OracleQuantity
from .result import OracleResult as OracleResult
