from .arrays import Matrix as Matrix
from .arrays import MatrixLike as MatrixLike
from .arrays import Vector as Vector
from .arrays import VectorLike as VectorLike
from .arrays import as_matrix as as_matrix
from .arrays import as_vector as as_vector
from .arrays import frozen as frozen
from .codec import matrix_to_lists as matrix_to_lists
from .codec import vector_to_list as vector_to_list
from .tolerances import DEFAULT_TOLERANCES as DEFAULT_TOLERANCES
from .tolerances import Tolerances as Tolerances
