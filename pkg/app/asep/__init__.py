from .chain import ChainSector, NonpositiveParam, ParamError, build_generator, parse_params
from .stationary import Reducible, StationaryDist, stationary_exact
from .crossval import cross_validate
from .sampler import sample_trajectory
