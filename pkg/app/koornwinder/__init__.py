from .orbit import LengthMismatch, NotAPartition, Orbit, order_preceq, orbit_of, parse_partition
from .family import QkzFamily, asep_poly_F, build_family, koornwinder_K, symmetric_check, verify_qkz, verify_structure
from .eigen import EigenData, NotAntidominant, eigen_data, verify_eigen
from .symmetric import InvalidShape, koornwinder_K_via_ek, koornwinder_q1, verify_q1, verify_ek_expansion
