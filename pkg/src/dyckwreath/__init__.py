"""Dyck-path interval statistics, lattice-path bijections and wreath decompositions."""

from .ballot import (
    LatticePoint,
    NEPath,
    count_ne_free,
    count_ne_upper,
    dyck_to_ne,
    enumerate_ne_upper,
    ne_to_dyck,
)
from .bijections import (
    claim_backward,
    claim_forward,
    interval_subset_map,
    interval_to_set,
    reflect_flip,
    reflect_flip_inverse,
)
from .binomial import binom
from .dyck import DyckPath, Interval, catalan, enumerate_dyck, reflect, stat_brute, stat_path
from .errors import CapacityError, DomainError
from .formulas import (
    stat,
    stat_alternative,
    stat_m_eq_k,
    stat_m_eq_k_minus_1,
    stat_m_eq_k_plus_1,
    stat_theorem1,
)
from .search import SearchResult, SearchTimeout, search_witness
from .wreath import (
    Permutation,
    Verdict,
    Wreath,
    WreathWitness,
    check_necessary_condition,
    verify_decomposition,
    verify_witness,
    wreath_from_permutation,
)

__version__ = "0.1.0"
