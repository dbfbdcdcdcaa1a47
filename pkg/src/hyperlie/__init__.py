"""Exact root enumerators and higher Lie characters for classical Weyl groups.

The package computes, over exact rationals:

* class-level and brute-force k-th root enumerators (optionally twisted by a
  linear character) for the signed permutation group of rank n and its
  index-2 subgroups;
* higher Lie characters induced from centralizer linear characters, both by
  direct centralizer summation and through truncated exponential generating
  functions;
* exact irreducible character tables of the symmetric and signed permutation
  groups, inner products, and properness verdicts for root enumerators.

See the `hyperlie` command line tool (``hyperlie --help``) for the public
entry points, and ``hyperlie verify`` for the mechanized identity checks.
"""

from .backend import BACKEND
from .combinatorics import Bipartition, bipartition, bipartitions, partitions
from .group import SignedPermutation, canonical_rep, class_data
from .rootcount import (
    brute_force_root_enumerator,
    class_power,
    root_enumerator,
    root_enumerator_S,
    subgroup_root_enumerator,
)
from .hlc import psi_bruteforce, psi_k_sum, spsi_k_sum
from .series import psi_from_series
from .chartables import bn_table, decompose, sn_table, subgroup_multiplicities

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bipartition",
    "bipartition",
    "bipartitions",
    "partitions",
    "SignedPermutation",
    "canonical_rep",
    "class_data",
    "class_power",
    "root_enumerator",
    "brute_force_root_enumerator",
    "subgroup_root_enumerator",
    "root_enumerator_S",
    "psi_bruteforce",
    "psi_from_series",
    "psi_k_sum",
    "spsi_k_sum",
    "sn_table",
    "bn_table",
    "decompose",
    "subgroup_multiplicities",
    "__version__",
]
