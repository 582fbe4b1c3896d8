"""Parity of a(n): partitions of n whose parts all appear with odd multiplicity.

The package has three layers. A bit-packed GF(2) power-series kernel
(`gf2series`, `etaq`) computes parity generating functions at large
truncations; exact arithmetic (`partition_oracle`, `numtheory`) provides
independent ground truth; and on top sit the parity characterizations
(`characterize`), the congruence families (`congruence`), and the odd-density
experiments (`density`). The `oddmult` CLI exposes all of it.
"""

from .characterize import Parity, ParityVerdict, parity_4m1, parity_8m3, parity_even_index, predict_parity
from .congruence import (
    CongruenceFamily,
    FamilyVerification,
    all_families,
    fixed_families,
    generate_12p_family,
    generate_24p_family,
    verify_family,
)
from .density import CensusResult, DensityCheckpoint, DensityReport, density_8m7, sparse_odd_census
from .etaq import (
    EtaQuotient,
    a_parity_series,
    dissection_by_extraction,
    dissection_series,
    identity_suite,
    pentagonal_exponents,
    triangular_exponents,
)
from .gf2series import Gf2Series, sparse_support
from .numtheory import (
    DivisorClassCounts,
    Factorization,
    count_reps_c2_plus_2d2,
    count_reps_two_squares_constrained,
    divisor_classes_mod8,
    factorize,
    is_prime,
    is_quadratic_residue,
    is_square,
    is_three_times_square,
    legendre_symbol,
    r2,
    sigma0,
)
from .partition_oracle import (
    ENUMERATION_LIMIT,
    PartitionCountTable,
    build_table,
    enumerate_partitions,
    qualifying_partitions,
)

__version__ = "0.1.0"
