"""Structure searches over smooth integers with exact power-equation oracles.

A fixed prime base defines a smooth integer world; coloring each number by
its factor-exponent residues turns questions about power equations into
questions about monochromatic structures (sum triples, triangles, subset
sums, two-anchor bipartite stars). This package finds those structures
exhaustively at desk scale, rechecks every witness, and reports the results
deterministically via a library API, an HTTP service, and a CLI.
"""

from .arith import (
    Factorization,
    PrimeBase,
    ResidueColor,
    SmoothDecomposition,
    color_of,
    decompose,
    enumerate_smooth,
    factor_over_base,
    nth_root_exact,
    nth_root_floor,
    power_multiplier,
)
from .errors import DomainError, RecheckError, UsageError
from .schur import (
    Coloring,
    SchurCertificate,
    SchurTriple,
    count_monochromatic_triples,
    extract_nth_power_equation,
    factorial_e_bound,
    find_monochromatic_triple,
    find_smooth_monochromatic_triple,
    schur_number,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "DomainError",
    "Factorization",
    "PrimeBase",
    "RecheckError",
    "ResidueColor",
    "SchurCertificate",
    "SchurTriple",
    "SmoothDecomposition",
    "UsageError",
    "color_of",
    "count_monochromatic_triples",
    "decompose",
    "enumerate_smooth",
    "extract_nth_power_equation",
    "factor_over_base",
    "factorial_e_bound",
    "find_monochromatic_triple",
    "find_smooth_monochromatic_triple",
    "nth_root_exact",
    "nth_root_floor",
    "power_multiplier",
    "schur_number",
    "__version__",
]
