"""qbracelet: truncated q-series arithmetic and a congruence verification
harness for partition-family counting functions (partitions, l-regular
partitions, broken k-diamond partitions, k dots bracelet partitions)."""

from ._kernel import BACKEND, HAVE_SPEEDUPS
from .claims import (
    ClaimFamily,
    CongruenceClaim,
    InstantiationError,
    VacuousFamilyError,
    builtin_claims,
    default_catalog,
    families,
    instantiate,
    required_truncation,
    resolve_selection,
)
from .generators import (
    euler_quintic_rhs,
    gen_bracelet,
    gen_broken_diamond,
    gen_l_regular,
    gen_partition,
    ramanujan_a,
    ramanujan_b,
)
from .oracles import (
    count_l_regular,
    count_partitions,
    is_prime,
    legendre_symbol,
    partition_numbers,
)
from .products import (
    PochhammerFactor,
    ProductSpec,
    pochhammer_series,
    product_series,
)
from .rings import (
    EXACT,
    CoefficientRing,
    Mod,
    NotInvertibleError,
    RingMismatchError,
)
from .series import TruncatedSeries
from .sources import SeriesSource, expand_source, parse_source
from .theta import (
    PrimeContext,
    UnsupportedSpecializationError,
    euler_series,
    jacobi_triple_check,
    p_dissection_f,
    theta_f,
)
from .verify import RunConfig, SeriesCache, VerificationReport, verify

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HAVE_SPEEDUPS",
    "CoefficientRing",
    "EXACT",
    "Mod",
    "NotInvertibleError",
    "RingMismatchError",
    "TruncatedSeries",
    "PochhammerFactor",
    "ProductSpec",
    "pochhammer_series",
    "product_series",
    "theta_f",
    "euler_series",
    "jacobi_triple_check",
    "PrimeContext",
    "UnsupportedSpecializationError",
    "p_dissection_f",
    "gen_partition",
    "gen_l_regular",
    "gen_broken_diamond",
    "gen_bracelet",
    "ramanujan_a",
    "ramanujan_b",
    "euler_quintic_rhs",
    "count_partitions",
    "count_l_regular",
    "partition_numbers",
    "legendre_symbol",
    "is_prime",
    "SeriesSource",
    "parse_source",
    "expand_source",
    "CongruenceClaim",
    "ClaimFamily",
    "InstantiationError",
    "VacuousFamilyError",
    "builtin_claims",
    "default_catalog",
    "families",
    "instantiate",
    "required_truncation",
    "resolve_selection",
    "RunConfig",
    "SeriesCache",
    "VerificationReport",
    "verify",
    "__version__",
]
