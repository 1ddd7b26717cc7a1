"""Generating functions of the four partition families.

p(n)        1/(q;q)
b_l(n)      (q^l;q^l)/(q;q)                        l-regular partitions
Delta_k(n)  (-q;q)/((q;q)^2 (-q^{2k+1};q^{2k+1}))  broken k-diamond
B_k(n)      (-q;q)/((q;q)^{k-1} (-q^k;q^k))        k dots bracelet

The builders expand through the all-Euler rewriting of each quotient
(every (-q^a;q^a) factor replaced by (q^{2a};q^{2a})/(q^a;q^a)), so only
sparse pentagonal series, powers, and one inversion are involved; the
definitional factorizations are kept as cross-check material for tests.
"""

from __future__ import annotations

from .products import ProductSpec, product_series
from .rings import EXACT, CoefficientRing
from .series import TruncatedSeries
from .theta import euler_series


def gen_partition(n: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Coefficients p(0)..p(n)."""
    return euler_series(n, 1, ring).invert()


def gen_l_regular(ell: int, n: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Coefficients b_ell(0)..b_ell(n)."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    return euler_series(n, ell, ring) * euler_series(n, 1, ring).invert()


def gen_broken_diamond(k: int, n: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Coefficients Delta_k(0)..Delta_k(n)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    m = 2 * k + 1
    num = euler_series(n, 2, ring) * euler_series(n, m, ring)
    den = euler_series(n, 1, ring).pow(3) * euler_series(n, 2 * m, ring)
    return num * den.invert()


def gen_bracelet(k: int, n: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Coefficients B_k(0)..B_k(n) of the k dots bracelet family."""
    if k < 3:
        raise ValueError("k must be >= 3")
    num = euler_series(n, 2, ring) * euler_series(n, k, ring)
    den = euler_series(n, 1, ring).pow(k) * euler_series(n, 2 * k, ring)
    return num * den.invert()


def bracelet_definition_spec(k: int) -> ProductSpec:
    """The defining product (-q;q)/((q;q)^{k-1}(-q^k;q^k))."""
    if k < 3:
        raise ValueError("k must be >= 3")
    return ProductSpec.of((1, 1, 1, 1), (-1, 1, 1, -(k - 1)), (1, k, k, -1))


def bracelet_intermediate_spec(k: int) -> ProductSpec:
    """The half-rewritten form (q^2;q^2)/((q;q)^k(-q^k;q^k))."""
    if k < 3:
        raise ValueError("k must be >= 3")
    return ProductSpec.of((-1, 2, 2, 1), (-1, 1, 1, -k), (1, k, k, -1))


RAMANUJAN_A_SPEC = ProductSpec.of(
    (-1, 10, 25, 1), (-1, 15, 25, 1), (-1, 5, 25, -1), (-1, 20, 25, -1)
)
RAMANUJAN_B_SPEC = ProductSpec.of(
    (-1, 5, 25, 1), (-1, 20, 25, 1), (-1, 10, 25, -1), (-1, 15, 25, -1)
)


def ramanujan_a(n: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """a(q) = (q^10,q^15;q^25)/(q^5,q^20;q^25)."""
    return product_series(RAMANUJAN_A_SPEC, n, ring)


def ramanujan_b(n: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """b(q) = (q^5,q^20;q^25)/(q^10,q^15;q^25) = 1/a(q)."""
    return product_series(RAMANUJAN_B_SPEC, n, ring)


def euler_quintic_rhs(n: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """(q^25;q^25) * (a(q) - q - q^2 b(q)): the 25-step assembly of (q;q)."""
    a = ramanujan_a(n, ring)
    b = ramanujan_b(n, ring)
    q1 = TruncatedSeries.monomial(ring, n, 1)
    return euler_series(n, 25, ring) * (a - q1 - b.shift(2))
