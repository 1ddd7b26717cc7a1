"""Pochhammer factors, formal eta-quotient products, and their expansions.

A :class:`PochhammerFactor` denotes (sign q^a; q^b)_inf ^ e, i.e. the
infinite product prod_{j>=0} (1 + sign * q^{a+jb}) raised to an integer
power; a :class:`ProductSpec` is a finite list of such factors.  Expansion
is definitional: one binomial 1 + sign*q^m at a time, which keeps this code
an independent cross-check for the sparse theta-based builders in
:mod:`qbracelet.theta`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import EXACT, CoefficientRing
from .series import TruncatedSeries


@dataclass(frozen=True)
class PochhammerFactor:
    """(q^a; q^b)_inf when sign == -1, (-q^a; q^b)_inf when sign == +1."""

    sign: int
    offset: int
    step: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.offset < 1:
            raise ValueError("offset must be >= 1")
        if self.step < 1:
            raise ValueError("step must be >= 1")

    def base_str(self) -> str:
        inner = f"q^{self.offset}" if self.offset != 1 else "q"
        if self.sign == 1:
            inner = "-" + inner
        outer = f"q^{self.step}" if self.step != 1 else "q"
        return f"({inner};{outer})oo"

    def __str__(self) -> str:
        s = self.base_str()
        if self.exponent != 1:
            s += f"^{self.exponent}"
        return s


@dataclass(frozen=True)
class ProductSpec:
    """A formal product of Pochhammer factors; the empty product is 1."""

    factors: tuple[PochhammerFactor, ...] = ()

    @classmethod
    def of(cls, *factors: tuple[int, int, int, int]) -> "ProductSpec":
        """Build from (sign, offset, step, exponent) tuples."""
        return cls(tuple(PochhammerFactor(*f) for f in factors))

    def key(self) -> str:
        return ";".join(
            f"{f.sign},{f.offset},{f.step},{f.exponent}" for f in self.factors
        )

    @classmethod
    def parse(cls, text: str) -> "ProductSpec":
        """Inverse of :meth:`key`; empty string gives the empty product."""
        if not text:
            return cls()
        factors = []
        for part in text.split(";"):
            sign, offset, step, exponent = (int(v) for v in part.split(","))
            factors.append(PochhammerFactor(sign, offset, step, exponent))
        return cls(tuple(factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        num = [f for f in self.factors if f.exponent > 0]
        den = [f for f in self.factors if f.exponent < 0]
        text = "".join(str(f) for f in num) or "1"
        if den:
            dtxt = "".join(
                str(PochhammerFactor(f.sign, f.offset, f.step, -f.exponent))
                for f in den
            )
            text += "/" + dtxt
        return text


def pochhammer_base(
    sign: int, offset: int, step: int, n: int, ring: CoefficientRing = EXACT
) -> TruncatedSeries:
    """Expand (sign q^offset; q^step)_inf to order n, one binomial at a time."""
    norm = ring.normalize
    cs = [0] * (n + 1)
    cs[0] = 1
    m = offset
    while m <= n:
        # in place multiply by (1 + sign q^m), highest index first
        if sign > 0:
            for i in range(n, m - 1, -1):
                cs[i] = norm(cs[i] + cs[i - m])
        else:
            for i in range(n, m - 1, -1):
                cs[i] = norm(cs[i] - cs[i - m])
        m += step
    return TruncatedSeries(ring, cs, normalize=False)


def pochhammer_series(
    factor: PochhammerFactor, n: int, ring: CoefficientRing = EXACT
) -> TruncatedSeries:
    """Expansion of a single factor, negative exponents via series inversion."""
    if n < 0:
        raise ValueError("order must be >= 0")
    if factor.exponent == 0:
        return TruncatedSeries.one(ring, n)
    base = pochhammer_base(factor.sign, factor.offset, factor.step, n, ring)
    return base.pow(factor.exponent)


def product_series(
    spec: ProductSpec, n: int, ring: CoefficientRing = EXACT
) -> TruncatedSeries:
    """Expansion of a full product spec to order n.

    Positive-exponent factors are multiplied into a numerator, negative ones
    into a denominator which is inverted once at the end.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    num = TruncatedSeries.one(ring, n)
    den: TruncatedSeries | None = None
    for f in spec.factors:
        if f.exponent == 0:
            continue
        base = pochhammer_base(f.sign, f.offset, f.step, n, ring)
        part = base.pow(abs(f.exponent))
        if f.exponent > 0:
            num = num * part
        else:
            den = part if den is None else den * part
    if den is not None:
        num = num * den.invert()
    return num
