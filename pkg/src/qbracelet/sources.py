"""Named series sources: the subjects that claims and the CLI quantify over.

A source is a value object naming one expandable series; `expand_source`
turns it into a :class:`TruncatedSeries` over a chosen ring and order.
String keys (``partition``, ``lregular:5``, ``bracelet:5``, ``euler:2``,
``product:<factors>``) round-trip through :func:`parse_source` and double
as cache keys in the verification engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import (
    euler_quintic_rhs,
    gen_bracelet,
    gen_broken_diamond,
    gen_l_regular,
    gen_partition,
)
from .products import ProductSpec, product_series
from .rings import CoefficientRing
from .series import TruncatedSeries
from .theta import euler_series

_PARAM_KINDS = {"lregular", "brokendiamond", "bracelet", "euler"}
_KINDS = _PARAM_KINDS | {"partition", "product", "quintic_euler"}


@dataclass(frozen=True)
class SeriesSource:
    kind: str
    param: int | None = None
    spec: ProductSpec | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown series source kind {self.kind!r}")
        if self.kind in _PARAM_KINDS and self.param is None:
            raise ValueError(f"source kind {self.kind!r} needs a parameter")
        if self.kind == "product" and self.spec is None:
            raise ValueError("product source needs a ProductSpec")

    def key(self) -> str:
        if self.kind == "product":
            return f"product:{self.spec.key()}"
        if self.param is not None:
            return f"{self.kind}:{self.param}"
        return self.kind

    def symbol(self) -> str:
        """Short function symbol used when printing congruences."""
        if self.kind == "partition":
            return "p"
        if self.kind == "lregular":
            return f"b_{self.param}"
        if self.kind == "brokendiamond":
            return f"Delta_{self.param}"
        if self.kind == "bracelet":
            return f"B_{self.param}"
        if self.kind == "euler":
            t = self.param
            return "(q;q)oo" if t == 1 else f"(q^{t};q^{t})oo"
        if self.kind == "product":
            return str(self.spec)
        return "(q^25;q^25)oo*(a(q)-q-q^2*b(q))"

    def __str__(self) -> str:
        return self.key()


def partition_source() -> SeriesSource:
    return SeriesSource("partition")


def lregular_source(ell: int) -> SeriesSource:
    return SeriesSource("lregular", ell)


def broken_diamond_source(k: int) -> SeriesSource:
    return SeriesSource("brokendiamond", k)


def bracelet_source(k: int) -> SeriesSource:
    return SeriesSource("bracelet", k)


def euler_source(t: int = 1) -> SeriesSource:
    return SeriesSource("euler", t)


def product_source(spec: ProductSpec) -> SeriesSource:
    return SeriesSource("product", spec=spec)


def quintic_euler_source() -> SeriesSource:
    return SeriesSource("quintic_euler")


def parse_source(text: str) -> SeriesSource:
    """Parse a source key like ``bracelet:5`` or ``product:-1,2,2,1``."""
    text = text.strip()
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind == "product":
        return product_source(ProductSpec.parse(rest))
    if kind in _PARAM_KINDS:
        if not rest and kind == "euler":
            return euler_source(1)
        if not rest:
            raise ValueError(f"source {kind!r} needs a parameter, e.g. {kind}:5")
        return SeriesSource(kind, int(rest))
    if rest:
        raise ValueError(f"source {kind!r} takes no parameter")
    return SeriesSource(kind)


def expand_source(
    source: SeriesSource, ring: CoefficientRing, order: int
) -> TruncatedSeries:
    """Expand a source to the requested order over the requested ring."""
    if source.kind == "partition":
        return gen_partition(order, ring)
    if source.kind == "lregular":
        return gen_l_regular(source.param, order, ring)
    if source.kind == "brokendiamond":
        return gen_broken_diamond(source.param, order, ring)
    if source.kind == "bracelet":
        return gen_bracelet(source.param, order, ring)
    if source.kind == "euler":
        return euler_series(order, source.param, ring)
    if source.kind == "product":
        return product_series(source.spec, order, ring)
    return euler_quintic_rhs(order, ring)
