"""Machine-checkable congruence claims and the built-in catalog.

Three claim kinds:

* ``vanishing``       coefficient of the source at A n + B is 0 mod M for all
                      checked n;
* ``series``          the dissected source is coefficientwise congruent mod M
                      to a signed second series;
* ``identity``        two exact series agree coefficientwise.

Infinite families (parameterized by primes, exponents, residue choices) are
represented by :class:`ClaimFamily` objects whose ``instantiate`` validates
the parameter ranges strictly: out-of-range parameters raise
:class:`InstantiationError`, while parameter sets that make the whole family
empty (an allowed but contentless statement) raise
:class:`VacuousFamilyError` so the harness can report them as vacuous.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .oracles import is_prime, legendre_symbol
from .products import ProductSpec
from .sources import (
    SeriesSource,
    bracelet_source,
    broken_diamond_source,
    euler_source,
    lregular_source,
    partition_source,
    product_source,
    quintic_euler_source,
)
from .theta import PrimeContext


class InstantiationError(ValueError):
    """Family parameters violate the conditions of the underlying theorem."""


class VacuousFamilyError(InstantiationError):
    """The requested parameters make the family empty rather than wrong."""


@dataclass(frozen=True)
class CongruenceClaim:
    claim_id: str
    kind: str  # vanishing | series | identity
    source: SeriesSource
    step: int
    residue: int
    modulus: int | None  # None only for identity claims
    rhs_source: SeriesSource | None = None
    rhs_step: int = 1
    rhs_residue: int = 0
    rhs_sign: int = 1
    start_n: int = 0
    guard_nonzero: bool = False
    default_n_max: int = 200
    imported: bool = False
    params: tuple[tuple[str, int], ...] = ()

    @property
    def progression(self) -> tuple[int, int]:
        return (self.step, self.residue)

    def params_dict(self) -> dict[str, int]:
        return dict(self.params)

    def describe(self) -> str:
        """Human-readable statement in conventional congruence notation."""
        a, b = self.step, self.residue
        arg = f"{a}n+{b}" if a != 1 else (f"n+{b}" if b else "n")
        if self.kind == "vanishing":
            return f"{self.source.symbol()}({arg}) ≡ 0 (mod {self.modulus})"
        if self.kind == "series":
            sign = "-" if self.rhs_sign == -1 else ""
            if self.rhs_source.kind in ("product", "euler", "quintic_euler"):
                rhs = f"{sign}{self.rhs_source.symbol()}"
            else:
                ra, rb = self.rhs_step, self.rhs_residue
                rarg = f"{ra}n+{rb}" if ra != 1 else (f"n+{rb}" if rb else "n")
                rhs = f"{sign}Σ {self.rhs_source.symbol()}({rarg}) q^n"
            return f"Σ {self.source.symbol()}({arg}) q^n ≡ {rhs} (mod {self.modulus})"
        return f"{self.source.symbol()} = {self.rhs_source.symbol()}"


def required_truncation(claim: CongruenceClaim, n_max: int) -> int:
    """Series order needed to check the claim for all n <= n_max."""
    return claim.step * n_max + claim.residue


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InstantiationError(message)


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den != 0:
        raise InstantiationError(f"{what}: {num} is not divisible by {den}")
    return num // den


def _require_prime(p: int, minimum: int = 5) -> None:
    _check(p >= minimum and is_prime(p), f"p must be a prime >= {minimum}, got {p}")


@dataclass(frozen=True)
class ClaimFamily:
    family_id: str
    param_names: tuple[str, ...]
    summary: str
    emit: Callable[..., CongruenceClaim] = field(repr=False)
    default_grid: tuple[tuple[int, ...], ...] = ()
    imported: bool = False

    def claim_id(self, **params: int) -> str:
        inner = ",".join(f"{name}={params[name]}" for name in self.param_names)
        return f"{self.family_id}[{inner}]"

    def instantiate(self, **params: int) -> CongruenceClaim:
        if set(params) != set(self.param_names):
            raise InstantiationError(
                f"{self.family_id} takes parameters {self.param_names}, "
                f"got {tuple(sorted(params))}"
            )
        return self.emit(**params)

    def default_instances(self) -> list[CongruenceClaim]:
        return [
            self.instantiate(**dict(zip(self.param_names, grid)))
            for grid in self.default_grid
        ]


def instantiate(family: ClaimFamily, params: Mapping[str, int]) -> CongruenceClaim:
    """Instantiate a family at concrete parameters (strict validation)."""
    return family.instantiate(**dict(params))


# --- family emitters -------------------------------------------------------

def _emit_c2(p: int, r: int) -> CongruenceClaim:
    _require_prime(p, 2)
    _check(r >= 1, f"r must be >= 1, got {r}")
    k = p**r
    _check(k >= 3, f"k = p^r must be >= 3, got {k}")
    return CongruenceClaim(
        _FAMILIES["C2"].claim_id(p=p, r=r), "vanishing", bracelet_source(k),
        2, 1, p, imported=True, params=(("p", p), ("r", r)),
    )


def _emit_c3(p: int, m: int, s: int) -> CongruenceClaim:
    _require_prime(p)
    _check(m >= 1, f"m must be >= 1, got {m}")
    k = p * m
    _check(k >= 3, f"k = p*m must be >= 3, got {k}")
    _check(1 <= s <= p - 1, f"s must lie in 1..{p - 1}, got {s}")
    _check(
        legendre_symbol(12 * s + 1, p) == -1,
        f"12s+1 = {12 * s + 1} is not a quadratic nonresidue mod {p}",
    )
    return CongruenceClaim(
        _FAMILIES["C3"].claim_id(p=p, m=m, s=s), "vanishing", bracelet_source(k),
        p, s, p, default_n_max=100, imported=True,
        params=(("p", p), ("m", m), ("s", s)),
    )


def _emit_c4(m: int, l: int) -> CongruenceClaim:
    _check(m >= 1, f"m must be >= 1, got {m}")
    _check(l >= 1 and l % 2 == 1, f"l must be odd and >= 1, got {l}")
    k = 2**m * l
    _check(k >= 3, f"k = 2^m l must be >= 3, got {k}")
    return CongruenceClaim(
        _FAMILIES["C4"].claim_id(m=m, l=l), "vanishing", bracelet_source(k),
        2, 1, 2**m, imported=True, params=(("m", m), ("l", l)),
    )


def _emit_c10(p: int, a: int, i: int) -> CongruenceClaim:
    _require_prime(p)
    _check(
        legendre_symbol(-10, p) == -1,
        f"(-10/{p}) must be -1 for this family",
    )
    _check(a >= 1, f"alpha must be >= 1, got {a}")
    _check(1 <= i <= p - 1, f"i must lie in 1..{p - 1}, got {i}")
    step = 4 * p ** (2 * a)
    residue = _exact_div((24 * i + 7 * p) * p ** (2 * a - 1) - 1, 6, "C10 residue")
    return CongruenceClaim(
        _FAMILIES["C10"].claim_id(p=p, a=a, i=i), "vanishing", lregular_source(5),
        step, residue, 2, default_n_max=3, imported=True,
        params=(("p", p), ("a", a), ("i", i)),
    )


_C11_TABLE = {1: (1, 31), 2: (1, 79), 3: (2, 83), 4: (2, 107)}


def _emit_c11(v: int, a: int) -> CongruenceClaim:
    _check(v in _C11_TABLE, f"variant must be 1..4, got {v}")
    _check(a >= 0, f"alpha must be >= 0, got {a}")
    extra, c = _C11_TABLE[v]
    step = 4 * 5 ** (2 * a + extra)
    residue = _exact_div(c * 5 ** (2 * a + extra - 1) - 1, 6, "C11 residue")
    return CongruenceClaim(
        _FAMILIES["C11"].claim_id(v=v, a=a), "vanishing", lregular_source(5),
        step, residue, 2, default_n_max=100 if a == 0 else 80, imported=True,
        params=(("v", v), ("a", a)),
    )


def _emit_c12(p: int, a: int, i: int) -> CongruenceClaim:
    _require_prime(p)
    _check(
        legendre_symbol(-10, p) == -1,
        f"(-10/{p}) must be -1 for this family",
    )
    _check(a >= 1, f"alpha must be >= 1, got {a}")
    _check(1 <= i <= p - 1, f"i must lie in 1..{p - 1}, got {i}")
    step = 40 * p ** (2 * a)
    residue = _exact_div(5 * (24 * i + 7 * p) * p ** (2 * a - 1) + 1, 3, "C12 residue")
    return CongruenceClaim(
        _FAMILIES["C12"].claim_id(p=p, a=a, i=i), "vanishing", bracelet_source(5),
        step, residue, 2, default_n_max=2,
        params=(("p", p), ("a", a), ("i", i)),
    )


_C13_TABLE = {1: (0, 31), 2: (0, 79), 3: (1, 83), 4: (1, 107)}


def _emit_c13(v: int, a: int) -> CongruenceClaim:
    _check(v in _C13_TABLE, f"variant must be 1..4, got {v}")
    _check(a >= 1, f"alpha must be >= 1, got {a}")
    extra, c = _C13_TABLE[v]
    step = 8 * 5 ** (2 * a + extra)
    residue = _exact_div(c * 5 ** (2 * a + extra - 1) + 1, 3, "C13 residue")
    return CongruenceClaim(
        _FAMILIES["C13"].claim_id(v=v, a=a), "vanishing", bracelet_source(5),
        step, residue, 2, default_n_max=20, params=(("v", v), ("a", a)),
    )


def _emit_c14(p: int, r: int, a: int) -> CongruenceClaim:
    _require_prime(p)
    _check(r >= 1, f"r must be >= 1, got {r}")
    _check(a >= 1 and 2 * a <= r + 1, f"alpha must lie in 1..(r+1)/2, got {a}")
    k = p**r
    step = p ** (2 * a - 1)
    residue = _exact_div(p ** (2 * a) - 1, 12, "C14 residue")
    e = p ** (r - 2 * a + 1)
    rhs = product_source(ProductSpec.of((-1, 2 * p, 2 * p, 1), (-1, 2 * e, 2 * e, -1)))
    sign = PrimeContext(p).epsilon ** a
    return CongruenceClaim(
        _FAMILIES["C14"].claim_id(p=p, r=r, a=a), "series", bracelet_source(k),
        step, residue, p, rhs_source=rhs, rhs_sign=sign,
        params=(("p", p), ("r", r), ("a", a)),
    )


def _emit_c15(p: int, r: int, a: int, i: int) -> CongruenceClaim:
    _require_prime(p)
    _check(r >= 1, f"r must be >= 1, got {r}")
    if r < 2:
        raise VacuousFamilyError(
            "C15 needs r >= 2: for r = 1 the alpha range 1..r/2 is empty"
        )
    _check(a >= 1 and 2 * a <= r, f"alpha must lie in 1..r/2, got {a}")
    _check(1 <= i <= p - 1, f"i must lie in 1..{p - 1}, got {i}")
    step = p ** (2 * a)
    residue = _exact_div((12 * i + p) * p ** (2 * a - 1) - 1, 12, "C15 residue")
    return CongruenceClaim(
        _FAMILIES["C15"].claim_id(p=p, r=r, a=a, i=i), "vanishing",
        bracelet_source(p**r), step, residue, p, default_n_max=100,
        params=(("p", p), ("r", r), ("a", a), ("i", i)),
    )


def _emit_c16(p: int, r: int, a: int, j: int) -> CongruenceClaim:
    _require_prime(p)
    _check(r >= 1, f"r must be >= 1, got {r}")
    if r <= 2:
        raise VacuousFamilyError(
            "C16 needs r >= 3: for r <= 2 the alpha range 1..(r-1)/2 is empty"
        )
    _check(a >= 1 and 2 * a <= r - 1, f"alpha must lie in 1..(r-1)/2, got {a}")
    _check(1 <= j <= p - 1, f"j must lie in 1..{p - 1}, got {j}")
    _check(
        legendre_symbol(12 * j + 1, p) == -1,
        f"12j+1 = {12 * j + 1} is not a quadratic nonresidue mod {p}",
    )
    step = p ** (2 * a + 1)
    residue = _exact_div((12 * j + 1) * p ** (2 * a) - 1, 12, "C16 residue")
    return CongruenceClaim(
        _FAMILIES["C16"].claim_id(p=p, r=r, a=a, j=j), "vanishing",
        bracelet_source(p**r), step, residue, p, default_n_max=40,
        params=(("p", p), ("r", r), ("a", a), ("j", j)),
    )


def _emit_c17(p: int, a: int, v: int) -> CongruenceClaim:
    _require_prime(p)
    _check(a >= 1, f"alpha must be >= 1, got {a}")
    _check(v in (1, 2), f"variant must be 1 or 2, got {v}")
    k = p ** (2 * a - 1)
    step = 2 * p ** (2 * a - 1)
    residue = _exact_div(p ** (2 * a) - 1, 12, "C17 residue")
    if v == 1:
        rhs = lregular_source(p)
    else:
        rhs = product_source(ProductSpec.of((-1, p, p, 1), (-1, 1, 1, -1)))
    sign = PrimeContext(p).epsilon ** a
    return CongruenceClaim(
        _FAMILIES["C17"].claim_id(p=p, a=a, v=v), "series", bracelet_source(k),
        step, residue, p, rhs_source=rhs, rhs_sign=sign,
        params=(("p", p), ("a", a), ("v", v)),
    )


_C18_CONSTANTS = {5: 101, 7: 127, 11: 155}


def _emit_c18(p: int, a: int) -> CongruenceClaim:
    _check(p in _C18_CONSTANTS, f"p must be 5, 7 or 11, got {p}")
    _check(a >= 1, f"alpha must be >= 1, got {a}")
    c = _C18_CONSTANTS[p]
    k = p ** (2 * a - 1)
    step = 2 * p ** (2 * a)
    residue = _exact_div(c * p ** (2 * a - 1) - 1, 12, "C18 residue")
    return CongruenceClaim(
        _FAMILIES["C18"].claim_id(p=p, a=a), "vanishing", bracelet_source(k),
        step, residue, p, default_n_max=40, params=(("p", p), ("a", a)),
    )


def _emit_c19(p: int, a: int) -> CongruenceClaim:
    _require_prime(p)
    _check(a >= 1, f"alpha must be >= 1, got {a}")
    k = p ** (2 * a)
    step = p ** (2 * a - 1)
    residue = _exact_div(p ** (2 * a) - 1, 12, "C19 residue")
    # valid only from n = 1 on: the n = 0 coefficient equals epsilon^a, so the
    # claim also guards that it is nonzero mod p (a vacuous pass would hide a
    # broken expansion)
    return CongruenceClaim(
        _FAMILIES["C19"].claim_id(p=p, a=a), "vanishing", bracelet_source(k),
        step, residue, p, start_n=1, guard_nonzero=True, default_n_max=300,
        params=(("p", p), ("a", a)),
    )


_FAMILIES: dict[str, ClaimFamily] = {}

for _fam in (
    ClaimFamily(
        "C2", ("p", "r"), "B_{p^r}(2n+1) ≡ 0 (mod p)", _emit_c2,
        ((5, 1), (7, 1), (3, 2)), imported=True,
    ),
    ClaimFamily(
        "C3", ("p", "m", "s"),
        "B_{pm}(pn+s) ≡ 0 (mod p) when 12s+1 is a QNR mod p", _emit_c3,
        ((5, 2, 1), (5, 2, 3)), imported=True,
    ),
    ClaimFamily(
        "C4", ("m", "l"), "B_{2^m l}(2n+1) ≡ 0 (mod 2^m), l odd", _emit_c4,
        ((2, 3),), imported=True,
    ),
    ClaimFamily(
        "C10", ("p", "a", "i"),
        "b_5(4 p^{2a} n + ((24i+7p)p^{2a-1}-1)/6) ≡ 0 (mod 2), (-10/p) = -1",
        _emit_c10, ((17, 1, 1), (17, 1, 6)), imported=True,
    ),
    ClaimFamily(
        "C11", ("v", "a"),
        "b_5 vanishing along four progressions at powers of 5 (mod 2)",
        _emit_c11,
        ((1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (2, 1)), imported=True,
    ),
    ClaimFamily(
        "C12", ("p", "a", "i"),
        "B_5(40 p^{2a} n + (5(24i+7p)p^{2a-1}+1)/3) ≡ 0 (mod 2), (-10/p) = -1",
        _emit_c12, ((17, 1, 6),),
    ),
    ClaimFamily(
        "C13", ("v", "a"),
        "B_5 vanishing along four progressions at powers of 5 (mod 2)",
        _emit_c13, ((1, 1), (2, 1), (3, 1), (4, 1)),
    ),
    ClaimFamily(
        "C14", ("p", "r", "a"),
        "Σ B_{p^r}(p^{2a-1}n + (p^{2a}-1)/12) q^n ≡ ±(q^{2p};q^{2p})/(q^{2E};q^{2E}) (mod p)",
        _emit_c14, ((5, 1, 1), (5, 3, 1), (5, 3, 2)),
    ),
    ClaimFamily(
        "C15", ("p", "r", "a", "i"),
        "B_{p^r}(p^{2a}n + ((12i+p)p^{2a-1}-1)/12) ≡ 0 (mod p)",
        _emit_c15, ((5, 2, 1, 1), (5, 2, 1, 2), (5, 2, 1, 3), (5, 2, 1, 4)),
    ),
    ClaimFamily(
        "C16", ("p", "r", "a", "j"),
        "B_{p^r}(p^{2a+1}n + ((12j+1)p^{2a}-1)/12) ≡ 0 (mod p), 12j+1 a QNR",
        _emit_c16, ((5, 3, 1, 1), (5, 3, 1, 3)),
    ),
    ClaimFamily(
        "C17", ("p", "a", "v"),
        "Σ B_{p^{2a-1}}(2p^{2a-1}n + (p^{2a}-1)/12) q^n ≡ ±b_p / ±(q^p;q^p)Σp(n)q^n (mod p)",
        _emit_c17, ((5, 1, 1), (5, 1, 2)),
    ),
    ClaimFamily(
        "C18", ("p", "a"),
        "B_{p^{2a-1}}(2p^{2a}n + (c_p p^{2a-1}-1)/12) ≡ 0 (mod p), p in {5,7,11}",
        _emit_c18, ((5, 1), (7, 1), (11, 1)),
    ),
    ClaimFamily(
        "C19", ("p", "a"),
        "B_{p^{2a}}(p^{2a-1}n + (p^{2a}-1)/12) ≡ 0 (mod p) for n >= 1",
        _emit_c19, ((5, 1),),
    ),
):
    _FAMILIES[_fam.family_id] = _fam


def _fixed_claims() -> list[CongruenceClaim]:
    claims = [
        CongruenceClaim(
            "C1", "vanishing", broken_diamond_source(1), 2, 1, 3,
            default_n_max=150, imported=True,
        ),
        CongruenceClaim(
            "C5[k=5]", "vanishing", bracelet_source(5), 10, 7, 25,
            default_n_max=100, imported=True, params=(("k", 5),),
        ),
        CongruenceClaim(
            "C5[k=7]", "vanishing", bracelet_source(7), 14, 11, 49,
            default_n_max=100, imported=True, params=(("k", 7),),
        ),
        CongruenceClaim(
            "C5[k=11]", "vanishing", bracelet_source(11), 22, 21, 121,
            default_n_max=100, imported=True, params=(("k", 11),),
        ),
        CongruenceClaim(
            "C6[B=6]", "vanishing", bracelet_source(5), 10, 6, 2,
            default_n_max=500, params=(("B", 6),),
        ),
        CongruenceClaim(
            "C6[B=8]", "vanishing", bracelet_source(5), 10, 8, 2,
            default_n_max=500, params=(("B", 8),),
        ),
        CongruenceClaim(
            "C7", "series", bracelet_source(5), 10, 2, 2,
            rhs_source=lregular_source(5), default_n_max=500,
        ),
        CongruenceClaim(
            "C8", "series", lregular_source(5), 2, 0, 2,
            rhs_source=product_source(ProductSpec.of((-1, 2, 2, 1))),
            default_n_max=500,
        ),
        CongruenceClaim(
            "C9", "identity", euler_source(1), 1, 0, None,
            rhs_source=quintic_euler_source(), default_n_max=1000,
        ),
        CongruenceClaim(
            "C20[m=5]", "vanishing", partition_source(), 5, 4, 5,
            default_n_max=150, imported=True, params=(("m", 5),),
        ),
        CongruenceClaim(
            "C20[m=7]", "vanishing", partition_source(), 7, 5, 7,
            default_n_max=150, imported=True, params=(("m", 7),),
        ),
        CongruenceClaim(
            "C20[m=11]", "vanishing", partition_source(), 11, 6, 11,
            default_n_max=150, imported=True, params=(("m", 11),),
        ),
    ]
    return claims


def builtin_claims() -> list[CongruenceClaim | ClaimFamily]:
    """The fixed catalog: concrete claims plus parameterized families."""
    entries: list[CongruenceClaim | ClaimFamily] = list(_fixed_claims())
    entries.extend(_FAMILIES.values())
    return entries


def families() -> dict[str, ClaimFamily]:
    return dict(_FAMILIES)


def default_catalog() -> list[CongruenceClaim]:
    """All fixed claims plus the default instances of every family."""
    claims = _fixed_claims()
    for fam in _FAMILIES.values():
        claims.extend(fam.default_instances())
    return sorted(claims, key=claim_sort_key)


_ID_RE = re.compile(r"^(C\d+)(?:\[(.*)\])?$")


def claim_sort_key(claim: CongruenceClaim) -> tuple[int, str]:
    m = _ID_RE.match(claim.claim_id)
    num = int(m.group(1)[1:]) if m else 0
    return (num, claim.claim_id)


@dataclass(frozen=True)
class SelectionIssue:
    claim_id: str
    status: str  # vacuous | error
    message: str


def resolve_selection(
    selections: Iterable[str],
) -> tuple[list[CongruenceClaim], list[SelectionIssue]]:
    """Turn id strings into concrete claims.

    A bare family id selects its default instances; a bracketed id
    instantiates exactly those parameters.  Vacuous instantiations and
    invalid parameters become :class:`SelectionIssue` entries instead of
    aborting the whole selection.
    """
    fixed = {c.claim_id: c for c in _fixed_claims()}
    claims: list[CongruenceClaim] = []
    issues: list[SelectionIssue] = []
    seen: set[str] = set()

    def add(claim: CongruenceClaim) -> None:
        if claim.claim_id not in seen:
            seen.add(claim.claim_id)
            claims.append(claim)

    for text in selections:
        text = text.strip()
        m = _ID_RE.match(text)
        if not m:
            issues.append(SelectionIssue(text, "error", f"unparseable claim id {text!r}"))
            continue
        base, inner = m.group(1), m.group(2)
        if inner is None:
            matched = False
            if base in _FAMILIES:
                matched = True
                for claim in _FAMILIES[base].default_instances():
                    add(claim)
            for cid, claim in fixed.items():
                if cid == base or cid.startswith(base + "["):
                    matched = True
                    add(claim)
            if not matched:
                issues.append(SelectionIssue(text, "error", f"unknown claim id {base!r}"))
            continue
        if text in fixed:
            add(fixed[text])
            continue
        if base not in _FAMILIES:
            issues.append(SelectionIssue(text, "error", f"unknown claim family {base!r}"))
            continue
        try:
            params = {}
            for piece in inner.split(","):
                name, _, value = piece.partition("=")
                params[name.strip()] = int(value)
        except ValueError:
            issues.append(SelectionIssue(text, "error", f"unparseable parameters in {text!r}"))
            continue
        try:
            add(_FAMILIES[base].instantiate(**params))
        except VacuousFamilyError as exc:
            issues.append(SelectionIssue(text, "vacuous", str(exc)))
        except InstantiationError as exc:
            issues.append(SelectionIssue(text, "error", str(exc)))
    return claims, issues
