"""Convolution kernel backend selection.

Two backends implement the hot modular-convolution kernel:

* ``compiled`` -- the Cython extension ``_speedups``: word-parallel XOR
  convolution for modulus 2 and a flat uint64 schoolbook loop for other
  small moduli.  Schoolbook is quadratic, so beyond a crossover order the
  dispatcher hands large products back to Kronecker packing, which rides
  CPython's subquadratic bignum multiply (see ``benchmarks/bench_kernels.py``).
* ``python`` -- the pure-Python Kronecker-substitution kernels in
  ``fallback``; used when the extension is unavailable or when forced.

Exact-integer convolution always goes through the Kronecker path: without
an external multiprecision library there is nothing faster to compile.

Selection happens once, at import time:
``QBRACELET_BACKEND=python`` forces the fallback, ``=compiled`` requires the
extension (ImportError if missing); default is compiled when available.
"""

from __future__ import annotations

import os

from . import fallback

conv_exact = fallback.conv_exact

# Above this order the quadratic C schoolbook loses to Kronecker packing;
# measured with benchmarks/bench_kernels.py.
SCHOOLBOOK_MAX_ORDER = 1024

try:
    from . import _speedups
except ImportError:
    _speedups = None

_requested = os.environ.get("QBRACELET_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "python", "compiled"):
    raise ValueError(
        f"QBRACELET_BACKEND must be auto, python or compiled, got {_requested!r}"
    )
if _requested == "compiled" and _speedups is None:
    raise ImportError(
        "QBRACELET_BACKEND=compiled but the _speedups extension is not built"
    )

_use_compiled = _speedups is not None and _requested != "python"

BACKEND = "compiled" if _use_compiled else "python"
HAVE_SPEEDUPS = _speedups is not None


def _conv_mod_compiled(x: list[int], y: list[int], n_out: int, m: int) -> list[int]:
    if m == 2:
        return _speedups.conv_mod2_packed(x, y, n_out)
    terms = min(len(x), len(y), n_out + 1)
    if n_out <= SCHOOLBOOK_MAX_ORDER and (m - 1) * (m - 1) * terms < 2**63:
        return _speedups.conv_mod_small(x, y, n_out, m)
    return fallback.conv_mod(x, y, n_out, m)


conv_mod = _conv_mod_compiled if _use_compiled else fallback.conv_mod
