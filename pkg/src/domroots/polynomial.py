"""Exact domination polynomials.

Two independent counting routes are provided:

* :func:`count_by_enumeration` walks every vertex subset and tests domination
  with precomputed closed-neighborhood masks (compiled kernel, data parallel).
* :func:`count_by_inclusion_exclusion` sums signed binomials over "witness"
  sets W of vertices required to stay undominated,
  ``d(G, i) = sum_W (-1)^|W| C(n - |N[W]|, i)``, vectorised with numpy.

Both return the same :class:`DominationPolynomial`; the second exists only to
check the first.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import InvalidPolynomial, TooLarge
from .graph import Graph

DEFAULT_ENUMERATION_CAP = 28
MAX_ENUMERATION_CAP = 32


@dataclass(frozen=True)
class DominationPolynomial:
    """``coeffs[i]`` is the number of dominating sets of size ``i`` in a graph of order ``n``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.n + 1:
            raise InvalidPolynomial(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise InvalidPolynomial("coefficients must be nonnegative")

    @property
    def degree(self) -> int:
        for i in range(self.n, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "DominationPolynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["n"]), tuple(int(c) for c in obj["coeffs"]))

    def __str__(self) -> str:
        terms = []
        for i in range(self.n, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1 and i:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms) or "0"


def _check_cap(g: Graph, cap: int) -> None:
    if cap > MAX_ENUMERATION_CAP:
        raise TooLarge(f"enumeration cap {cap} above hard limit {MAX_ENUMERATION_CAP}")
    if g.n > cap:
        raise TooLarge(f"graph order {g.n} exceeds enumeration cap {cap}")


def _split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for k in range(parts):
        hi = lo + step + (1 if k < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def run_blocks(kernel, ranges, workers: int | None, make_args):
    """Run ``kernel(*make_args(lo, hi))`` over disjoint ranges; results come back in range order."""
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(ranges) == 1:
        return [kernel(*make_args(lo, hi)) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(kernel, *make_args(lo, hi)) for lo, hi in ranges]
        return [f.result() for f in futures]


def count_by_enumeration(
    g: Graph, cap: int = DEFAULT_ENUMERATION_CAP, workers: int | None = None
) -> DominationPolynomial:
    """Count dominating sets of every size by walking all ``2^n`` subsets."""
    _check_cap(g, cap)
    n = g.n
    closed = np.array(g.closed_masks(), dtype=np.uint64)
    low = min(n, _kernels.LOW_BITS)
    lo_or, lo_pc = _kernels.or_table(closed[:low])
    hi_or, hi_pc = _kernels.or_table(closed[low:])
    full = np.uint64(g.full_mask)

    if workers is None:
        workers = os.cpu_count() or 1
    ranges = _split_ranges(hi_or.size, max(1, workers) * 4)
    parts = run_blocks(
        _kernels.count_dominating_block,
        ranges,
        workers,
        lambda lo, hi: (lo_or, lo_pc, hi_or, hi_pc, full, lo, hi, n),
    )
    totals = [0] * (n + 1)
    for part in parts:
        for i, c in enumerate(part.tolist()):
            totals[i] += c
    return DominationPolynomial(n, tuple(totals))


def _witness_masks(closed: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """N[W] for every W over ``closed`` together with the parity of |W|."""
    acc = np.zeros(1, dtype=np.uint64)
    odd = np.zeros(1, dtype=bool)
    for m in closed:
        acc = np.concatenate([acc, acc | np.uint64(m)])
        odd = np.concatenate([odd, ~odd])
    return acc, odd


def count_by_inclusion_exclusion(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> DominationPolynomial:
    """Signed sum over undominated witness sets; independent of the enumeration kernel."""
    _check_cap(g, cap)
    n = g.n
    closed = g.closed_masks()
    low = min(n, 14)
    lo_acc, lo_odd = _witness_masks(closed[:low])
    hi_acc, hi_odd = _witness_masks(closed[low:])

    # signed[s] = sum over W with |N[W]| = s of (-1)^|W|
    signed = np.zeros(n + 1, dtype=np.int64)
    even_sel, odd_sel = ~lo_odd, lo_odd
    for h_mask, h_odd in zip(hi_acc.tolist(), hi_odd.tolist()):
        sizes = np.bitwise_count(lo_acc | np.uint64(h_mask)).astype(np.int64)
        plus = np.bincount(sizes[even_sel], minlength=n + 1)
        minus = np.bincount(sizes[odd_sel], minlength=n + 1)
        signed += (minus - plus) if h_odd else (plus - minus)

    weights = [int(w) for w in signed]
    coeffs = tuple(
        sum(w * comb(n - s, i) for s, w in enumerate(weights) if w and s <= n - i)
        for i in range(n + 1)
    )
    return DominationPolynomial(n, coeffs)


def domination_number(p: DominationPolynomial) -> int:
    for i, c in enumerate(p.coeffs):
        if c:
            return i
    raise InvalidPolynomial("all-zero polynomial has no domination number")


def evaluate_complex(p: DominationPolynomial, z: complex) -> complex:
    """Horner evaluation in double precision; each coefficient is rounded to nearest by ``float``."""
    z = complex(z)
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + float(c)
    return acc


def evaluate_exact(p: DominationPolynomial, q: Rational | int | str) -> Fraction:
    q = Fraction(q)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc
