"""Exact integer polynomial arithmetic on coefficient lists (index = power)."""

from __future__ import annotations

from math import comb
from typing import Sequence

IntPoly = list[int]


def trim(p: Sequence[int]) -> IntPoly:
    out = list(p)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0]


def add(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def scale(p: Sequence[int], k: int) -> IntPoly:
    return trim([k * c for c in p])


def mul(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p: Sequence[int], k: int) -> IntPoly:
    result: IntPoly = [1]
    base = list(p)
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def compose(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    """p(q(x)) by Horner's scheme."""
    out: IntPoly = [0]
    for c in reversed(p):
        out = add(mul(out, q), [c])
    return out


def one_plus_x_pow_minus_one(m: int) -> IntPoly:
    """(1 + x)^m - 1, the domination polynomial of K_m."""
    return [0] + [comb(m, i) for i in range(1, m + 1)]
