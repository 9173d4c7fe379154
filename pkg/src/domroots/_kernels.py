"""Compiled inner loops for exhaustive subset enumeration.

Subsets of an ``n``-vertex graph are split into a low half (the first ``L``
vertices) and a high half.  Each half gets a table mapping a local subset
index to the OR of its members' closed-neighborhood masks, so testing one
subset costs a single OR and compare.
"""

from __future__ import annotations

import numpy as np
from numba import njit

LOW_BITS = 16


@njit(cache=True, nogil=True)
def or_table(masks):
    """OR-accumulated masks and popcounts for every subset of ``masks``."""
    k = masks.size
    size = 1 << k
    acc = np.zeros(size, np.uint64)
    pc = np.zeros(size, np.int64)
    for v in range(k):
        step = 1 << v
        m = masks[v]
        for s in range(step):
            acc[s | step] = acc[s] | m
            pc[s | step] = pc[s] + 1
    return acc, pc


@njit(cache=True, nogil=True)
def count_dominating_block(lo_or, lo_pc, hi_or, hi_pc, full, h_start, h_stop, n):
    """Per-size counts of dominating subsets whose high part lies in [h_start, h_stop)."""
    counts = np.zeros(n + 1, np.int64)
    lo_all = np.uint64(0)
    for x in lo_or:
        lo_all |= x
    for h in range(h_start, h_stop):
        a = hi_or[h]
        if (a | lo_all) != full:
            continue
        base = hi_pc[h]
        for l in range(lo_or.size):
            if (a | lo_or[l]) == full:
                counts[base + lo_pc[l]] += 1
    return counts


@njit(cache=True, nogil=True)
def isolation_profile_block(closed, open_, full, t_start, t_stop, n):
    """Count dominating sets T by (#vertices isolated in G[T], #non-isolated).

    Returns an ``(n+1, n+1)`` table indexed ``[isolated, non_isolated]``.
    """
    table = np.zeros((n + 1, n + 1), np.int64)
    for t in range(t_start, t_stop):
        tt = np.uint64(t)
        cov = np.uint64(0)
        iso = 0
        size = 0
        for v in range(n):
            if (tt >> np.uint64(v)) & np.uint64(1):
                cov |= closed[v]
                size += 1
                if (open_[v] & tt) == np.uint64(0):
                    iso += 1
        if cov == full:
            table[iso, size - iso] += 1
    return table
