"""Complex roots of domination polynomials.

Numeric roots come from Aberth-Ehrlich simultaneous iteration in double
precision followed by guarded Newton polishing.  Real roots are certified
separately and exactly with Sturm sequences over the integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .errors import InvalidPolynomial, NoConvergence
from .polynomial import DominationPolynomial, domination_number

DEFAULT_TOL = 1e-9
CORRECTION_TOL = 1e-13
MAX_ITER = 200
POLISH_STEPS = 5
REFINE_SWEEPS = 50
RELAXED_RESIDUAL = 1e-8
CLUSTER_RADIUS = 1e-4
INITIAL_ANGLE = 0.4


@dataclass(frozen=True)
class ComplexRootSet:
    """Nonzero roots of ``p`` plus the multiplicity of the root at 0.

    ``residuals[k]`` is the backward-relative residual
    ``|q(r)| / sum_i |q_i| |r|^i`` of root ``r`` in the deflated polynomial
    ``q = p / x^zero_multiplicity``.  ``clusters`` lists index groups of roots
    closer than ``CLUSTER_RADIUS`` to one another (numerically multiple roots).
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    zero_multiplicity: int
    clusters: tuple[tuple[int, ...], ...] = ()
    iterations: int = 0

    @property
    def degree(self) -> int:
        return len(self.roots) + self.zero_multiplicity

    def to_json(self) -> dict:
        return {
            "zero_multiplicity": self.zero_multiplicity,
            "roots": [
                {"re": r.real, "im": r.imag, "residual": res}
                for r, res in zip(self.roots, self.residuals)
            ],
        }


@dataclass(frozen=True)
class RootClassification:
    zero_count: int
    negative_real: list[float]
    nonreal_pairs: list[tuple[complex, complex]]
    has_positive_real_part: bool
    positive_real: list[float] = field(default_factory=list)
    clusters: list[tuple[complex, int]] = field(default_factory=list)

    @property
    def distinct_real_nonzero(self) -> int:
        """Distinct nonzero real roots, counting each cluster once."""
        singles = len(self.negative_real) + len(self.positive_real)
        clustered = sum(m for c, m in self.clusters if abs(c.imag) < _CLUSTER_REAL_TOL)
        real_clusters = sum(1 for c, m in self.clusters if abs(c.imag) < _CLUSTER_REAL_TOL)
        return singles - clustered + real_clusters

    def to_json(self) -> dict:
        return {
            "zero_count": self.zero_count,
            "negative_real": self.negative_real,
            "positive_real": self.positive_real,
            "nonreal_pairs": [
                [{"re": a.real, "im": a.imag}, {"re": b.real, "im": b.imag}]
                for a, b in self.nonreal_pairs
            ],
            "has_positive_real_part": self.has_positive_real_part,
            "clusters": [
                {"re": c.real, "im": c.imag, "multiplicity": m} for c, m in self.clusters
            ],
        }


_CLUSTER_REAL_TOL = CLUSTER_RADIUS


# -- numeric root finding ---------------------------------------------------


def _horner_with_derivative(c: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Values of the polynomial (ascending coefficients ``c``) and its derivative at ``z``."""
    p = np.full_like(z, c[-1])
    dp = np.zeros_like(z)
    for a in c[-2::-1]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def _scaled_coefficients(coeffs: Sequence[int]) -> np.ndarray:
    top = max(coeffs)
    return np.array([float(Fraction(c, top)) for c in coeffs], dtype=complex)


def _cauchy_bound(c: np.ndarray) -> float:
    """Cauchy's bound: the positive root of |a_d| x^d - sum_{i<d} |a_i| x^i.

    Found by bisection on sum_i |a_i/a_d| x^(i-d) = 1, which is decreasing in x.
    """
    d = len(c) - 1
    b = np.abs(c[:-1]) / abs(c[-1])
    powers = np.arange(d) - d

    def excess(x):
        return float(np.sum(b * x ** powers.astype(float))) - 1.0

    lo, hi = 0.0, 1.0 + float(b.max())
    if excess(hi) > 0:
        return hi
    lo = hi / 2
    while excess(lo) < 0 and lo > 1e-300:
        hi, lo = lo, lo / 2
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0:
            lo = mid
        else:
            hi = mid
    return hi


def _clusters(z: np.ndarray) -> tuple[tuple[int, ...], ...]:
    parent = list(range(len(z)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if abs(z[i] - z[j]) < CLUSTER_RADIUS:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(z)):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(g) for g in groups.values() if len(g) > 1)


def aberth(c: np.ndarray, max_iter: int = MAX_ITER) -> tuple[np.ndarray, int, bool]:
    """Aberth-Ehrlich iteration on ascending coefficients ``c`` (nonzero constant term).

    Starts from equally spaced points on the Cauchy-bound circle, rotated by a
    fixed angle so the start is deterministic and avoids the real axis.
    """
    d = len(c) - 1
    radius = _cauchy_bound(c)
    z = radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + INITIAL_ANGLE))
    for it in range(1, max_iter + 1):
        p, dp = _horner_with_derivative(c, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = p / dp
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w) & (p != 0), w, 0.0)
        z = z - w
        if np.all(np.abs(w) < CORRECTION_TOL * (1 + np.abs(z))):
            return z, it, True
    return z, max_iter, False


def _exact_eval(coeffs: Sequence[int], z: complex) -> complex:
    """p(z) for integer coefficients, computed without rounding and rounded once.

    ``z`` is split into integer mantissas over a shared power of two and the
    Horner recurrence runs over the Gaussian integers.
    """
    re_num, re_den = float(z.real).as_integer_ratio()
    im_num, im_den = float(z.imag).as_integer_ratio()
    den = max(re_den, im_den)
    zr, zi = re_num * (den // re_den), im_num * (den // im_den)
    ar, ai = 0, 0
    scale = 1
    for c in reversed(coeffs):
        ar, ai = ar * zr - ai * zi, ar * zi + ai * zr
        ar += c * scale
        scale *= den
    scale //= den
    return complex(float(Fraction(ar, scale)), float(Fraction(ai, scale)))


def _exact_residuals(coeffs: Sequence[int], z: np.ndarray) -> np.ndarray:
    absc = [float(abs(c)) for c in coeffs]
    out = np.empty(len(z))
    for k, r in enumerate(z):
        scale = 0.0
        for a in reversed(absc):
            scale = scale * abs(r) + a
        out[k] = abs(_exact_eval(coeffs, r)) / scale
    return out


def _refine(coeffs: Sequence[int], z: np.ndarray, sweeps: int, frozen: np.ndarray):
    """Gauss-Seidel Aberth sweeps with p and p' evaluated exactly.

    Returns the refined roots and whether every non-frozen root's last
    correction fell below the convergence threshold.
    """
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    z = z.copy()
    done = frozen.copy()
    for _ in range(sweeps):
        if done.all():
            break
        for k in np.flatnonzero(~done):
            pk = _exact_eval(coeffs, z[k])
            if pk == 0:
                done[k] = True
                continue
            dk = _exact_eval(deriv, z[k])
            if dk == 0:
                continue
            ratio = pk / dk
            with np.errstate(divide="ignore", invalid="ignore"):
                w = ratio / (1.0 - ratio * np.sum(1.0 / (z[k] - np.delete(z, k))))
            if not np.isfinite(w):
                continue
            z[k] -= w
            if abs(w) < CORRECTION_TOL * (1 + abs(z[k])):
                done[k] = True
    return z, bool(done.all())


def _newton_polish(coeffs: Sequence[int], z: np.ndarray, steps: int, frozen: np.ndarray) -> np.ndarray:
    """Plain Newton steps, each kept only if the exact residual does not grow."""
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    z = z.copy()
    for k in np.flatnonzero(~frozen):
        best = abs(_exact_eval(coeffs, z[k]))
        for _ in range(steps):
            if best == 0:
                break
            dk = _exact_eval(deriv, z[k])
            if dk == 0:
                break
            cand = z[k] - _exact_eval(coeffs, z[k]) / dk
            val = abs(_exact_eval(coeffs, cand))
            if not val <= best or cand == z[k]:
                break
            z[k], best = cand, val
    return z


def find_all_roots(
    p: DominationPolynomial,
    max_iter: int = MAX_ITER,
    polish_steps: int = POLISH_STEPS,
    refine_sweeps: int = REFINE_SWEEPS,
) -> ComplexRootSet:
    """Locate every root of ``p``; the root at 0 is split off exactly first.

    Aberth-Ehrlich runs in double precision on the max-normalised deflated
    polynomial.  Refinement sweeps and Newton polishing then evaluate with the
    exact integer coefficients, which is what lets ill-conditioned roots
    settle, multiple roots included.  Roots closer than ``CLUSTER_RADIUS``
    are reported as clusters; if refinement stalls the result is still
    accepted when every residual is within ``RELAXED_RESIDUAL``.
    """
    deg = p.degree
    if deg < 1:
        raise InvalidPolynomial("root finding needs degree >= 1")
    zmult = domination_number(p)
    deflated = list(p.coeffs[zmult:deg + 1])
    if len(deflated) == 1:
        return ComplexRootSet((), (), zmult)

    c = _scaled_coefficients(deflated)
    z, iters, _ = aberth(c, max_iter)
    # exact evaluation resolves multiple roots too, so nothing is frozen here
    z, converged = _refine(deflated, z, refine_sweeps, np.zeros(len(z), dtype=bool))
    clusters = _clusters(z)
    in_cluster = np.zeros(len(z), dtype=bool)
    for grp in clusters:
        in_cluster[list(grp)] = True
    # plain Newton only crawls on a multiple root
    z = _newton_polish(deflated, z, polish_steps, in_cluster)
    residuals = _exact_residuals(deflated, z)

    if not (np.all(np.isfinite(z)) and (converged or residuals.max() <= RELAXED_RESIDUAL)):
        raise NoConvergence(
            f"root iteration did not converge ({iters} Aberth iterations)",
            z.tolist(), residuals.tolist(), zmult,
        )
    return ComplexRootSet(
        tuple(complex(r) for r in z),
        tuple(float(r) for r in residuals),
        zmult,
        clusters,
        iters,
    )


def reconstruct(rs: ComplexRootSet) -> np.ndarray:
    """Monic polynomial (ascending coefficients) with the roots in ``rs``."""
    out = np.array([1.0 + 0j])
    for r in list(rs.roots) + [0.0] * rs.zero_multiplicity:
        out = np.concatenate([[0], out]) - r * np.concatenate([out, [0]])
    return out


def reconstruction_error(p: DominationPolynomial, rs: ComplexRootSet) -> float:
    """Max coefficient error of the rebuilt polynomial, relative to the largest coefficient of ``p``."""
    lead = p.coeffs[p.degree]
    target = np.array([float(Fraction(c, lead)) for c in p.coeffs[: p.degree + 1]])
    rec = reconstruct(rs)
    return float(np.max(np.abs(rec - target)) / np.max(np.abs(target)))


# -- classification ---------------------------------------------------------


def classify(rs: ComplexRootSet, tol: float = DEFAULT_TOL) -> RootClassification:
    """Split roots into zero, real and conjugate-pair groups.

    A root counts as real when ``|Im| < tol``, or when it belongs to a cluster
    whose centroid is real to within the cluster radius (split multiple real
    roots leave the axis by about sqrt(machine epsilon)).
    """
    roots = list(rs.roots)
    cluster_info = []
    real_idx: set[int] = set()
    for grp in rs.clusters:
        centroid = complex(np.mean([roots[i] for i in grp]))
        cluster_info.append((centroid, len(grp)))
        if abs(centroid.imag) < max(tol, _CLUSTER_REAL_TOL):
            real_idx.update(grp)
    for i, r in enumerate(roots):
        if abs(r.imag) < tol:
            real_idx.add(i)

    negative, positive = [], []
    for i in sorted(real_idx):
        x = roots[i].real
        (positive if x > 0 else negative).append(x)

    upper = [r for i, r in enumerate(roots) if i not in real_idx and r.imag > 0]
    lower = [r for i, r in enumerate(roots) if i not in real_idx and r.imag < 0]
    pairs = []
    for r in sorted(upper, key=lambda w: (w.real, w.imag)):
        j = min(range(len(lower)), key=lambda k: abs(lower[k] - r.conjugate()))
        pairs.append((r, lower.pop(j)))
    if lower:
        raise InvalidPolynomial("nonreal roots do not close under conjugation")

    has_pos = any(r.real > tol for r in roots)
    return RootClassification(
        zero_count=rs.zero_multiplicity,
        negative_real=sorted(negative),
        nonreal_pairs=pairs,
        has_positive_real_part=has_pos,
        positive_real=sorted(positive),
        clusters=cluster_info,
    )


# -- exact real-root certification -------------------------------------------


def _primitive(poly: list[Fraction] | list[int]) -> list[int]:
    """Scale by a positive rational so coefficients are coprime integers (sign kept)."""
    fr = [Fraction(c) for c in poly]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _strip(poly: list) -> list:
    while len(poly) > 1 and poly[-1] == 0:
        poly = poly[:-1]
    return poly


def _remainder(a: list[int], b: list[int]) -> list[Fraction]:
    rem = [Fraction(x) for x in a]
    lead = Fraction(b[-1])
    db = len(b) - 1
    for k in range(len(rem) - 1, db - 1, -1):
        q = rem[k] / lead
        if q:
            for j in range(db + 1):
                rem[k - db + j] -= q * b[j]
    return _strip(rem[:db] or [Fraction(0)])


def _quotient(a: list[int], b: list[int]) -> list[Fraction]:
    """Exact quotient a / b; b must divide a."""
    rem = [Fraction(x) for x in a]
    db = len(b) - 1
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        q[k - db] = rem[k] / b[-1]
        for j in range(db + 1):
            rem[k - db + j] -= q[k - db] * b[j]
    return q


def sturm_sequence(coeffs: Sequence[int]) -> list[list[int]]:
    """Sturm chain p, p', -rem(...), ... with content removed at every step.

    Only positive rescaling is applied, so sign sequences are those of the
    textbook chain.  When p has repeated roots every member is divided by the
    last one, gcd(p, p').
    """
    p = _strip([int(c) for c in coeffs])
    if len(p) == 1:
        return [p]
    chain = [_primitive(p), _primitive([i * c for i, c in enumerate(p)][1:])]
    while len(chain[-1]) > 1:
        r = _remainder(chain[-2], chain[-1])
        if all(x == 0 for x in r):
            break
        chain.append(_primitive([-x for x in r]))
    g = chain[-1]
    if len(g) > 1:
        # divide out gcd(p, p') so variations stay correct at multiple roots
        chain = [_primitive(_quotient(q, g)) for q in chain]
    return chain


def _sign_at(poly: list[int], x) -> int:
    if x == math.inf or x == -math.inf:
        lead = poly[-1]
        s = 1 if lead > 0 else -1
        if x < 0 and (len(poly) - 1) % 2:
            s = -s
        return s
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def sign_variations(chain: list[list[int]], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _endpoint(x):
    if isinstance(x, str):
        t = x.strip().lower()
        if t in ("-inf", "-infinity", "-oo"):
            return -math.inf
        if t in ("inf", "+inf", "infinity", "+infinity", "oo", "+oo"):
            return math.inf
        return Fraction(t)
    if isinstance(x, float):
        return x if math.isinf(x) else Fraction(x)
    return Fraction(x)


def _endpoint_str(x) -> str:
    if x == math.inf:
        return "+inf"
    if x == -math.inf:
        return "-inf"
    return str(x)


@dataclass(frozen=True)
class RealRootCertificate:
    """Exact count of distinct real roots on an interval.

    The interval is open ``(a, b)`` unless ``right_closed`` is set, in which
    case it is ``(a, b]``.
    """

    a: object
    b: object
    count: int
    right_closed: bool = False

    def to_json(self) -> dict:
        return {
            "a": _endpoint_str(self.a),
            "b": _endpoint_str(self.b),
            "right_closed": self.right_closed,
            "count": self.count,
        }


def sturm_real_root_count(
    p: DominationPolynomial | Sequence[int], a, b, right_closed: bool = False
) -> RealRootCertificate:
    """Distinct real roots of ``p`` in ``(a, b)`` (or ``(a, b]``), in exact arithmetic."""
    coeffs = p.coeffs if isinstance(p, DominationPolynomial) else p
    a, b = _endpoint(a), _endpoint(b)
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    chain = sturm_sequence(coeffs)
    count = sign_variations(chain, a) - sign_variations(chain, b)
    if not right_closed and not math.isinf(b) and _sign_at(chain[0], b) == 0:
        count -= 1
    return RealRootCertificate(a, b, count, right_closed)


def certify_no_nonzero_real_roots(p: DominationPolynomial, eps=0) -> bool:
    """True iff ``p`` has no real root other than 0.

    Negative side: Sturm count on ``(-inf, -eps]`` (``(-inf, 0)`` for eps = 0).
    Positive side: structural, since every coefficient is nonnegative and some
    coefficient is positive, ``p(x) > 0`` for all ``x > 0``.
    """
    eps = Fraction(eps)
    if eps:
        neg = sturm_real_root_count(p, -math.inf, -eps, right_closed=True).count
    else:
        neg = sturm_real_root_count(p, -math.inf, 0).count
    positive_free = all(c >= 0 for c in p.coeffs) and p.coeffs[p.degree] > 0
    return neg == 0 and positive_free


def certificate_report(p: DominationPolynomial) -> dict:
    """Negative and positive half-line Sturm counts plus the combined verdict."""
    neg = sturm_real_root_count(p, -math.inf, 0)
    pos = sturm_real_root_count(p, 0, math.inf, right_closed=True)
    return {
        "negative": neg.to_json(),
        "positive": pos.to_json(),
        "no_nonzero_real_roots": certify_no_nonzero_real_roots(p),
    }
