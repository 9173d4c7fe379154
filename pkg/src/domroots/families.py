"""Named graph families, batch root-location checks and root clouds.

Two families carry the root-location results:

``paper_sec2``
    Friendship graphs F_k (k triangles sharing one vertex) for odd k >= 7.
    D(F_k, x) = (x^2 + 2x)^k + x (1 + x)^(2k).  For odd k the only real root
    is 0; from k = 7 on some roots have positive real part.
``paper_sec4``
    K_{1,n}[K_m], the lexicographic product of a star with a clique.  Its
    polynomial is D(K_{1,n}, (1+x)^m - 1); root clouds over growing n are the
    empirical density probe.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import DomRootsError, InvalidSpec, TooLarge
from .graph import MAX_VERTEX_CAP, Graph, from_edges
from .lexprod import lex_product_graph, lex_product_polynomial
from .polynomial import DEFAULT_ENUMERATION_CAP, DominationPolynomial, count_by_enumeration
from .roots import DEFAULT_TOL, RELAXED_RESIDUAL, certify_no_nonzero_real_roots, classify, find_all_roots


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], cap=MAX_VERTEX_CAP)


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], cap=MAX_VERTEX_CAP)


def complete(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], cap=MAX_VERTEX_CAP)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], cap=MAX_VERTEX_CAP)


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def friendship(k: int) -> Graph:
    """F_k: vertex 0 joined to k disjoint edges (2i-1, 2i)."""
    edges = []
    for i in range(1, k + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return from_edges(2 * k + 1, edges, cap=MAX_VERTEX_CAP)


def star_clique_product(n: int, m: int) -> Graph:
    return lex_product_graph(star(n), complete(m))


@dataclass(frozen=True)
class Family:
    arity: int
    build: Callable[..., Graph]
    valid: Callable[..., bool]
    order: Callable[..., int]
    description: str


FAMILIES: dict[str, Family] = {
    "path": Family(1, path, lambda n: n >= 1, lambda n: n, "path P_n, n >= 1"),
    "cycle": Family(1, cycle, lambda n: n >= 3, lambda n: n, "cycle C_n, n >= 3"),
    "complete": Family(1, complete, lambda n: n >= 1, lambda n: n, "complete graph K_n, n >= 1"),
    "complete_bipartite": Family(
        2, complete_bipartite, lambda a, b: a >= 1 and b >= 1, lambda a, b: a + b,
        "complete bipartite K_{a,b}, a, b >= 1",
    ),
    "star": Family(1, star, lambda k: k >= 1, lambda k: k + 1, "star K_{1,k}, k >= 1"),
    "friendship": Family(
        1, friendship, lambda k: k >= 1, lambda k: 2 * k + 1, "friendship graph F_k, k >= 1"
    ),
    "paper_sec2": Family(
        1, friendship, lambda k: k >= 7 and k % 2 == 1, lambda k: 2 * k + 1,
        "friendship graph F_k for odd k >= 7",
    ),
    "paper_sec4": Family(
        2, star_clique_product, lambda n, m: n >= 1 and m >= 1, lambda n, m: (n + 1) * m,
        "lexicographic product K_{1,n}[K_m], n, m >= 1",
    ),
}


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def family(self) -> Family:
        try:
            fam = FAMILIES[self.family_id]
        except KeyError:
            raise InvalidSpec(f"unknown family {self.family_id!r}; known: {sorted(FAMILIES)}") from None
        if len(self.params) != fam.arity:
            raise InvalidSpec(f"{self.family_id} takes {fam.arity} parameter(s), got {len(self.params)}")
        if not fam.valid(*self.params):
            raise InvalidSpec(f"bad parameters {list(self.params)} for {fam.description}")
        return fam

    def order(self) -> int:
        return self.family().order(*self.params)

    def label(self) -> str:
        return ";".join(str(p) for p in self.params)


def generate(spec: FamilySpec, cap: int = MAX_VERTEX_CAP) -> Graph:
    fam = spec.family()
    order = fam.order(*spec.params)
    if order > min(cap, MAX_VERTEX_CAP):
        raise TooLarge(f"{spec.family_id}{list(spec.params)} has order {order} above cap {cap}")
    return fam.build(*spec.params)


def member_polynomial(
    spec: FamilySpec, cap: int = DEFAULT_ENUMERATION_CAP, workers: int | None = None
) -> DominationPolynomial:
    """Domination polynomial of a family member; products use the closed form."""
    order = spec.order()
    if order > cap:
        raise TooLarge(f"{spec.family_id}{list(spec.params)} has order {order} above enumeration cap {cap}")
    if spec.family_id == "paper_sec4":
        n, m = spec.params
        return lex_product_polynomial(star(n), complete(m), form="composition", cap=cap, workers=workers)
    return count_by_enumeration(generate(spec), cap=cap, workers=workers)


def members(family_id: str, k_range: Iterable[int], fixed: Sequence[int] = ()) -> list[FamilySpec]:
    """Specs sweeping the first parameter over ``k_range``; ``fixed`` supplies the rest.

    Values outside the family's documented range are skipped.
    """
    fam = FAMILIES.get(family_id)
    if fam is None:
        raise InvalidSpec(f"unknown family {family_id!r}; known: {sorted(FAMILIES)}")
    if len(fixed) != fam.arity - 1:
        raise InvalidSpec(f"{family_id} needs {fam.arity - 1} fixed parameter(s), got {len(fixed)}")
    out = []
    for k in k_range:
        params = (k, *fixed)
        if fam.valid(*params):
            out.append(FamilySpec(family_id, params))
    return out


def verify_no_nonzero_real_roots(
    family_id: str,
    k_range: Iterable[int],
    fixed: Sequence[int] = (),
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int | None = None,
) -> list[dict]:
    out = []
    for spec in members(family_id, k_range, fixed):
        p = member_polynomial(spec, cap, workers)
        out.append({
            "family": family_id,
            "params": list(spec.params),
            "order": p.n,
            "passed": certify_no_nonzero_real_roots(p),
        })
    return out


def verify_positive_real_part(
    family_id: str,
    k_range: Iterable[int],
    tol: float = DEFAULT_TOL,
    fixed: Sequence[int] = (),
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int | None = None,
) -> list[dict]:
    out = []
    for spec in members(family_id, k_range, fixed):
        rs = find_all_roots(member_polynomial(spec, cap, workers))
        cls = classify(rs, tol)
        out.append({
            "family": family_id,
            "params": list(spec.params),
            "has_positive_real_part": cls.has_positive_real_part,
            "max_real_part": max((r.real for r in rs.roots), default=0.0),
        })
    return out


# -- root clouds --------------------------------------------------------------


@dataclass(frozen=True)
class RootPoint:
    re: float
    im: float
    family: str
    params: tuple[int, ...]
    multiplicity: int = 1


@dataclass(frozen=True)
class RootCloud:
    """Nonzero roots gathered over a family sweep, with provenance.

    Clustered (numerically multiple) roots are stored once at their centroid
    with the cluster size as multiplicity.
    """

    points: tuple[RootPoint, ...] = ()
    errors: tuple[dict, ...] = ()
    tolerance: float = RELAXED_RESIDUAL
    _coverage_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def merge(self, other: "RootCloud") -> "RootCloud":
        pts = sorted(self.points + other.points, key=lambda p: (p.params, p.re, p.im))
        return RootCloud(tuple(pts), self.errors + other.errors, max(self.tolerance, other.tolerance))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["re", "im", "family", "param", "multiplicity"])
        for p in self.points:
            w.writerow([repr(p.re), repr(p.im), p.family, ";".join(map(str, p.params)), p.multiplicity])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "RootCloud":
        rows = csv.DictReader(io.StringIO(text))
        pts = [
            RootPoint(
                float(r["re"]), float(r["im"]), r["family"],
                tuple(int(x) for x in r["param"].split(";") if x), int(r["multiplicity"]),
            )
            for r in rows
        ]
        return cls(tuple(pts))


def member_cloud(spec: FamilySpec, cap: int = DEFAULT_ENUMERATION_CAP, workers: int | None = None) -> RootCloud:
    rs = find_all_roots(member_polynomial(spec, cap, workers))
    clustered = {i for grp in rs.clusters for i in grp}
    pts = []
    for grp in rs.clusters:
        z = sum(rs.roots[i] for i in grp) / len(grp)
        pts.append(RootPoint(z.real, z.imag, spec.family_id, spec.params, len(grp)))
    for i, z in enumerate(rs.roots):
        if i not in clustered:
            pts.append(RootPoint(z.real, z.imag, spec.family_id, spec.params, 1))
    pts.sort(key=lambda p: (p.params, p.re, p.im))
    return RootCloud(tuple(pts), (), max(rs.residuals, default=0.0))


def collect_roots(
    family_id: str,
    k_range: Iterable[int],
    fixed: Sequence[int] = (),
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int | None = None,
) -> RootCloud:
    """Accumulate nonzero roots over a sweep; failing members land in ``errors``."""
    cloud = RootCloud()
    for spec in members(family_id, k_range, fixed):
        try:
            part = member_cloud(spec, cap, workers)
        except DomRootsError as exc:
            part = RootCloud(errors=({"params": list(spec.params), "error": type(exc).__name__,
                                      "message": str(exc)},))
        cloud = cloud.merge(part)
    return cloud


Window = tuple[float, float, float, float]


def coverage(cloud: RootCloud, window: Window, grid: int) -> float:
    """Fraction of the ``grid x grid`` cells of ``window`` holding at least one point.

    ``window`` is ``(re_min, re_max, im_min, im_max)``, closed on all sides.
    """
    x0, x1, y0, y1 = window
    if grid < 1:
        raise ValueError("grid must be at least 1")
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"degenerate window {window}")
    key = (tuple(window), grid)
    if key in cloud._coverage_cache:
        return cloud._coverage_cache[key]
    cells = set()
    for p in cloud.points:
        if x0 <= p.re <= x1 and y0 <= p.im <= y1:
            i = min(math.floor((p.re - x0) / (x1 - x0) * grid), grid - 1)
            j = min(math.floor((p.im - y0) / (y1 - y0) * grid), grid - 1)
            cells.add((i, j))
    frac = len(cells) / (grid * grid)
    cloud._coverage_cache[key] = frac
    return frac


def cumulative_coverage(
    family_id: str,
    k_range: Iterable[int],
    window: Window,
    grid: int,
    fixed: Sequence[int] = (),
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int | None = None,
) -> tuple[RootCloud, list[dict]]:
    """Coverage after each successive member of the sweep, plus the final cloud."""
    cloud = RootCloud()
    seq = []
    for spec in members(family_id, k_range, fixed):
        try:
            part = member_cloud(spec, cap, workers)
        except DomRootsError as exc:
            part = RootCloud(errors=({"params": list(spec.params), "error": type(exc).__name__,
                                      "message": str(exc)},))
        cloud = cloud.merge(part)
        seq.append({"params": list(spec.params), "points": len(cloud.points),
                    "coverage": coverage(cloud, window, grid)})
    return cloud, seq
