"""Minimality analysis and extremal enumeration for the two families.

A lattice graph is minimal (relative to its base for the radius-2 family,
absolutely for the radius-3 family) when family membership holds but breaks
under every single-edge deletion; because membership is closed upward under
edge addition, single deletions decide minimality against the whole
spanning-subgraph order.  This module computes the cover-index calculus
behind those checks, the edge-count bounds for minimal graphs with their
tightness characterizations, the per-vertex edge-choice sets whose products
realize every maximum-size minimal lattice, and the exhaustive minimal
enumerations at k = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import (
    EnumerationCapExceeded,
    IndexOutOfRange,
    NotMember,
    NotMinimal,
    VertexNotEligible,
    WrongVertexSet,
)
from .graph import BaseVertex, Edge, Graph, LatticeVector, LatticeVertex, Vertex, degree
from .families import (
    MembershipReport,
    _require_base,
    _require_lattice,
    base_null,
    closed_neighborhood,
    gamma,
    lattice_complete,
    lattice_vertices,
    member_b,
    member_c,
    s_set,
    scaffold,
    span_lattice,
)

#: Largest choice-product materialized by enumerate_q.
DEFAULT_Q_CAP = 100_000


# -- the cover-index calculus (radius-2 family) -----------------------------


@dataclass(frozen=True)
class CoverIndexSets:
    """For a fixed base and lattice: which coordinates constrain each
    vector (J), which are actually served (I), per edge (I_x(e)), and which
    an edge serves uniquely (the tilde sets)."""

    k: int
    j_sets: dict[LatticeVector, frozenset[int]]
    i_sets: dict[LatticeVector, frozenset[int]]
    i_edge: dict[tuple[LatticeVector, Edge], frozenset[int]]
    i_tilde: dict[tuple[LatticeVector, Edge], frozenset[int]]

    def j(self, x: LatticeVector) -> frozenset[int]:
        return self.j_sets.get(x, frozenset())

    def i(self, x: LatticeVector) -> frozenset[int]:
        return self.i_sets.get(x, frozenset())

    def i_of(self, x: LatticeVector, e: Edge) -> frozenset[int]:
        return self.i_edge.get((x, e), frozenset())

    def i_tilde_of(self, x: LatticeVector, e: Edge) -> frozenset[int]:
        return self.i_tilde.get((x, e), frozenset())


def cover_index_sets(base: Graph, lattice: Graph) -> CoverIndexSets:
    """Evaluate the whole index calculus by direct definition."""
    k = _require_base(base)
    _require_lattice(lattice, k, 2)
    hoods = {i: closed_neighborhood(base, i) for i in range(1, k + 1)}
    vecs = lattice_vertices(k, 2)
    j_sets = {
        x: frozenset(i for i in range(1, k + 1) if all(x[t - 1] == 2 for t in hoods[i]))
        for x in vecs
    }
    i_edge: dict[tuple[LatticeVector, Edge], frozenset[int]] = {}
    counts: dict[tuple[LatticeVector, int], int] = {}
    for e in lattice.edges():
        xv, yv = e[0].vector, e[1].vector  # type: ignore[union-attr]
        for x in (xv, yv):
            got = frozenset(
                i for i in j_sets[x] if xv[i - 1] != yv[i - 1]
            )
            if got:
                i_edge[(x, e)] = got
                for i in got:
                    counts[(x, i)] = counts.get((x, i), 0) + 1
    i_sets: dict[LatticeVector, frozenset[int]] = {x: frozenset() for x in vecs}
    for (x, _e), got in i_edge.items():
        i_sets[x] |= got
    i_tilde = {
        (x, e): frozenset(i for i in got if counts[(x, i)] == 1)
        for (x, e), got in i_edge.items()
    }
    i_tilde = {key: val for key, val in i_tilde.items() if val}
    return CoverIndexSets(k=k, j_sets=j_sets, i_sets=i_sets, i_edge=i_edge, i_tilde=i_tilde)


# -- minimality reports ------------------------------------------------------


@dataclass(frozen=True)
class EdgeCriticality:
    edge: Edge
    critical: bool
    witness_vertex: Vertex | None = None
    witness_indices: tuple[int, ...] = ()
    condition: str | None = None  # radius-3 family: "slice" or "s-set"


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    member: bool
    family: str
    membership: MembershipReport
    edges: tuple[EdgeCriticality, ...]

    def __bool__(self) -> bool:
        return self.minimal

    def redundant_edges(self) -> list[Edge]:
        return [ec.edge for ec in self.edges if not ec.critical]


def is_h1_minimal(base: Graph, lattice: Graph) -> MinimalityReport:
    """Minimality of the lattice relative to the fixed base.

    Two conditions, evaluated on the index calculus: every constrained
    coordinate of every vector is served, and every edge serves some vector
    uniquely for at least one coordinate.
    """
    membership = member_b(base, lattice)
    cis = cover_index_sets(base, lattice)
    edge_reports = []
    all_critical = True
    for e in lattice.edges():
        witness = None
        indices: tuple[int, ...] = ()
        for x in sorted({e[0].vector, e[1].vector}):  # type: ignore[union-attr]
            tilde = cis.i_tilde_of(x, e)
            if tilde:
                witness = LatticeVertex(x)
                indices = tuple(sorted(tilde))
                break
        critical = witness is not None
        all_critical = all_critical and critical
        edge_reports.append(
            EdgeCriticality(edge=e, critical=critical, witness_vertex=witness, witness_indices=indices)
        )
    return MinimalityReport(
        minimal=membership.member and all_critical,
        member=membership.member,
        family="B",
        membership=membership,
        edges=tuple(edge_reports),
    )


def _without_edge(lattice: Graph, e: Edge) -> Graph:
    return Graph(lattice.vertices(), [f for f in lattice.edge_set() if f != e])


def is_k_minimal(lattice: Graph) -> MinimalityReport:
    """Minimality of a radius-3 lattice: membership holds and every
    single-edge deletion breaks it.  Single deletions suffice because
    membership is an up-set of the spanning-subgraph order."""
    membership = member_c(lattice)
    edge_reports = []
    all_critical = True
    for e in lattice.edges():
        after = member_c(_without_edge(lattice, e))
        witness = None
        indices: tuple[int, ...] = ()
        condition = None
        if not after.member:
            for diag in after.diagnostics:
                if diag.uncovered is not None:
                    witness, indices, condition = diag.uncovered, (diag.i,), "slice"
                    break
                if diag.uncovered_secondary is not None:
                    witness, indices, condition = diag.uncovered_secondary, (diag.i,), "s-set"
                    break
        critical = not after.member
        all_critical = all_critical and critical
        edge_reports.append(
            EdgeCriticality(
                edge=e,
                critical=critical,
                witness_vertex=witness,
                witness_indices=indices,
                condition=condition,
            )
        )
    return MinimalityReport(
        minimal=membership.member and all_critical,
        member=membership.member,
        family="C",
        membership=membership,
        edges=tuple(edge_reports),
    )


def is_minimal_in_b(base: Graph, lattice: Graph) -> bool:
    """Minimality of the whole composite inside the radius-2 family.

    Lattice minimality relative to the base does not imply this: a base
    edge may also be deletable.  Both directions are rechecked with single
    deletions.
    """
    if not is_h1_minimal(base, lattice).minimal:
        return False
    for e in base.edges():
        smaller = Graph(base.vertices(), [f for f in base.edge_set() if f != e])
        if member_b(smaller, lattice).member:
            return False
    return True


# -- edge-count bounds -------------------------------------------------------


def bounds_b(base: Graph) -> tuple[int, int]:
    """Size bounds for a lattice minimal relative to the base, from the
    base's vertex degrees."""
    k = _require_base(base)
    degs = [degree(base, BaseVertex(i)) for i in range(1, k + 1)]
    lower = 2 ** (k - min(degs) - 1)
    upper = sum(2 ** (k - d - 1) for d in degs)
    return lower, upper


def bounds_c(k: int) -> tuple[int, int]:
    """Size bounds for a minimal radius-3 lattice, in closed form."""
    if k < 2:
        raise IndexOutOfRange(f"need k >= 2, got {k}")
    return (3 ** k + 1) // 2, k * (3 ** (k - 1) + 2 ** (k - 1))


def composite_size_bounds(kind: str, base_or_k) -> tuple[int, int]:
    """Edge-count bounds for whole minimal composites of either family."""
    if kind == "B":
        base: Graph = base_or_k
        k = _require_base(base)
        degs = [degree(base, BaseVertex(i)) for i in range(1, k + 1)]
        lower = k * 2 ** (k - 1) + sum(degs) // 2 + 2 ** (k - min(degs) - 1)
        upper = k * 2 ** (k - 1) + sum(2 ** (k - d) + d for d in degs) // 2
        return lower, upper
    if kind == "C":
        k = base_or_k
        if k < 2:
            raise IndexOutOfRange(f"need k >= 2, got {k}")
        lower = ((2 * k + 3) * 3 ** (k - 1) + 1) // 2
        upper = 2 * k * (3 ** (k - 1) + 2 ** (k - 2))
        return lower, upper
    raise ValueError(f"kind must be B or C, got {kind!r}")


# -- tightness of the radius-2 bounds ----------------------------------------


@dataclass(frozen=True)
class BoundsReport:
    family: str
    lower: int
    upper: int
    actual: int
    lower_tight: bool
    upper_tight: bool
    lower_witness_index: int | None
    upper_violation: tuple | None


def tightness_b(base: Graph, lattice: Graph) -> BoundsReport:
    """Decide which bound a minimal lattice attains, by the structural
    characterizations, and cross-assert against the raw edge counts."""
    report = is_h1_minimal(base, lattice)
    if not report.minimal:
        raise NotMinimal("tightness analysis needs a minimal lattice")
    k = base.order
    lower, upper = bounds_b(base)
    actual = lattice.size
    degs = {i: degree(base, BaseVertex(i)) for i in range(1, k + 1)}
    min_deg = min(degs.values())
    edges = lattice.edges()
    lower_witness = None
    for i in range(1, k + 1):
        if degs[i] != min_deg:
            continue
        l_i = [e for e in edges if e[0].vector[i - 1] != e[1].vector[i - 1]]  # type: ignore[union-attr]
        if len(l_i) == len(edges):
            lower_witness = i
            break
    lower_tight = lower_witness is not None

    cis = cover_index_sets(base, lattice)
    violation: tuple | None = None
    edge_key = lambda item: (item[0][0], item[0][1][0].vector, item[0][1][1].vector)  # noqa: E731
    for (x, e), got in sorted(cis.i_edge.items(), key=edge_key):
        if len(got) > 1:
            violation = ("a", x, e)
            break
    if violation is None:
        for e in edges:
            xv, yv = e[0].vector, e[1].vector  # type: ignore[union-attr]
            if cis.i_of(xv, e) and cis.i_of(yv, e):
                violation = ("b", e)
                break
    if violation is None:
        counts: dict[tuple[LatticeVector, int], int] = {}
        for (x, _e), got in cis.i_edge.items():
            for i in got:
                counts[(x, i)] = counts.get((x, i), 0) + 1
        for (x, i), c in sorted(counts.items()):
            if c > 1:
                violation = ("c", x, i)
                break
    upper_tight = violation is None

    assert lower_tight == (actual == lower), "lower-tightness test disagrees with the edge count"
    assert upper_tight == (actual == upper), "upper-tightness test disagrees with the edge count"
    return BoundsReport(
        family="B",
        lower=lower,
        upper=upper,
        actual=actual,
        lower_tight=lower_tight,
        upper_tight=upper_tight,
        lower_witness_index=lower_witness,
        upper_violation=violation,
    )


# -- critical edges ----------------------------------------------------------


@dataclass(frozen=True)
class CriticalEdgeSets:
    """Per-coordinate sets of edges whose removal breaks the covering."""

    family: str
    primary: dict[int, frozenset[Edge]]          # E'_i or M'_i
    secondary: dict[int, frozenset[Edge]] | None  # N'_i (radius-3 only)


def critical_edges(kind: str, base: Graph | None, lattice: Graph) -> CriticalEdgeSets:
    """Recompute, coordinate by coordinate and edge by edge, which edges
    are the last cover of some constrained vertex."""
    if kind == "B":
        assert base is not None
        rep = member_b(base, lattice)
        if not rep.member:
            raise NotMember("critical edges are defined for members only")
        k = base.order
        primary = {}
        for diag in rep.diagnostics:
            hood = closed_neighborhood(base, diag.i)
            slice_vecs = [
                v for v in lattice_vertices(k, 2) if all(v[t - 1] == 2 for t in hood)
            ]
            primary[diag.i] = _critical_subset(diag.covering_edges, slice_vecs)
        return CriticalEdgeSets(family="B", primary=primary, secondary=None)
    if kind == "C":
        rep = member_c(lattice)
        if not rep.member:
            raise NotMember("critical edges are defined for members only")
        k = rep.k
        primary = {}
        secondary = {}
        for diag in rep.diagnostics:
            slice2 = [v for v in lattice_vertices(k, 3) if v[diag.i - 1] == 2]
            primary[diag.i] = _critical_subset(diag.covering_edges, slice2)
            secondary[diag.i] = _critical_subset(diag.secondary_edges, sorted(s_set(k, diag.i)))
        return CriticalEdgeSets(family="C", primary=primary, secondary=secondary)
    raise ValueError(f"kind must be B or C, got {kind!r}")


def _critical_subset(edges, targets) -> frozenset[Edge]:
    target_set = set(targets)
    out = []
    for e in edges:
        rest_cover = {
            u.vector for f in edges if f != e for u in f  # type: ignore[union-attr]
        }
        if any(v in target_set and v not in rest_cover for v in (e[0].vector, e[1].vector)):  # type: ignore[union-attr]
            out.append(e)
    return frozenset(out)


# -- maximum-size minimal lattices via edge choices ---------------------------


def epsilon(k: int, i: int, x: LatticeVector) -> set[Edge]:
    """The candidate edges that may serve vector x in coordinate i inside a
    maximum-size minimal radius-3 lattice.

    The partner always drops coordinate i by one; the other coordinates are
    pinned or left free depending on which region x lies in.
    """
    if not 1 <= i <= k:
        raise IndexOutOfRange(f"coordinate index {i} not in [1, {k}]")
    x = tuple(x)
    if len(x) != k or any(c not in (1, 2, 3) for c in x):
        raise VertexNotEligible(f"{x} is not a [3]^{k} vector")
    in_s = x in s_set(k, i)
    on_slice2 = x[i - 1] == 2
    if not (in_s or on_slice2):
        raise VertexNotEligible(f"{x} is neither on the value-2 slice nor in the s-set of {i}")
    choices_per_t: list[list[int]] = []
    all_23 = all(c in (2, 3) for c in x)
    for t in range(k):
        if t == i - 1:
            choices_per_t.append([x[t] - 1])
        elif in_s:
            choices_per_t.append([x[t]])
        elif all_23:  # value-2 slice, inside the all-{2,3} region
            choices_per_t.append([2, 3] if x[t] == 2 else [3])
        else:  # value-2 slice, outside the region
            choices_per_t.append([1] if x[t] == 1 else [2, 3])
    out = set()
    for combo in product(*choices_per_t):
        partner = tuple(combo)
        a, b = sorted((x, partner))
        out.add((LatticeVertex(a), LatticeVertex(b)))
    return out


def q_choice_points(k: int) -> list[tuple[int, LatticeVector]]:
    """All (coordinate, vector) pairs with an edge choice, in canonical
    (i, vector) order."""
    points = []
    for i in range(1, k + 1):
        for x in lattice_vertices(k, 3):
            if x[i - 1] == 2 or x in s_set(k, i):
                points.append((i, x))
    return points


def q_choice_lists(k: int) -> list[tuple[int, LatticeVector, list[Edge]]]:
    """Choice points with their candidate edges sorted canonically."""
    out = []
    for i, x in q_choice_points(k):
        edges = sorted(epsilon(k, i, x), key=lambda e: (e[0].vector, e[1].vector))  # type: ignore[union-attr]
        out.append((i, x, edges))
    return out


def q_count(k: int) -> int:
    """Number of distinct choice tuples (= graphs, by disjointness)."""
    total = 1
    for _i, _x, edges in q_choice_lists(k):
        total *= len(edges)
    return total


def iter_q(k: int):
    """Stream every maximum-size minimal lattice, one per choice tuple, in
    lexicographic choice order."""
    lists = [edges for _i, _x, edges in q_choice_lists(k)]
    for combo in product(*lists):
        yield span_lattice(k, 3, [(e[0].vector, e[1].vector) for e in combo])  # type: ignore[union-attr]


def enumerate_q(k: int, cap: int = DEFAULT_Q_CAP) -> list[Graph]:
    """Materialize the choice-product family; use iter_q for large k."""
    total = q_count(k)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} choice tuples exceed the cap {cap}")
    graphs = list(iter_q(k))
    assert len(set(graphs)) == total, "choice tuples must give distinct graphs"
    return sorted(graphs, key=_graph_sort_key)


def _graph_sort_key(g: Graph):
    return tuple(
        (e[0].vector, e[1].vector) for e in g.edges()  # type: ignore[union-attr]
    )


# -- exhaustive minimal enumeration at k = 2 ----------------------------------


def enumerate_minimal(kind: str, k: int, base: Graph | None = None, jobs: int = 1) -> list[Graph]:
    """All minimal lattices of the chosen family at k = 2, canonically
    sorted.  Larger k is past the enumeration cap (the radius-3 space alone
    is 2^|E| over hundreds of edges)."""
    if k != 2:
        raise EnumerationCapExceeded(f"exhaustive minimal enumeration is capped at k=2, got k={k}")
    if kind == "B":
        if base is None:
            base = base_null(2)
        _require_base(base)
        if base.order != 2:
            raise WrongVertexSet("kind B at k=2 needs a base on [2]")
        all_edges = lattice_complete(2, 2).edges()
        out = []
        for mask in range(1 << len(all_edges)):
            chosen = [e for b, e in enumerate(all_edges) if mask >> b & 1]
            lattice = Graph(lattice_complete(2, 2).vertices(), chosen)
            if not member_b(base, lattice).member:
                continue
            if all(
                not member_b(base, _without_edge(lattice, e)).member for e in chosen
            ):
                out.append(lattice)
        return sorted(out, key=_graph_sort_key)
    if kind == "C":
        masks = minimal_c_masks_k2(jobs=jobs)
        edge_list = _gamma_edges_k2()
        return sorted(
            (span_lattice(2, 3, [edge_list[b] for b in _bits(mask)]) for mask in masks),
            key=_graph_sort_key,
        )
    raise ValueError(f"kind must be B or C, got {kind!r}")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def _gamma_edges_k2() -> tuple[tuple[LatticeVector, LatticeVector], ...]:
    return tuple(
        (e[0].vector, e[1].vector) for e in gamma(2).edges()  # type: ignore[union-attr]
    )


@lru_cache(maxsize=None)
def c_constraint_masks(k: int) -> tuple[int, ...]:
    """One bit mask per covering constraint over the canonical edge order
    of the maximal radius-3 lattice: a lattice subset is a family member
    iff it intersects every mask."""
    edge_list = [
        (e[0].vector, e[1].vector) for e in gamma(k).edges()  # type: ignore[union-attr]
    ]
    edge_id = {e: n for n, e in enumerate(edge_list)}
    masks = []
    for i in range(1, k + 1):
        c_edges = {
            (e[0].vector, e[1].vector) for e in scaffold(k, i, "C").edges()  # type: ignore[union-attr]
        }
        d_edges = {
            (e[0].vector, e[1].vector) for e in scaffold(k, i, "D").edges()  # type: ignore[union-attr]
        }
        for x in lattice_vertices(k, 3):
            if x[i - 1] == 2:
                mask = 0
                for e in c_edges:
                    if x in e:
                        mask |= 1 << edge_id[e]
                masks.append(mask)
        for x in sorted(s_set(k, i)):
            mask = 0
            for e in d_edges:
                if x in e:
                    mask |= 1 << edge_id[e]
            masks.append(mask)
    return tuple(masks)


def _scan_minimal_c_k2(lo: int, hi: int) -> list[int]:
    """Minimal member bit masks in [lo, hi): every constraint is hit, and
    every present edge is the unique hit of some constraint."""
    masks = c_constraint_masks(2)
    out = []
    for subset in range(lo, hi):
        needed = 0
        ok = True
        for cm in masks:
            hit = subset & cm
            if not hit:
                ok = False
                break
            if hit & (hit - 1) == 0:
                needed |= hit
        if ok and needed == subset:
            out.append(subset)
    return out


def minimal_c_masks_k2(jobs: int = 1) -> list[int]:
    """Scan all 2^20 spanning subgraphs of the maximal lattice for minimal
    members; partitionable across workers with order-independent output."""
    total = 1 << len(_gamma_edges_k2())
    if jobs <= 1:
        return _scan_minimal_c_k2(0, total)
    from concurrent.futures import ProcessPoolExecutor

    chunk = (total + jobs - 1) // jobs
    ranges = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    out: list[int] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan_minimal_c_k2_star, ranges):
            out.extend(part)
    return sorted(out)


def _scan_minimal_c_k2_star(bounds: tuple[int, int]) -> list[int]:
    return _scan_minimal_c_k2(*bounds)
