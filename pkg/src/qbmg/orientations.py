"""Orientations of colored digraphs: the UW-orientation, enumeration, topological order.

An orientation keeps exactly one direction from each symmetric edge and all
other edges unchanged. The UW-orientation keeps the direction running from
color class U to color class W; it never loses a color-preserving
automorphism, though it can gain some. ``check_orientation_theorems`` tests
the group identity together with membership of every orientation when the
symmetric edges form a matching.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .axioms import is_2qbmg, is_thin, satisfies_star
from .autgroup import aut_color_preserving
from .digraph import ColoredDigraph, symmetric_edges, token_key
from .errors import PreconditionError, QbmgError, SizeCapError

__all__ = [
    "uw_orientation",
    "enumerate_orientations",
    "TopoResult",
    "topological_order",
    "OrientationReport",
    "check_orientation_theorems",
]

ORIENTATION_CAP = 20


def uw_orientation(g: ColoredDigraph) -> ColoredDigraph:
    """Drop the W-to-U direction of every symmetric edge; idempotent."""
    edges = {
        (t, h) for (t, h) in g.edges
        if not ((h, t) in g.edges and t in g.color_w)
    }
    return g.with_edges(edges)


def enumerate_orientations(g: ColoredDigraph) -> Iterator[ColoredDigraph]:
    """Yield all 2^s orientations, s the number of symmetric edges (capped at 20).

    Deterministic order: symmetric pairs sorted by token, then a binary
    counter where bit k = 0 keeps the direction leaving the pair's smaller
    token. Lazy, so a property test can stop at the first failure.
    """
    pairs = sorted(
        (tuple(sorted(p, key=token_key)) for p in symmetric_edges(g)),
        key=lambda p: (token_key(p[0]), token_key(p[1])),
    )
    if len(pairs) > ORIENTATION_CAP:
        raise SizeCapError(
            f"orientation enumeration capped at {ORIENTATION_CAP} symmetric edges, "
            f"got {len(pairs)}")
    base = {
        (t, h) for (t, h) in g.edges
        if frozenset((t, h)) not in {frozenset(p) for p in pairs}
    }
    for mask in range(1 << len(pairs)):
        edges = set(base)
        for k, (a, b) in enumerate(pairs):
            edges.add((b, a) if mask >> k & 1 else (a, b))
        yield g.with_edges(edges)


class TopoResult(NamedTuple):
    """Either a topological order or a directed cycle witness."""

    order: tuple[str, ...] | None
    cycle: tuple[str, ...] | None


def topological_order(g: ColoredDigraph) -> TopoResult:
    """Kahn's procedure with token-order tie-breaking; input must be oriented."""
    if symmetric_edges(g):
        raise QbmgError("topological order is defined for oriented graphs only")
    indeg = {v: len(g.in_neighbors(v)) for v in g.sorted_vertices}
    heap = [token_key(v) + (v,) for v in g.sorted_vertices if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[str] = []
    while heap:
        v = heapq.heappop(heap)[-1]
        order.append(v)
        for w in g.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, token_key(w) + (w,))
    if len(order) == len(indeg):
        return TopoResult(tuple(order), None)
    return TopoResult(None, _find_cycle(g, {v for v, d in indeg.items() if d > 0}))


def _find_cycle(g: ColoredDigraph, inside: set[str]) -> tuple[str, ...]:
    """Find a directed cycle among the vertices Kahn's procedure never released.

    Every such vertex keeps an unprocessed in-neighbor, which is itself
    unreleased, so walking backward must eventually repeat a vertex.
    """
    start = min(inside, key=token_key)
    seen: dict[str, int] = {}
    path: list[str] = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = min((w for w in g.in_neighbors(v) if w in inside), key=token_key)
    cycle = path[seen[v]:]
    cycle.reverse()
    return tuple(cycle)


@dataclass(frozen=True)
class OrientationReport:
    """Results of the orientation checks on a single 2-qBMG."""

    star_holds: bool
    thin: bool
    orientations_checked: int
    all_orientations_are_2qbmg: bool | None  # None when (*) fails and the check is skipped
    all_orientations_acyclic: bool | None    # None when neither (*) nor thinness holds
    uw_group_preserved: bool
    group_order: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_orientation_theorems(g: ColoredDigraph, vertex_cap: int = 64) -> OrientationReport:
    """Verify the orientation facts on one 2-qBMG.

    (a) When symmetric edges form a matching, every orientation must again be
        a 2-qBMG, and must be acyclic with a topological order. Acyclicity is
        also required when the graph is thin, even without the matching
        property; a failure there is reported but only counts as a violation
        in the matching case.
    (b) Always: the UW-orientation is checked for having exactly the same
        color-preserving automorphisms as the graph itself. Containment in
        one direction is guaranteed (an automorphism maps symmetric pairs to
        symmetric pairs, and colors pick the kept direction), but the reverse
        containment can genuinely fail: dropping the back-edges can make
        previously distinguishable vertices interchangeable. The smallest
        example is 1->{2,3} with 2->1, where the orientation gains (2 3).

    A failure of (a), or of the acyclicity checks, indicates a bug in this
    package rather than a property of the input.
    """
    if not is_2qbmg(g):
        raise PreconditionError("orientation checks apply to 2-qBMGs only")
    violations: list[str] = []
    star = bool(satisfies_star(g))
    thin = is_thin(g)

    checked = 0
    all_member: bool | None = None
    all_acyclic: bool | None = None
    if star or thin:
        all_acyclic = True
    if star:
        all_member = True
        for o in enumerate_orientations(g):
            checked += 1
            if not is_2qbmg(o):
                all_member = False
                violations.append(f"orientation #{checked} is not a 2-qBMG")
                break
            if topological_order(o).order is None:
                all_acyclic = False
                violations.append(f"orientation #{checked} has a directed cycle")
                break
    elif thin:
        for o in enumerate_orientations(g):
            checked += 1
            if topological_order(o).order is None:
                all_acyclic = False
                break

    aut_g = aut_color_preserving(g, vertex_cap=vertex_cap)
    aut_o = aut_color_preserving(uw_orientation(g), vertex_cap=vertex_cap)
    preserved = aut_g.elements == aut_o.elements
    if not preserved:
        violations.append(
            f"UW-orientation changes the color-preserving group: "
            f"{aut_g.order} vs {aut_o.order}")
    return OrientationReport(
        star_holds=star,
        thin=thin,
        orientations_checked=checked,
        all_orientations_are_2qbmg=all_member,
        all_orientations_acyclic=all_acyclic,
        uw_group_preserved=preserved,
        group_order=aut_g.order,
        violations=tuple(violations),
    )
