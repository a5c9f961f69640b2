"""Automorphism groups of colored digraphs.

The search backtracks over an equitable refinement of the vertex set: cells
start from the color classes (or from one cell when color-switching maps are
wanted), then split repeatedly on the multiset of neighbor cells until stable.
Automorphisms map cells to themselves, so candidate images are drawn from the
vertex's own cell and filtered by adjacency with the partial assignment. All
elements are enumerated; orders beyond the element cap fail loudly.
"""

from __future__ import annotations

from .digraph import ColoredDigraph, token_key
from .errors import (
    InternalCheckError,
    NotAutomorphismError,
    PreconditionError,
    QbmgError,
    SizeCapError,
)
from .perms import DEFAULT_ELEMENT_CAP, PermGroup, Permutation, preserves_edges
from .quotients import Partition, equivalence_classes, gamma_quotient

__all__ = [
    "is_automorphism",
    "aut_color_preserving",
    "aut_full",
    "orbits",
    "canonical_gamma",
    "is_normal",
    "inherited_group",
    "fixes_in_neighborhood_check",
]

DEFAULT_VERTEX_CAP = 64


def is_automorphism(g: ColoredDigraph, p: Permutation, color_preserving: bool = False) -> bool:
    """True when p maps edges to edges; with the flag, p must also fix each class setwise."""
    if set(p.domain) != g.vertices:
        raise NotAutomorphismError("permutation domain does not match the graph's vertex set")
    if preserves_edges(g, p) is not None:
        return False
    if color_preserving:
        return all((p(v) in g.color_u) == (v in g.color_u) for v in p.domain)
    return True


# -- equitable refinement -----------------------------------------------------


def _refine(g: ColoredDigraph, initial: dict[str, int]) -> dict[str, int]:
    """Split cells on (cell, sorted neighbor-cell multisets) until stable.

    Cell ids are assigned by sorting the signatures, so they are canonical for
    the graph and the initial coloring.
    """
    cells = dict(initial)
    n_cells = len(set(cells.values()))
    while True:
        sigs = {}
        for v in g.sorted_vertices:
            out_sig = tuple(sorted(cells[x] for x in g.out_neighbors(v)))
            in_sig = tuple(sorted(cells[x] for x in g.in_neighbors(v)))
            sigs[v] = (cells[v], out_sig, in_sig)
        fresh = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        cells = {v: fresh[sigs[v]] for v in sigs}
        new_count = len(fresh)
        if new_count == n_cells:
            return cells
        n_cells = new_count


def _search_automorphisms(g: ColoredDigraph, *, respect_colors: bool,
                          element_cap: int) -> list[Permutation]:
    vs = g.sorted_vertices
    if not vs:
        return [Permutation.identity(())]
    if respect_colors:
        initial = {v: (0 if v in g.color_u else 1) for v in vs}
    else:
        initial = {v: 0 for v in vs}
    cells = _refine(g, initial)

    by_cell: dict[int, list[str]] = {}
    for v in vs:
        by_cell.setdefault(cells[v], []).append(v)
    # Small cells first: forced choices early, cheap failure late.
    order = sorted(vs, key=lambda v: (len(by_cell[cells[v]]), cells[v], token_key(v)))

    out = {v: g.out_neighbors(v) for v in vs}
    inn = {v: g.in_neighbors(v) for v in vs}
    found: list[dict[str, str]] = []
    assigned: list[str] = []
    images: list[str] = []
    used: set[str] = set()

    def backtrack(i: int) -> None:
        if i == len(order):
            found.append(dict(zip(assigned, images)))
            if len(found) > element_cap:
                raise SizeCapError(
                    f"automorphism group order exceeds the element cap of {element_cap}")
            return
        v = order[i]
        out_v = out[v]
        in_v = inn[v]
        for c in by_cell[cells[v]]:
            if c in used:
                continue
            ok = True
            for a, b in zip(assigned, images):
                if ((a in out_v) != (b in out[c])) or ((a in in_v) != (b in inn[c])):
                    ok = False
                    break
            if not ok:
                continue
            assigned.append(v)
            images.append(c)
            used.add(c)
            backtrack(i + 1)
            assigned.pop()
            images.pop()
            used.discard(c)

    backtrack(0)
    return [Permutation.from_mapping(m, vs) for m in found]


def aut_color_preserving(g: ColoredDigraph, vertex_cap: int = DEFAULT_VERTEX_CAP,
                         element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """The full group of color-preserving automorphisms, elements enumerated."""
    if g.n_vertices > vertex_cap:
        raise SizeCapError(
            f"automorphism search capped at {vertex_cap} vertices, got {g.n_vertices}")
    elements = _search_automorphisms(g, respect_colors=True, element_cap=element_cap)
    return PermGroup.from_elements(elements, g.vertices)


def aut_full(g: ColoredDigraph, vertex_cap: int = DEFAULT_VERTEX_CAP,
             element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """All digraph automorphisms, color-preserving or not.

    On disconnected graphs an automorphism may preserve colors on one component
    and switch them on another, so this runs a color-blind search rather than
    gluing a switching coset onto the color-preserving group. On connected
    graphs the color-preserving subgroup has index 1 or 2; that fact is checked
    and a violation raises, since it would mean the search itself is broken.
    """
    if g.n_vertices > vertex_cap:
        raise SizeCapError(
            f"automorphism search capped at {vertex_cap} vertices, got {g.n_vertices}")
    elements = _search_automorphisms(g, respect_colors=False, element_cap=element_cap)
    grp = PermGroup.from_elements(elements, g.vertices)
    if _is_connected(g) and g.n_vertices:
        preserving = sum(
            1 for p in elements
            if all((p(v) in g.color_u) == (v in g.color_u) for v in p.domain)
        )
        if grp.order not in (preserving, 2 * preserving):
            raise InternalCheckError(
                f"color-preserving subgroup has index {grp.order}/{preserving} "
                "in the full group of a connected graph; expected 1 or 2")
    return grp


def _is_connected(g: ColoredDigraph) -> bool:
    vs = g.sorted_vertices
    if len(vs) <= 1:
        return True
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        v = stack.pop()
        for w in g.out_neighbors(v) | g.in_neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def orbits(grp: PermGroup, vertices) -> Partition:
    """Orbit partition of a group on the given vertex set (= its domain)."""
    verts = frozenset(vertices)
    if verts != set(grp.domain):
        raise QbmgError("orbit computation needs the group's own domain")
    return Partition.from_blocks(grp.orbit_sets())


def canonical_gamma(g: ColoredDigraph, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """The product of full symmetric groups, one per equivalence class.

    Generated by all transpositions inside each class; the order is the
    product of the class factorials and the orbits are exactly the classes.
    When isolated vertices of both colors share the isolated class, some
    generators swap vertices across colors; they are still automorphisms.
    """
    classes = equivalence_classes(g)
    dom = g.sorted_vertices
    gens: list[Permutation] = []
    for block in classes.blocks:
        members = sorted(block, key=token_key)
        anchor = members[0]
        for other in members[1:]:
            gens.append(Permutation.from_mapping({anchor: other, other: anchor}, dom))
    if not gens:
        return PermGroup.trivial(dom)
    return PermGroup.from_generators(gens, dom, element_cap=element_cap)


def is_normal(sub: PermGroup, grp: PermGroup) -> bool:
    """Conjugation test; requires sub's elements to be contained in grp's."""
    if sub.domain != grp.domain:
        raise QbmgError("subgroup and group act on different domains")
    if not sub.elements <= grp.elements:
        raise QbmgError("claimed subgroup is not contained in the group")
    conjugators = grp.generators or tuple(grp.elements)
    for a in conjugators:
        a_inv = a.inverse()
        for s in (sub.generators or tuple(sub.elements)):
            if a.compose(s).compose(a_inv) not in sub.elements:
                return False
    return True


def inherited_group(g: ColoredDigraph, norm: PermGroup,
                    vertex_cap: int = DEFAULT_VERTEX_CAP) -> PermGroup:
    """The action of the color-preserving group on the orbits of a normal subgroup.

    Returns a group of permutations of the quotient's vertices, one per coset,
    with order |Aut_I| / |norm|. Raises when norm is not normal in Aut_I, or
    when some element outside norm fixes every orbit (then cosets do not map
    to distinct quotient permutations and the advertised order is impossible).
    """
    aut = aut_color_preserving(g, vertex_cap=vertex_cap)
    if not is_normal(norm, aut):
        raise PreconditionError("the given subgroup is not normal in the color-preserving group")
    result = gamma_quotient(g, norm)
    project = result.projection
    q = result.quotient
    q_dom = tuple(sorted(q.vertices, key=token_key))
    induced: dict[Permutation, Permutation] = {}
    seen: set[Permutation] = set()
    for a in aut.sorted_elements:
        block_map = {project[v]: project[a(v)] for v in a.domain}
        qp = Permutation.from_mapping(block_map, q_dom)
        if qp in seen:
            continue
        seen.add(qp)
        induced[qp] = a
    expected = aut.order // norm.order
    if len(induced) != expected:
        raise PreconditionError(
            f"the orbit action has {len(induced)} distinct permutations but "
            f"|Aut_I|/|norm| = {expected}: some element outside the subgroup "
            "fixes every orbit, so the inherited group is not faithful here")
    for qp in induced:
        if not is_automorphism(q, qp, color_preserving=True):
            raise InternalCheckError(
                f"induced permutation {qp.cycle_string()} is not a color-preserving "
                "automorphism of the quotient")
    return PermGroup.from_elements(induced.keys(), q_dom)


def fixes_in_neighborhood_check(g: ColoredDigraph, p: Permutation) -> bool:
    """On a thin 2-qBMG: does p fix all in-neighbors of each of its fixed points?"""
    from .axioms import is_2qbmg, is_thin

    if not is_2qbmg(g) or not is_thin(g):
        raise PreconditionError("this check applies to thin 2-qBMGs only")
    if not is_automorphism(g, p):
        raise PreconditionError("the permutation is not an automorphism of the graph")
    for v in p.fixed_points():
        for x in g.in_neighbors(v):
            if p(x) != x:
                return False
    return True
