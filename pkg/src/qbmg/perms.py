"""Vertex permutations and finite permutation groups stored by explicit elements.

Groups at the scale this package targets (a few hundred vertices, orders up to
one million) are materialized as full element sets, closed by breadth-first
multiplication from the generators. Anything larger fails loudly instead of
silently switching to a different representation.
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations
from typing import Iterable, Mapping

from .digraph import ColoredDigraph, token_key
from .errors import GraphFormatError, QbmgError, SizeCapError

__all__ = [
    "Permutation",
    "PermGroup",
    "parse_permutation",
    "format_permutation",
    "preserves_edges",
]

DEFAULT_ELEMENT_CAP = 10**6


class Permutation:
    """A bijection on a fixed vertex domain."""

    __slots__ = ("domain", "images", "_map", "_hash")

    def __init__(self, domain: Iterable[str], images: Iterable[str]):
        dom = tuple(sorted(domain, key=token_key))
        img = tuple(images)
        if len(dom) != len(img):
            raise QbmgError("domain and image lists differ in length")
        if set(img) != set(dom):
            raise QbmgError("images are not a permutation of the domain")
        self.domain = dom
        self.images = img
        self._map = dict(zip(dom, img))
        self._hash = hash((dom, img))

    @classmethod
    def identity(cls, domain: Iterable[str]) -> "Permutation":
        dom = tuple(sorted(domain, key=token_key))
        return cls(dom, dom)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str], domain: Iterable[str]) -> "Permutation":
        """Build from a partial mapping; unlisted domain vertices stay fixed."""
        dom = tuple(sorted(domain, key=token_key))
        extra = set(mapping) - set(dom)
        if extra:
            raise QbmgError(f"mapping moves vertices outside the domain: {sorted(extra, key=token_key)}")
        return cls(dom, tuple(mapping.get(v, v) for v in dom))

    def __call__(self, v: str) -> str:
        try:
            return self._map[v]
        except KeyError:
            raise QbmgError(f"vertex {v!r} is not in this permutation's domain") from None

    def as_dict(self) -> dict[str, str]:
        return dict(self._map)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(v) == self(other(v))."""
        if self.domain != other.domain:
            raise QbmgError("cannot compose permutations over different domains")
        return Permutation(self.domain, tuple(self._map[w] for w in other.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = {w: v for v, w in self._map.items()}
        return Permutation(self.domain, tuple(inv[v] for v in self.domain))

    def is_identity(self) -> bool:
        return self.domain == self.images

    def fixed_points(self) -> frozenset[str]:
        return frozenset(v for v in self.domain if self._map[v] == v)

    def cycles(self) -> list[tuple[str, ...]]:
        """Nontrivial cycles, each starting at its least vertex, sorted."""
        seen: set[str] = set()
        out: list[tuple[str, ...]] = []
        for v in self.domain:
            if v in seen or self._map[v] == v:
                continue
            cyc = [v]
            seen.add(v)
            w = self._map[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self._map[w]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(c) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.domain == other.domain and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation{self.cycle_string()}"

    def sort_key(self) -> tuple:
        return tuple(token_key(v) for v in self.images)


def preserves_edges(g: ColoredDigraph, p: Permutation) -> tuple[str, str] | None:
    """Return a violated edge (one whose image is missing), or None if p maps E into E.

    For a bijection on a finite vertex set, mapping edges into edges already
    makes the edge map a bijection.
    """
    for (t, h) in g.edges:
        if (p(t), p(h)) not in g.edges:
            return (t, h)
    return None


# -- permutation text format: ``p: a->b c->d ...`` (unlisted vertices fixed) --


def parse_permutation(text: str, domain: Iterable[str]) -> Permutation:
    body = text.strip()
    if not body.startswith("p:"):
        raise GraphFormatError(f"expected permutation line 'p: a->b ...', got {text!r}", line=1)
    mapping: dict[str, str] = {}
    for tok in body[2:].split():
        if "->" not in tok:
            raise GraphFormatError(f"bad mapping token {tok!r}, expected 'a->b'",
                                   line=1, column=text.find(tok) + 1)
        a, b = tok.split("->", 1)
        if not a or not b:
            raise GraphFormatError(f"bad mapping token {tok!r}", line=1)
        if a in mapping:
            raise GraphFormatError(f"vertex {a!r} mapped twice", line=1)
        mapping[a] = b
    try:
        return Permutation.from_mapping(mapping, domain)
    except QbmgError as exc:
        raise GraphFormatError(str(exc), line=1) from exc


def format_permutation(p: Permutation) -> str:
    moved = [v for v in p.domain if p(v) != v]
    return "p: " + " ".join(f"{v}->{p(v)}" for v in moved)


class PermGroup:
    """A finite permutation group: generators plus the enumerated element set."""

    __slots__ = ("domain", "generators", "elements", "_sorted_elements")

    def __init__(self, domain: tuple[str, ...], generators: tuple[Permutation, ...],
                 elements: frozenset[Permutation]):
        self.domain = domain
        self.generators = generators
        self.elements = elements
        self._sorted_elements: tuple[Permutation, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def sorted_elements(self) -> tuple[Permutation, ...]:
        if self._sorted_elements is None:
            self._sorted_elements = tuple(sorted(self.elements, key=Permutation.sort_key))
        return self._sorted_elements

    @classmethod
    def trivial(cls, domain: Iterable[str]) -> "PermGroup":
        ident = Permutation.identity(domain)
        return cls(ident.domain, (), frozenset((ident,)))

    @classmethod
    def from_generators(cls, generators: Iterable[Permutation],
                        domain: Iterable[str] | None = None,
                        element_cap: int = DEFAULT_ELEMENT_CAP) -> "PermGroup":
        gens = list(generators)
        if domain is None:
            if not gens:
                raise QbmgError("cannot infer a domain from an empty generator list")
            domain = gens[0].domain
        ident = Permutation.identity(domain)
        for p in gens:
            if p.domain != ident.domain:
                raise QbmgError("generators act on different domains")
        gens = [p for p in gens if not p.is_identity()]
        elements = _close_under_product(gens, ident, element_cap)
        canonical = canonical_generators(elements, ident.domain)
        return cls(ident.domain, tuple(canonical), elements)

    @classmethod
    def from_elements(cls, elements: Iterable[Permutation],
                      domain: Iterable[str] | None = None) -> "PermGroup":
        elems = frozenset(elements)
        if not elems:
            raise QbmgError("a group needs at least the identity element")
        some = next(iter(elems))
        dom = tuple(sorted(domain, key=token_key)) if domain is not None else some.domain
        ident = Permutation.identity(dom)
        if ident not in elems:
            raise QbmgError("element set does not contain the identity")
        _verify_closed(elems)
        canonical = canonical_generators(elems, dom)
        return cls(dom, tuple(canonical), elems)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.domain == other.domain and self.elements <= other.elements

    def orbit_sets(self) -> list[frozenset[str]]:
        """Orbits of the group on its domain, via union over the generators."""
        parent = {v: v for v in self.domain}

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in self.generators or self.elements:
            for v in self.domain:
                a, b = find(v), find(p(v))
                if a != b:
                    parent[a] = b
        buckets: dict[str, set[str]] = {}
        for v in self.domain:
            buckets.setdefault(find(v), set()).add(v)
        return sorted((frozenset(s) for s in buckets.values()),
                      key=lambda s: token_key(min(s, key=token_key)))

    def cyclic_subgroups(self) -> list["PermGroup"]:
        """All distinct cyclic subgroups, including the trivial one."""
        seen: dict[frozenset[Permutation], PermGroup] = {}
        ident = Permutation.identity(self.domain)
        seen[frozenset((ident,))] = PermGroup(self.domain, (), frozenset((ident,)))
        for a in self.sorted_elements:
            if a.is_identity():
                continue
            elems = {ident}
            cur = a
            while not cur.is_identity():
                elems.add(cur)
                cur = cur.compose(a)
            key = frozenset(elems)
            if key not in seen:
                seen[key] = PermGroup(self.domain, (a,), key)
        return sorted(
            seen.values(),
            key=lambda grp: (grp.order, tuple(p.sort_key() for p in grp.sorted_elements)),
        )

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, generators={len(self.generators)})"


def _close_under_product(gens: list[Permutation], ident: Permutation,
                         element_cap: int) -> frozenset[Permutation]:
    elements: set[Permutation] = {ident}
    frontier: list[Permutation] = [ident]
    while frontier:
        nxt: list[Permutation] = []
        for a in frontier:
            for gen in gens:
                c = gen.compose(a)
                if c not in elements:
                    elements.add(c)
                    nxt.append(c)
                    if len(elements) > element_cap:
                        raise SizeCapError(
                            f"group order exceeds the element cap of {element_cap}")
        frontier = nxt
    return frozenset(elements)


def _verify_closed(elems: frozenset[Permutation]) -> None:
    # A nonempty finite set closed under composition is a group; spot-check
    # inverses directly so bad inputs fail with a clear message.
    for p in elems:
        if p.inverse() not in elems:
            raise QbmgError(f"element set is not closed under inverse at {p!r}")
    sample = sorted(elems, key=Permutation.sort_key)[: min(len(elems), 8)]
    for a in sample:
        for b in sample:
            if a.compose(b) not in elems:
                raise QbmgError("element set is not closed under composition")


def canonical_generators(elements: Iterable[Permutation],
                         domain: tuple[str, ...]) -> list[Permutation]:
    """A deterministic generating list: greedy scan in image-tuple order."""
    ident = Permutation.identity(domain)
    span: set[Permutation] = {ident}
    gens: list[Permutation] = []
    for p in sorted(elements, key=Permutation.sort_key):
        if p in span:
            continue
        gens.append(p)
        span = set(_close_under_product(gens, ident, DEFAULT_ELEMENT_CAP))
    return gens


def all_permutations_of(tokens: Iterable[str]):
    """Yield every bijection of a token set onto itself, as dicts (oracle helper)."""
    toks = sorted(tokens, key=token_key)
    for img in _itertools_permutations(toks):
        yield dict(zip(toks, img))
