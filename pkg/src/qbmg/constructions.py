"""Generators for structured 2-qBMG families and their lifted automorphisms.

Three families are built from invertible tables between equal-size vertex
classes:

* ``two_layer``: classes U1, W1, U2, W2 with maps alpha: U1->W1, beta: W1->U2,
  gamma: U2->W2 and the composite delta = gamma . beta . alpha drawn as a
  chord, giving a thin proper 2-qBMG.
* ``n2_trivial_layer``: same classes but gamma runs W2->U2, so both W classes
  feed the sinks in U2 and no three-edge walk exists. Each source, its two
  middle vertices, and its sink form a diamond.
* ``layered``: the s-layer generalization of ``two_layer``: diagonal maps
  f[i][i]: U_i->W_i and step maps g[j][j+1]: W_j->U_{j+1}, with all longer
  composites f[i][j] and g[j][i] drawn as edges.

Every permutation of the first class lifts to a color-preserving automorphism
by conjugating with the composite maps; the lifts form a copy of the symmetric
group on the first class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .digraph import ColoredDigraph, token_key
from .errors import GraphFormatError, QbmgError, UnknownVertexError
from .perms import PermGroup, Permutation

__all__ = [
    "BijectionTable",
    "LayeredSpec",
    "blow_up",
    "two_layer",
    "n2_trivial_layer",
    "n2_trivial_lift",
    "layered",
    "composite_maps",
    "lift_permutation",
    "lifted_group",
    "default_two_layer_tables",
    "default_n2_trivial_tables",
    "random_layered_spec",
    "parse_layered_spec",
    "format_layered_spec",
]


@dataclass(frozen=True)
class BijectionTable:
    """An invertible map between two disjoint token sets, stored as pairs."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        dom = [a for a, _ in self.pairs]
        img = [b for _, b in self.pairs]
        if len(set(dom)) != len(dom):
            raise QbmgError("bijection table repeats a domain vertex")
        if len(set(img)) != len(img):
            raise QbmgError("bijection table repeats an image vertex")
        ordered = tuple(sorted(self.pairs, key=lambda p: token_key(p[0])))
        object.__setattr__(self, "pairs", ordered)
        object.__setattr__(self, "_map", dict(ordered))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str]) -> "BijectionTable":
        return cls(tuple((str(a), str(b)) for a, b in mapping.items()))

    @classmethod
    def pairing(cls, domain: Sequence[str], image: Sequence[str]) -> "BijectionTable":
        """Pair sorted domain tokens with image tokens in the given order."""
        if len(domain) != len(image):
            raise QbmgError("bijection table sides differ in length")
        return cls(tuple(zip(sorted(domain, key=token_key), image)))

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._map)

    @property
    def image(self) -> frozenset[str]:
        return frozenset(self._map.values())

    def __call__(self, v: str) -> str:
        try:
            return self._map[v]
        except KeyError:
            raise QbmgError(f"{v!r} is outside this table's domain") from None

    def inverse(self) -> "BijectionTable":
        return BijectionTable(tuple((b, a) for a, b in self.pairs))

    def then(self, outer: "BijectionTable") -> "BijectionTable":
        """Composite outer . self; requires image(self) == domain(outer)."""
        if self.image != outer.domain:
            raise QbmgError("tables do not compose: inner image differs from outer domain")
        return BijectionTable(tuple((a, outer(b)) for a, b in self.pairs))

    def as_dict(self) -> dict[str, str]:
        return dict(self._map)

    def __len__(self) -> int:
        return len(self.pairs)


def blow_up(g: ColoredDigraph, at: str, new_id: str) -> ColoredDigraph:
    """Add a fresh vertex duplicating an existing vertex's neighborhoods.

    The new vertex takes the color, out-neighbors, and in-neighbors of ``at``,
    so the two are equivalent in the result. Duplicating several vertices must
    be done one at a time: a later duplicate then also attaches to the earlier
    ones, which a simultaneous version would miss (and a simultaneous version
    can break membership, so it is deliberately not offered).
    """
    if at not in g.vertices:
        raise UnknownVertexError(at)
    if new_id in g.vertices:
        raise QbmgError(f"vertex {new_id!r} already exists in the graph")
    u = set(g.color_u)
    w = set(g.color_w)
    (u if at in u else w).add(new_id)
    edges = set(g.edges)
    edges |= {(new_id, h) for h in g.out_neighbors(at)}
    edges |= {(t, new_id) for t in g.in_neighbors(at)}
    return ColoredDigraph(u, w, edges)


# -- class label conventions --------------------------------------------------


def _int_range(start: int, count: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(start, start + count))


def default_two_layer_classes(m: int) -> tuple[tuple[str, ...], ...]:
    """U1, U2, W1, W2 as the consecutive integer blocks 1..4m."""
    return (_int_range(1, m), _int_range(m + 1, m), _int_range(2 * m + 1, m),
            _int_range(3 * m + 1, m))


def default_n2_trivial_classes(m: int) -> tuple[tuple[str, ...], ...]:
    """U1, W1, W2, U2 as the consecutive integer blocks 1..4m."""
    return (_int_range(1, m), _int_range(m + 1, m), _int_range(2 * m + 1, m),
            _int_range(3 * m + 1, m))


def default_two_layer_tables(m: int) -> tuple[BijectionTable, BijectionTable, BijectionTable]:
    u1, u2, w1, w2 = default_two_layer_classes(m)
    return (BijectionTable.pairing(u1, w1), BijectionTable.pairing(w1, u2),
            BijectionTable.pairing(u2, w2))

def default_n2_trivial_tables(m: int) -> tuple[BijectionTable, BijectionTable, BijectionTable]:
    u1, w1, w2, u2 = default_n2_trivial_classes(m)
    return (BijectionTable.pairing(u1, w1), BijectionTable.pairing(w1, u2),
            BijectionTable.pairing(w2, u2))


def _check_disjoint_classes(classes: Sequence[frozenset[str]], m: int) -> None:
    seen: set[str] = set()
    for c in classes:
        if len(c) != m:
            raise QbmgError(f"every class must have size {m}, got {len(c)}")
        if seen & c:
            raise QbmgError(f"classes overlap on {sorted(seen & c, key=token_key)}")
        seen |= c


def two_layer(m: int, alpha: BijectionTable, beta: BijectionTable,
              gamma: BijectionTable) -> ColoredDigraph:
    """Two-layer family: edges u1->alpha(u1), w1->beta(w1), u2->gamma(u2), u1->delta(u1)."""
    if m < 1:
        raise QbmgError("class size m must be at least 1")
    u1, w1, u2, w2 = alpha.domain, alpha.image, beta.image, gamma.image
    if beta.domain != w1:
        raise QbmgError("beta must map alpha's image (W1) onto U2")
    if gamma.domain != u2:
        raise QbmgError("gamma must map beta's image (U2) onto W2")
    _check_disjoint_classes([u1, w1, u2, w2], m)
    delta = alpha.then(beta).then(gamma)
    edges: set[tuple[str, str]] = set()
    edges |= {(a, b) for a, b in alpha.pairs}
    edges |= {(a, b) for a, b in beta.pairs}
    edges |= {(a, b) for a, b in gamma.pairs}
    edges |= {(a, b) for a, b in delta.pairs}
    return ColoredDigraph(u1 | u2, w1 | w2, edges)


def n2_trivial_lift(alpha: BijectionTable, beta: BijectionTable, gamma: BijectionTable,
                    pi: Mapping[str, str]) -> Permutation:
    """Lift a permutation of U1 to the diamond graph built from these tables."""
    u1, w1, u2, w2 = alpha.domain, alpha.image, beta.image, gamma.domain
    delta = alpha.then(beta).then(gamma.inverse())
    mapping: dict[str, str] = {}
    ba = alpha.then(beta)
    for v in u1:
        mapping[v] = pi[v]
    for v in w1:
        mapping[v] = alpha(pi[alpha.inverse()(v)])
    for v in u2:
        mapping[v] = ba(pi[ba.inverse()(v)])
    for v in w2:
        mapping[v] = delta(pi[delta.inverse()(v)])
    return Permutation.from_mapping(mapping, u1 | w1 | u2 | w2)


def n2_trivial_layer(m: int, alpha: BijectionTable, beta: BijectionTable,
                     gamma: BijectionTable) -> ColoredDigraph:
    """Diamond family: edges u1->alpha(u1), w1->beta(w1), w2->gamma(w2), u1->delta(u1).

    Here gamma runs W2->U2 and delta = gamma^-1 . beta . alpha, so each source
    in U1 reaches one sink in U2 along two middle vertices, one in each W class.
    The result has sources U1, sinks U2, and no three-edge walk.
    """
    if m < 1:
        raise QbmgError("class size m must be at least 1")
    u1, w1, u2, w2 = alpha.domain, alpha.image, beta.image, gamma.domain
    if beta.domain != w1:
        raise QbmgError("beta must map alpha's image (W1) onto U2")
    if gamma.image != u2:
        raise QbmgError("gamma must map W2 onto beta's image (U2)")
    _check_disjoint_classes([u1, w1, u2, w2], m)
    delta = alpha.then(beta).then(gamma.inverse())
    edges: set[tuple[str, str]] = set()
    edges |= {(a, b) for a, b in alpha.pairs}
    edges |= {(a, b) for a, b in beta.pairs}
    edges |= {(a, b) for a, b in gamma.pairs}
    edges |= {(a, b) for a, b in delta.pairs}
    return ColoredDigraph(u1 | u2, w1 | w2, edges)


@dataclass(frozen=True)
class LayeredSpec:
    """Parameters for the s-layer construction.

    ``f_diag[i]`` maps U_{i+1} onto W_{i+1} (0-based storage), ``g_step[j]``
    maps W_{j+1} onto U_{j+2}. All 2s classes must be pairwise disjoint and of
    size m.
    """

    s: int
    m: int
    f_diag: tuple[BijectionTable, ...]
    g_step: tuple[BijectionTable, ...]

    def __post_init__(self):
        if self.s < 2:
            raise QbmgError("layer count s must be at least 2")
        if self.m < 1:
            raise QbmgError("class size m must be at least 1")
        if len(self.f_diag) != self.s:
            raise QbmgError(f"expected {self.s} diagonal tables, got {len(self.f_diag)}")
        if len(self.g_step) != self.s - 1:
            raise QbmgError(f"expected {self.s - 1} step tables, got {len(self.g_step)}")
        classes = []
        for i in range(self.s):
            classes.append(self.f_diag[i].domain)   # U_{i+1}
            classes.append(self.f_diag[i].image)    # W_{i+1}
        _check_disjoint_classes(classes, self.m)
        for j in range(self.s - 1):
            if self.g_step[j].domain != self.f_diag[j].image:
                raise QbmgError(f"step table g[{j + 1}][{j + 2}] must start at W_{j + 1}")
            if self.g_step[j].image != self.f_diag[j + 1].domain:
                raise QbmgError(f"step table g[{j + 1}][{j + 2}] must end at U_{j + 2}")

    def u_class(self, i: int) -> frozenset[str]:
        """U_i for 1 <= i <= s."""
        return self.f_diag[i - 1].domain

    def w_class(self, j: int) -> frozenset[str]:
        """W_j for 1 <= j <= s."""
        return self.f_diag[j - 1].image

    @property
    def vertices(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for i in range(1, self.s + 1):
            out |= self.u_class(i) | self.w_class(i)
        return out


def composite_maps(spec: LayeredSpec) -> tuple[dict[tuple[int, int], BijectionTable],
                                               dict[tuple[int, int], BijectionTable]]:
    """All composites: f[(i, j)]: U_i->W_j for i <= j, g[(j, i)]: W_j->U_i for j < i.

    Built from f[(i, j)] = f[(j, j)] . g[(j-1, j)] . f[(i, j-1)] and the
    matching recurrence for g, unrolling to the alternating product of
    diagonal and step tables.
    """
    f: dict[tuple[int, int], BijectionTable] = {}
    g: dict[tuple[int, int], BijectionTable] = {}
    for i in range(1, spec.s + 1):
        f[(i, i)] = spec.f_diag[i - 1]
    for j in range(1, spec.s):
        g[(j, j + 1)] = spec.g_step[j - 1]
    for span in range(1, spec.s):
        for i in range(1, spec.s - span + 1):
            j = i + span
            f[(i, j)] = f[(i, j - 1)].then(g[(j - 1, j)]).then(f[(j, j)])
    for span in range(2, spec.s):
        for j in range(1, spec.s - span + 1):
            i = j + span
            g[(j, i)] = g[(j, i - 1)].then(f[(i - 1, i - 1)]).then(g[(i - 1, i)])
    return f, g


def layered(spec: LayeredSpec) -> ColoredDigraph:
    """The s-layer graph: u_i -> f[(i,j)](u_i) for i <= j, w_j -> g[(j,i)](w_j) for j < i."""
    f, g = composite_maps(spec)
    edges: set[tuple[str, str]] = set()
    for table in f.values():
        edges |= {(a, b) for a, b in table.pairs}
    for table in g.values():
        edges |= {(a, b) for a, b in table.pairs}
    color_u: frozenset[str] = frozenset()
    color_w: frozenset[str] = frozenset()
    for i in range(1, spec.s + 1):
        color_u |= spec.u_class(i)
        color_w |= spec.w_class(i)
    return ColoredDigraph(color_u, color_w, edges)


def lift_permutation(spec: LayeredSpec, pi: Mapping[str, str]) -> Permutation:
    """Lift a permutation of U_1 to the whole layered graph.

    Acts as f[(1, j)] . pi . f[(1, j)]^-1 on W_j and as
    (g[(1, i)] . f[(1, 1)]) . pi . (...)^-1 on U_i for i >= 2. The lift of a
    product is the product of the lifts, so these form a group isomorphic to
    the symmetric group on U_1.
    """
    u1 = spec.u_class(1)
    if set(pi) != set(u1) or set(pi.values()) != set(u1):
        raise QbmgError("pi must be a permutation of the first class U_1")
    f, g = composite_maps(spec)
    mapping: dict[str, str] = dict(pi)
    for j in range(1, spec.s + 1):
        t = f[(1, j)]
        t_inv = t.inverse()
        for v in spec.w_class(j):
            mapping[v] = t(pi[t_inv(v)])
    for i in range(2, spec.s + 1):
        t = f[(1, 1)].then(g[(1, i)])
        t_inv = t.inverse()
        for v in spec.u_class(i):
            mapping[v] = t(pi[t_inv(v)])
    return Permutation.from_mapping(mapping, spec.vertices)


def lifted_group(spec: LayeredSpec) -> PermGroup:
    """Lifts of every permutation of U_1; order m!, orbits are the 2s classes."""
    import itertools

    u1 = sorted(spec.u_class(1), key=token_key)
    if len(u1) > 8:
        raise QbmgError("lifted group enumeration is limited to m <= 8")
    elements = []
    for img in itertools.permutations(u1):
        elements.append(lift_permutation(spec, dict(zip(u1, img))))
    gens = []
    for k in range(len(u1) - 1):
        swap = {u1[k]: u1[k + 1], u1[k + 1]: u1[k]}
        gens.append(lift_permutation(spec, {**{v: v for v in u1}, **swap}))
    grp = PermGroup(tuple(sorted(spec.vertices, key=token_key)), tuple(gens),
                    frozenset(elements))
    return grp


def default_layered_classes(s: int, m: int) -> tuple[tuple[str, ...], ...]:
    """U_1..U_s then W_1..W_s as consecutive integer blocks 1..2sm."""
    out = []
    for i in range(s):
        out.append(_int_range(i * m + 1, m))
    for j in range(s):
        out.append(_int_range(s * m + j * m + 1, m))
    return tuple(out)


def random_layered_spec(s: int, m: int, seed: int) -> LayeredSpec:
    """A seeded random spec on the default class labels; same seed, same spec."""
    rng = random.Random(seed)
    classes = default_layered_classes(s, m)
    u_classes, w_classes = classes[:s], classes[s:]
    f_diag = []
    for i in range(s):
        img = list(w_classes[i])
        rng.shuffle(img)
        f_diag.append(BijectionTable.pairing(u_classes[i], img))
    g_step = []
    for j in range(s - 1):
        img = list(u_classes[j + 1])
        rng.shuffle(img)
        g_step.append(BijectionTable.pairing(w_classes[j], img))
    return LayeredSpec(s, m, tuple(f_diag), tuple(g_step))


# -- spec text format ---------------------------------------------------------
#
#   layers s=<int> m=<int>
#   f <i> <i>: a->b a->b ...
#   g <j> <j+1>: a->b ...


def parse_layered_spec(text: str) -> LayeredSpec:
    s = m = None
    f_tables: dict[int, BijectionTable] = {}
    g_tables: dict[int, BijectionTable] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if parts[0] == "layers":
            try:
                kv = dict(p.split("=", 1) for p in parts[1:])
                s, m = int(kv["s"]), int(kv["m"])
            except (ValueError, KeyError) as exc:
                raise GraphFormatError(f"bad layers line {body!r}", line=ln) from exc
            continue
        if parts[0] in ("f", "g"):
            if len(parts) < 4 or not parts[2].endswith(":"):
                raise GraphFormatError(
                    f"expected '{parts[0]} <i> <j>: a->b ...', got {body!r}", line=ln)
            try:
                i, j = int(parts[1]), int(parts[2][:-1])
            except ValueError as exc:
                raise GraphFormatError(f"bad table indices in {body!r}", line=ln) from exc
            pairs = []
            for tok in parts[3:]:
                if "->" not in tok:
                    raise GraphFormatError(f"bad mapping token {tok!r}", line=ln,
                                           column=body.find(tok) + 1)
                a, b = tok.split("->", 1)
                pairs.append((a, b))
            try:
                table = BijectionTable(tuple(pairs))
            except QbmgError as exc:
                raise GraphFormatError(str(exc), line=ln) from exc
            if parts[0] == "f":
                if i != j:
                    raise GraphFormatError("only diagonal f tables may be given", line=ln)
                f_tables[i] = table
            else:
                if j != i + 1:
                    raise GraphFormatError("g tables must step one layer forward", line=ln)
                g_tables[i] = table
            continue
        raise GraphFormatError(f"unrecognized line {body!r}", line=ln)
    if s is None or m is None:
        raise GraphFormatError("missing 'layers s=<int> m=<int>' line", line=1)
    try:
        f_diag = tuple(f_tables[i] for i in range(1, s + 1))
        g_step = tuple(g_tables[j] for j in range(1, s))
    except KeyError as exc:
        raise GraphFormatError(f"missing table for layer {exc.args[0]}", line=1) from exc
    try:
        return LayeredSpec(s, m, f_diag, g_step)
    except QbmgError as exc:
        raise GraphFormatError(str(exc), line=1) from exc


def format_layered_spec(spec: LayeredSpec, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"layers s={spec.s} m={spec.m}")
    for i, table in enumerate(spec.f_diag, start=1):
        lines.append(f"f {i} {i}: " + " ".join(f"{a}->{b}" for a, b in table.pairs))
    for j, table in enumerate(spec.g_step, start=1):
        lines.append(f"g {j} {j + 1}: " + " ".join(f"{a}->{b}" for a, b in table.pairs))
    return "\n".join(lines) + "\n"
