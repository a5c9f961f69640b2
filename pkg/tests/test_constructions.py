"""Construction families: blow-up, two-layer, diamond, layered, lifts."""

import math

import pytest

from qbmg import (
    BijectionTable,
    ColoredDigraph,
    LayeredSpec,
    QbmgError,
    UnknownVertexError,
    axiom_report,
    blow_up,
    composite_maps,
    is_2qbmg,
    is_automorphism,
    is_thin,
    layered,
    lift_permutation,
    lifted_group,
    n2_trivial_layer,
    random_layered_spec,
    two_layer,
)
from qbmg.constructions import (
    default_two_layer_tables,
    format_layered_spec,
    n2_trivial_lift,
    parse_layered_spec,
)

from tests import refdata


# -- bijection tables ----------------------------------------------------------

def test_bijection_table_rejects_duplicates():
    with pytest.raises(QbmgError):
        BijectionTable((("1", "2"), ("1", "3")))
    with pytest.raises(QbmgError):
        BijectionTable((("1", "3"), ("2", "3")))


def test_bijection_table_compose_and_inverse():
    t = BijectionTable.from_mapping({"1": "a", "2": "b"})
    u = BijectionTable.from_mapping({"a": "x", "b": "y"})
    assert t.then(u).as_dict() == {"1": "x", "2": "y"}
    assert t.inverse().as_dict() == {"a": "1", "b": "2"}
    with pytest.raises(QbmgError, match="compose"):
        u.then(t)


# -- blow-up --------------------------------------------------------------------

def test_blow_up_duplicates_neighborhoods():
    g = blow_up(refdata.BLOWUP_BASE, "1", "6")
    assert g == refdata.BLOWUP_ONCE
    g2 = blow_up(g, "2", "7")
    assert g2 == refdata.BLOWUP_TWICE


def test_blow_up_isolated_vertex():
    g = ColoredDigraph(("1",), ("2",), [("1", "2")])
    g = ColoredDigraph(("1", "3"), ("2",), [("1", "2")])
    out = blow_up(g, "3", "9")
    assert out.is_isolated("9")


def test_blow_up_rejects_existing_or_unknown():
    with pytest.raises(QbmgError, match="already"):
        blow_up(refdata.BLOWUP_BASE, "1", "2")
    with pytest.raises(UnknownVertexError):
        blow_up(refdata.BLOWUP_BASE, "99", "6")


def test_blow_up_creates_equivalent_pair():
    from qbmg import equivalence_classes
    g = blow_up(refdata.BLOWUP_BASE, "3", "9")
    assert equivalence_classes(g).block_of("3") == frozenset({"3", "9"})
    assert is_2qbmg(g)


# -- two-layer -------------------------------------------------------------------

def test_two_layer_reference_instance():
    g = two_layer(4, refdata.TWO_LAYER_M4_ALPHA, refdata.TWO_LAYER_M4_BETA,
                  refdata.TWO_LAYER_M4_GAMMA)
    assert g.n_vertices == 16 and g.n_edges == 16
    report = axiom_report(g)
    assert report.is_2qbmg and report.proper
    assert is_thin(g)
    # delta = gamma . beta . alpha
    assert {("1", "13"), ("2", "16"), ("3", "14"), ("4", "15")} <= g.edges


def test_two_layer_m1_chain_with_chord():
    g = two_layer(1, *default_two_layer_tables(1))
    assert g.edges == {("1", "3"), ("3", "2"), ("2", "4"), ("1", "4")}


def test_two_layer_degree_profile():
    m = 3
    g = two_layer(m, *default_two_layer_tables(m))
    assert g.n_edges == 4 * m
    u1 = set(str(i) for i in range(1, m + 1))
    w2 = set(str(i) for i in range(3 * m + 1, 4 * m + 1))
    for v in u1:
        assert len(g.out_neighbors(v)) == 2
    sinks = {v for v in g.vertices if not g.out_neighbors(v)}
    assert sinks == w2


def test_two_layer_rejects_mismatched_tables():
    alpha, beta, gamma = default_two_layer_tables(2)
    with pytest.raises(QbmgError):
        two_layer(2, alpha, gamma, beta)


# -- diamond (N2-trivial) family --------------------------------------------------

def test_diamond_reference_instance():
    g = n2_trivial_layer(4, refdata.DIAMOND_M4_ALPHA, refdata.DIAMOND_M4_BETA,
                         refdata.DIAMOND_M4_GAMMA)
    report = axiom_report(g)
    assert report.is_2qbmg and report.n2_trivial
    assert not report.n1_trivial and not report.n3_trivial
    # Never thin: the two middles of each diamond point at the same sink by
    # the definition of delta and are fed by the same source, so they share
    # both neighborhoods.
    assert not is_thin(g)
    from qbmg import equivalence_classes
    assert equivalence_classes(g).block_of("5") == frozenset({"5", "9"})


def test_diamond_lift_is_automorphism():
    g = n2_trivial_layer(4, refdata.DIAMOND_M4_ALPHA, refdata.DIAMOND_M4_BETA,
                         refdata.DIAMOND_M4_GAMMA)
    u1 = sorted(refdata.DIAMOND_M4_ALPHA.domain)
    import itertools
    count = 0
    for img in itertools.permutations(u1):
        phi = n2_trivial_lift(refdata.DIAMOND_M4_ALPHA, refdata.DIAMOND_M4_BETA,
                              refdata.DIAMOND_M4_GAMMA, dict(zip(u1, img)))
        assert is_automorphism(g, phi, color_preserving=True)
        count += 1
    assert count == 24


# -- layered ----------------------------------------------------------------------

def test_layered_composites_match_reference():
    f, g_ = composite_maps(refdata.LAYERED_S3M3_SPEC)
    assert f[(1, 2)].as_dict() == refdata.LAYERED_S3M3_F12
    assert f[(2, 3)].as_dict() == refdata.LAYERED_S3M3_F23
    assert f[(1, 3)].as_dict() == refdata.LAYERED_S3M3_F13
    assert g_[(1, 3)].as_dict() == refdata.LAYERED_S3M3_G13


def test_layered_reference_instance():
    g = layered(refdata.LAYERED_S3M3_SPEC)
    assert g.n_vertices == 18 and g.n_edges == 27
    report = axiom_report(g)
    assert report.is_2qbmg and report.proper
    assert is_thin(g)


def test_layered_edge_count_is_m_s_squared():
    for s in (2, 3, 4):
        for m in (1, 2, 3):
            g = layered(random_layered_spec(s, m, seed=5))
            assert g.n_edges == m * s * s
            assert g.n_vertices == 2 * m * s


def test_layered_s2_equals_two_layer():
    alpha, beta, gamma = default_two_layer_tables(3)
    spec = LayeredSpec(2, 3, (alpha, gamma), (beta,))
    assert layered(spec) == two_layer(3, alpha, beta, gamma)


def test_composition_coherence_laws():
    spec = random_layered_spec(4, 3, seed=9)
    f, g_ = composite_maps(spec)
    s = spec.s
    for i in range(1, s + 1):
        for j in range(i, s + 1):
            for d in range(j + 1, s + 1):
                for k in range(d, s + 1):
                    lhs = f[(i, k)].as_dict()
                    rhs = f[(i, j)].then(g_[(j, d)]).then(f[(d, k)]).as_dict()
                    assert lhs == rhs, (i, j, d, k)
    for j in range(1, s + 1):
        for ell in range(j + 1, s + 1):
            for t in range(ell, s + 1):
                for d in range(t + 1, s + 1):
                    lhs = g_[(j, d)].as_dict()
                    rhs = g_[(j, ell)].then(f[(ell, t)]).then(g_[(t, d)]).as_dict()
                    assert lhs == rhs, (j, ell, t, d)


def test_lift_identity_is_identity():
    spec = refdata.LAYERED_S3M3_SPEC
    u1 = sorted(spec.u_class(1))
    phi = lift_permutation(spec, {v: v for v in u1})
    assert phi.is_identity()


def test_lift_is_homomorphism():
    import itertools
    spec = random_layered_spec(3, 3, seed=3)
    u1 = sorted(spec.u_class(1))
    perms = [dict(zip(u1, img)) for img in itertools.permutations(u1)]
    for p1 in perms[:4]:
        for p2 in perms[2:6]:
            composed = {v: p1[p2[v]] for v in u1}
            lhs = lift_permutation(spec, composed)
            rhs = lift_permutation(spec, p1).compose(lift_permutation(spec, p2))
            assert lhs == rhs


def test_lifted_group_two_layer_reference():
    grp = lifted_group(refdata.TWO_LAYER_M4_SPEC)
    assert grp.order == 24
    g = layered(refdata.TWO_LAYER_M4_SPEC)
    for p in grp.sorted_elements:
        assert is_automorphism(g, p, color_preserving=True)


def test_lifted_group_three_layer_reference():
    grp = lifted_group(refdata.LAYERED_S3M3_SPEC)
    assert grp.order == 6
    g = layered(refdata.LAYERED_S3M3_SPEC)
    for p in grp.sorted_elements:
        assert is_automorphism(g, p, color_preserving=True)


def test_lifted_group_orbits_are_classes():
    spec = random_layered_spec(3, 2, seed=7)
    grp = lifted_group(spec)
    assert grp.order == 2
    expected = set()
    for i in range(1, spec.s + 1):
        expected.add(spec.u_class(i))
        expected.add(spec.w_class(i))
    assert set(grp.orbit_sets()) == expected


def test_lifted_group_m1_trivial():
    assert lifted_group(random_layered_spec(2, 1, seed=1)).order == 1


def test_random_spec_is_seed_deterministic():
    a = random_layered_spec(3, 4, seed=42)
    b = random_layered_spec(3, 4, seed=42)
    assert a == b
    c = random_layered_spec(3, 4, seed=43)
    assert a != c


def test_spec_text_roundtrip():
    spec = refdata.LAYERED_S3M3_SPEC
    assert parse_layered_spec(format_layered_spec(spec)) == spec


def test_spec_parse_errors():
    from qbmg import GraphFormatError
    with pytest.raises(GraphFormatError, match="layers"):
        parse_layered_spec("f 1 1: 1->2\n")
    with pytest.raises(GraphFormatError):
        parse_layered_spec("layers s=2 m=1\nf 1 2: 1->2\n")


def test_sequential_blowup_preserves_membership():
    for base in (two_layer(2, *default_two_layer_tables(2)),
                 layered(random_layered_spec(3, 2, seed=13))):
        assert is_2qbmg(base)
        g = blow_up(base, min(base.vertices), "x1")
        g = blow_up(g, "x1", "x2")
        assert is_2qbmg(g)


def test_blowup_multiplies_canonical_gamma_order():
    from qbmg import canonical_gamma
    g = refdata.BLOWUP_BASE
    before = canonical_gamma(g).order
    g2 = blow_up(g, "5", "10")
    assert canonical_gamma(g2).order == before * math.factorial(2)
