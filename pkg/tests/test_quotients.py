"""Equivalence classes, quotients, and the thin orbit-pair structure."""

import pytest

from qbmg import (
    ColoredDigraph,
    PartitionError,
    Partition,
    PreconditionError,
    aut_color_preserving,
    canonical_gamma,
    classical_quotient,
    equivalence_classes,
    format_partition,
    gamma_quotient,
    is_2qbmg,
    is_thin,
    lifted_group,
    parse_partition,
    partition_quotient,
    verify_thin_orbit_structure,
)
from qbmg.errors import NotAutomorphismError
from qbmg.perms import PermGroup, Permutation
from qbmg.verify import graphs_match_up_to_rename

from tests import refdata


def test_equivalence_classes_blowup():
    p = equivalence_classes(refdata.BLOWUP_ONCE)
    assert set(p.blocks) == {
        frozenset({"1", "6"}), frozenset({"2"}), frozenset({"3"}),
        frozenset({"4"}), frozenset({"5"}),
    }


def test_equivalence_classes_complete_symmetric():
    g = refdata.complete_symmetric(2, 3)
    p = equivalence_classes(g)
    assert set(p.blocks) == {g.color_u, g.color_w}


def test_equivalence_classes_thin_construction():
    from qbmg import two_layer
    g = two_layer(4, refdata.TWO_LAYER_M4_ALPHA, refdata.TWO_LAYER_M4_BETA,
                  refdata.TWO_LAYER_M4_GAMMA)
    assert all(len(b) == 1 for b in equivalence_classes(g).blocks)


def test_isolated_vertices_share_a_class():
    g = ColoredDigraph({"1", "3"}, {"2", "4"}, [("1", "2")])
    p = equivalence_classes(g)
    assert frozenset({"3", "4"}) in p.blocks


def test_partition_blocks_ordered_by_least_member():
    p = Partition.from_blocks([{"10", "9"}, {"2"}, {"1", "3"}])
    assert p.blocks == (frozenset({"1", "3"}), frozenset({"2"}), frozenset({"9", "10"}))


def test_partition_rejects_overlap_and_empty():
    with pytest.raises(PartitionError):
        Partition.from_blocks([{"1"}, {"1", "2"}])
    with pytest.raises(PartitionError):
        Partition.from_blocks([set()])


def test_singleton_partition_quotient_is_renaming():
    g = refdata.BLOWUP_BASE
    result = partition_quotient(g, Partition.singletons(g.vertices))
    assert graphs_match_up_to_rename(g, result.quotient,
                                     {v: f"q_{v}" for v in g.vertices})


def test_partition_quotient_rejects_color_mixing_block():
    g = refdata.BLOWUP_BASE
    with pytest.raises(PartitionError, match="mixes colors"):
        partition_quotient(g, Partition.from_blocks([{"1", "2"}, {"3"}, {"4"}, {"5"}]))


def test_partition_quotient_rejects_wrong_support():
    g = refdata.BLOWUP_BASE
    with pytest.raises(PartitionError, match="uncovered"):
        partition_quotient(g, Partition.from_blocks([{"1"}, {"2"}]))


def test_all_isolated_mixed_block_goes_to_u():
    g = ColoredDigraph({"1"}, {"2"}, [])
    result = partition_quotient(g, Partition.from_blocks([{"1", "2"}]))
    assert result.quotient.color_u == {"q_1"}
    assert result.quotient.n_edges == 0


def test_monochromatic_isolated_block_keeps_color():
    g = ColoredDigraph({"1"}, {"2", "3"}, [])
    result = partition_quotient(g, Partition.from_blocks([{"1"}, {"2", "3"}]))
    assert result.quotient.color_w == {"q_2"}


def test_quotient_chain_partition():
    result = partition_quotient(
        refdata.QUOTIENT_CHAIN,
        Partition.from_blocks([{"1"}, {"8"}, {"2", "3", "4"}, {"5", "6", "7"}]))
    assert result.quotient.edges == {
        ("q_1", "q_8"), ("q_8", "q_2"), ("q_2", "q_5"), ("q_1", "q_5"),
    }
    assert is_2qbmg(result.quotient)


def test_quotient_chain_via_rotation_subgroup():
    g = refdata.QUOTIENT_CHAIN
    rot = Permutation.from_mapping(
        {"2": "3", "3": "4", "4": "2", "5": "6", "6": "7", "7": "5"}, g.vertices)
    grp = PermGroup.from_generators([rot])
    assert grp.order == 3
    result = gamma_quotient(g, grp)
    assert result.quotient.edges == {
        ("q_1", "q_8"), ("q_8", "q_2"), ("q_2", "q_5"), ("q_1", "q_5"),
    }


def test_complete_symmetric_class_quotient():
    g = refdata.complete_symmetric(2, 3)
    result = partition_quotient(g, Partition.from_blocks([g.color_u, g.color_w]))
    assert result.quotient.edges == {("q_1", "q_3"), ("q_3", "q_1")}


def test_classical_quotient_of_thin_graph_is_itself():
    g = refdata.QUOTIENT_CHAIN
    assert is_thin(g)
    result = classical_quotient(g)
    assert graphs_match_up_to_rename(g, result.quotient, result.projection)


def test_classical_quotient_blowup():
    result = classical_quotient(refdata.BLOWUP_ONCE)
    assert result.quotient.n_vertices == 5
    assert result.projection["1"] == result.projection["6"] == "q_1"
    assert result.quotient.edges == {
        ("q_1", "q_2"), ("q_2", "q_1"), ("q_3", "q_2"), ("q_3", "q_4"), ("q_4", "q_5"),
    }
    assert is_thin(result.quotient)


def test_classical_quotient_complete_symmetric():
    result = classical_quotient(refdata.complete_symmetric(2, 3))
    assert result.quotient.edges == {("q_1", "q_3"), ("q_3", "q_1")}


def test_gamma_quotient_trivial_group():
    g = refdata.BLOWUP_BASE
    result = gamma_quotient(g, PermGroup.trivial(g.vertices))
    assert graphs_match_up_to_rename(g, result.quotient, result.projection)


def test_gamma_quotient_two_layer_lifted():
    spec = refdata.TWO_LAYER_M4_SPEC
    from qbmg import layered
    g = layered(spec)
    grp = lifted_group(spec)
    result = gamma_quotient(g, grp)
    assert result.quotient.edges == {
        ("q_1", "q_9"), ("q_9", "q_5"), ("q_5", "q_13"), ("q_1", "q_13"),
    }
    assert is_2qbmg(result.quotient)


def test_gamma_quotient_full_group_complete_symmetric():
    g = refdata.complete_symmetric(2, 3)
    result = gamma_quotient(g, aut_color_preserving(g))
    assert result.quotient.edges == {("q_1", "q_3"), ("q_3", "q_1")}


def test_gamma_quotient_rejects_non_automorphism():
    g = refdata.BLOWUP_BASE
    bad = Permutation.from_mapping({"1": "3", "3": "1"}, g.vertices)
    grp = PermGroup(bad.domain, (bad,), frozenset({bad, Permutation.identity(g.vertices)}))
    with pytest.raises(NotAutomorphismError, match="not an automorphism"):
        gamma_quotient(g, grp)


def test_gamma_quotient_rejects_color_switching_generator():
    g = ColoredDigraph({"1"}, {"2"}, [("1", "2"), ("2", "1")])
    swap = Permutation.from_mapping({"1": "2", "2": "1"}, g.vertices)
    grp = PermGroup(swap.domain, (swap,), frozenset({swap, Permutation.identity(g.vertices)}))
    with pytest.raises(NotAutomorphismError, match="color"):
        gamma_quotient(g, grp)


def test_nonorbit_partition_quotient_breaks_bitransitivity():
    g = refdata.NONORBIT_BASE
    assert is_2qbmg(g)
    result = partition_quotient(g, Partition.from_blocks(refdata.NONORBIT_BLOCKS))
    assert not is_2qbmg(result.quotient)
    from qbmg import check_n2
    assert not check_n2(result.quotient).holds


def test_thin_orbit_structure_two_layer():
    spec = refdata.TWO_LAYER_M4_SPEC
    from qbmg import layered
    g = layered(spec)
    shapes = verify_thin_orbit_structure(g, lifted_group(spec))
    assert len(shapes) == 4
    for shape in shapes:
        assert shape.kind == "STARS"
        assert shape.fan_out == 1


def test_thin_orbit_structure_rejects_non_thin():
    g = refdata.complete_symmetric(2, 3)
    with pytest.raises(PreconditionError, match="thin"):
        verify_thin_orbit_structure(g, aut_color_preserving(g))


def test_thin_orbit_structure_symmetric_matching():
    g = ColoredDigraph(("1", "2"), ("3", "4"),
                       [("1", "3"), ("3", "1"), ("2", "4"), ("4", "2")])
    grp = aut_color_preserving(g)
    shapes = verify_thin_orbit_structure(g, grp)
    assert [s.kind for s in shapes] == ["SYMMETRIC_MATCHING"]


def test_canonical_gamma_quotient_matches_classical():
    for g in (refdata.BLOWUP_ONCE, refdata.BLOWUP_TWICE,
              refdata.complete_symmetric(3, 2)):
        a = classical_quotient(g)
        b = gamma_quotient(g, canonical_gamma(g))
        assert a.quotient == b.quotient and a.projection == b.projection


def test_search_finds_non_hereditary_partition_quotient():
    # Independent derivation of the non-hereditariness demonstration: scan
    # small members and monochromatic partitions until a quotient breaks
    # bi-transitivity. The hand-built fixture is not consulted.
    from itertools import product
    from qbmg import check_n2
    from tests.oracles import enumerate_bipartite_digraphs

    def monochromatic_partitions(g):
        # Group assignments per color class with at most 2 blocks per class.
        def splits(tokens):
            tokens = sorted(tokens)
            for assignment in product((0, 1), repeat=len(tokens)):
                blocks: dict[int, set] = {}
                for t, b in zip(tokens, assignment):
                    blocks.setdefault(b, set()).add(t)
                yield list(blocks.values())
        for u_blocks in splits(g.color_u):
            for w_blocks in splits(g.color_w):
                yield Partition.from_blocks(u_blocks + w_blocks)

    found = None
    for g in enumerate_bipartite_digraphs(3, 3):
        if g.n_edges < 4 or not is_2qbmg(g):
            continue
        for p in monochromatic_partitions(g):
            if len(p) == g.n_vertices:
                continue
            q = partition_quotient(g, p).quotient
            if not check_n2(q).holds:
                found = (g, p)
                break
        if found:
            break
    assert found is not None
    g, p = found
    assert is_2qbmg(g) and not is_2qbmg(partition_quotient(g, p).quotient)


def test_subgroup_lattice_hereditariness_on_small_fixtures():
    # For groups of order <= 200, quotient by every subgroup, not only the
    # cyclic ones, and demand membership each time.
    from tests.oracles import subgroup_lattice

    for g in (refdata.QUOTIENT_CHAIN, refdata.STAR_PRODUCT,
              refdata.complete_symmetric(2, 3), refdata.BLOWUP_TWICE):
        aut = aut_color_preserving(g)
        assert aut.order <= 200
        subs = subgroup_lattice(aut)
        assert subs[-1].order == aut.order
        for sub in subs:
            assert is_2qbmg(gamma_quotient(g, sub).quotient), (g, sub.order)


def test_partition_text_roundtrip():
    p = Partition.from_blocks(refdata.NONORBIT_BLOCKS)
    assert parse_partition(format_partition(p)) == p


def test_parse_partition_rejects_duplicates():
    from qbmg import GraphFormatError
    with pytest.raises(GraphFormatError):
        parse_partition("1 1\n")
    with pytest.raises(GraphFormatError):
        parse_partition("1 2\n2 3\n")
