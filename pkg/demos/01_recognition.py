"""Recognizing membership: the duplication family.

Builds a small member, duplicates vertices one at a time, and shows why the
same duplications applied simultaneously break membership.
"""

from qbmg import ColoredDigraph, axiom_report, blow_up, is_thin, satisfies_star


def describe(name, g):
    report = axiom_report(g)
    print(f"{name}: |U|={len(g.color_u)} |W|={len(g.color_w)} |E|={g.n_edges}")
    print(f"  member: {report.is_2qbmg}   proper: {report.proper}   "
          f"thin: {is_thin(g)}   symmetric-matching: {bool(satisfies_star(g))}")
    for axiom, verdict in (("N1", report.n1), ("N2", report.n2), ("N3", report.n3)):
        if not verdict.holds:
            print(f"  {axiom} violated by {verdict.witness}")
    print()
    return report


base = ColoredDigraph(
    {"1", "3", "5"}, {"2", "4"},
    [("1", "2"), ("2", "1"), ("3", "2"), ("3", "4"), ("4", "5")],
)
describe("base graph", base)

print("Duplicating vertex 1 as 6 copies its whole neighborhood, so 1 and 6")
print("become equivalent, and membership is preserved:\n")
once = blow_up(base, "1", "6")
describe("after duplicating 1", once)

print("A second duplication, now of vertex 2, still preserves membership.")
print("Note that 7 attaches to 6 as well, because 6 is a neighbor of 2 by now:\n")
twice = blow_up(once, "2", "7")
describe("after duplicating 2", twice)

print("Doing both duplications 'simultaneously' (each copying neighborhoods")
print("of the original graph only) misses the edges between 6 and 7, and the")
print("result is not a member any more:\n")
simultaneous = ColoredDigraph(
    {"1", "3", "5", "6"}, {"2", "4", "7"},
    list(base.edges) + [("6", "2"), ("2", "6"), ("7", "1"), ("1", "7"), ("3", "7")],
)
describe("simultaneous duplication", simultaneous)
