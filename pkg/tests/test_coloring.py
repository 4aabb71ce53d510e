"""Coloring structure vs. brute-force counting.

The enumeration counters here are the oracles for the matrix-based
structure results, so these tests deliberately approach every number
from both sides.
"""

import random

import pytest

from linkcolor.catalog import load, names
from linkcolor.coloring import (
    arc_partition,
    coloring_equivalent,
    crossing_relations,
    dehn_count_bruteforce,
    dehn_structure,
    fox_count_bruteforce,
    structure_count,
)
from linkcolor.diagram import Diagram, parse_diagram, relabel_edges, trace_regions
from linkcolor.goeritz import goeritz_matrix
from linkcolor.intlattice import WorkBoundError
from linkcolor.shading import checkerboard


def _goeritz(name, index=0):
    d = load(name)
    rm = trace_regions(d)
    return goeritz_matrix(d, rm, checkerboard(rm)[index])


class TestCrossingRelations:
    def test_trefoil_count(self):
        assert len(crossing_relations(load("trefoil"))) == 3

    def test_coefficients_merge_repeats(self):
        d = load("kink")
        rel, = crossing_relations(d)
        # Quadrants 0 and 2 share the unbounded region: +1 and -1 cancel.
        coeffs = dict(rel.coefficients())
        assert 0 not in coeffs
        assert sorted(coeffs.values()) == [-1, 1]

    def test_pair_structure(self):
        for rel in crossing_relations(load("figure_eight")):
            coeffs = [c for _, c in rel.coefficients()]
            assert sum(coeffs) == 0


class TestDehnStructure:
    def test_unknot(self):
        rep = dehn_structure(parse_diagram("O 1"))
        assert rep.phi == (0,)
        assert rep.dehn.describe() == "A x A"
        assert rep.dehn.leading_free_factor
        assert not rep.fox.leading_free_factor

    def test_unlink2_either_shading(self):
        d = parse_diagram("O 2")
        rm = trace_regions(d)
        for s in checkerboard(rm):
            rep = dehn_structure(d, s, region_map=rm)
            assert rep.phi == (0, 0)
            assert rep.dehn.describe() == "A x A x A"

    def test_trefoil(self):
        rep = dehn_structure(load("trefoil"))
        assert rep.dehn.describe() == "A x A x A(3)"
        assert rep.fox.describe() == "A x A(3)"

    def test_figure_eight(self):
        rep = dehn_structure(load("figure_eight"))
        assert rep.phi == (0, 5, 1)
        assert rep.dehn.describe() == "A x A x A(5)"


class TestStructureCount:
    def test_trefoil_orders(self):
        rep = dehn_structure(load("trefoil"))
        assert structure_count(rep, 3, "dehn") == 27
        assert structure_count(rep, 3, "fox") == 9

    def test_free_only(self):
        rep = dehn_structure(parse_diagram("O 1"))
        for m in (2, 5, 12):
            assert structure_count(rep, m, "dehn") == m * m

    def test_golden_phi_order(self):
        from linkcolor.intlattice import GroupDescriptor
        from linkcolor.coloring import ColoringReport

        phi = (0, 0, 3, 3, 1)
        zeros = sum(1 for f in phi if f == 0)
        rep = ColoringReport(
            dehn=GroupDescriptor(zeros + 1, (3, 3), leading_free_factor=True),
            fox=GroupDescriptor(zeros, (3, 3)),
            phi=phi,
            goeritz=None,
        )
        assert structure_count(rep, 3, "dehn") == 243

    def test_unknown_kind(self):
        rep = dehn_structure(load("trefoil"))
        with pytest.raises(ValueError):
            structure_count(rep, 3, "alexander")


class TestDehnBruteForce:
    def test_unknot_m7(self):
        assert dehn_count_bruteforce(parse_diagram("O 1"), 7) == 49

    def test_trefoil_m3(self):
        assert dehn_count_bruteforce(load("trefoil"), 3) == 27

    def test_figure_eight_m5(self):
        assert dehn_count_bruteforce(load("figure_eight"), 5) == 125

    def test_methods_agree(self):
        for name in names():
            d = load(name)
            for m in (2, 3, 4, 5):
                assert dehn_count_bruteforce(d, m, method="enumerate") == \
                    dehn_count_bruteforce(d, m, method="matrix")

    def test_enumeration_cap(self):
        with pytest.raises(WorkBoundError):
            dehn_count_bruteforce(load("granny"), 3, method="enumerate", region_cap=5)

    def test_auto_falls_back_to_matrix(self):
        got = dehn_count_bruteforce(load("granny"), 3, region_cap=5)
        assert got == dehn_count_bruteforce(load("granny"), 3, method="enumerate")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            dehn_count_bruteforce(load("trefoil"), 3, method="magic")

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            dehn_count_bruteforce(load("trefoil"), 1)

    def test_invariant_under_relabel_and_reorder(self):
        rng = random.Random(7)
        for name in ("trefoil", "figure_eight", "hopf"):
            d = load(name)
            want = dehn_count_bruteforce(d, 4)
            labels = list(d.edge_labels())
            targets = rng.sample(range(1, 100), len(labels))
            moved = relabel_edges(d, dict(zip(labels, targets)))
            shuffled = list(moved.crossings)
            rng.shuffle(shuffled)
            moved = Diagram(tuple(shuffled), moved.free_circles)
            assert dehn_count_bruteforce(moved, 4) == want


class TestArcsAndFox:
    def test_arc_counts(self):
        for name, want in [("unknot", 1), ("kink", 1), ("trefoil", 3),
                           ("figure_eight", 4), ("hopf", 2), ("t2_4", 4)]:
            assert arc_partition(load(name))[1] == want, name

    def test_over_strand_joins(self):
        arc_of, n = arc_partition(load("trefoil"))
        for c in load("trefoil").crossings:
            assert arc_of[c.slots[1]] == arc_of[c.slots[3]]
        assert n == 3

    def test_unknot_m5(self):
        assert fox_count_bruteforce(parse_diagram("O 1"), 5) == 5

    def test_trefoil_m3(self):
        assert fox_count_bruteforce(load("trefoil"), 3) == 9

    def test_figure_eight_m5(self):
        assert fox_count_bruteforce(load("figure_eight"), 5) == 25

    def test_matches_structure_for_corpus(self):
        for name in names():
            d = load(name)
            rep = dehn_structure(d)
            for m in (2, 3, 5, 7):
                assert fox_count_bruteforce(d, m) == structure_count(rep, m, "fox")

    def test_dehn_is_m_times_fox(self):
        for name in names():
            rep = dehn_structure(load(name))
            for m in range(2, 8):
                assert structure_count(rep, m, "dehn") == \
                    m * structure_count(rep, m, "fox")

    def test_arc_cap(self):
        with pytest.raises(WorkBoundError):
            fox_count_bruteforce(load("figure_eight"), 3, arc_cap=2)


class TestColoringEquivalent:
    def test_reflexive(self):
        g = _goeritz("trefoil")
        assert coloring_equivalent(g, g)

    def test_kink_does_not_matter(self):
        assert coloring_equivalent(_goeritz("trefoil"), _goeritz("trefoil_kink"))

    def test_torsion_differs(self):
        assert not coloring_equivalent(_goeritz("trefoil"), _goeritz("figure_eight"))

    def test_free_rank_matters(self):
        # (0,) vs (0,0): equal torsion but different free rank.
        assert not coloring_equivalent(_goeritz("unknot"), _goeritz("unlink2"))
