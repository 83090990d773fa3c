"""Local vanishing-cycle integrals: point germs, frozen graphs, validation."""

from fractions import Fraction

import pytest

from motdt import (
    FracRat,
    InvalidGraph,
    InvalidParams,
    UnsupportedDisconnectedCover,
)
from motdt.vanishing import (
    Divisor,
    ResolutionGraph,
    integrate_local,
    thom_sebastiani_check,
)

from conftest import mono, poly


def exc(i, m):
    return Divisor(i, m, True)


def strict(i):
    return Divisor(i, 1, False)


def cusp_graph():
    return ResolutionGraph(
        [exc("E2", 2), exc("E3", 3), exc("E6", 6), strict("S")],
        [("E2", "E6"), ("E3", "E6"), ("E6", "S")],
    )


def node_graph():
    return ResolutionGraph(
        [exc("E", 2), strict("S1"), strict("S2")],
        [("E", "S1"), ("E", "S2")],
    )


class TestPointGerms:
    def test_smooth_point_is_zero(self):
        assert integrate_local(ResolutionGraph.point(1)).is_zero

    def test_double_point(self):
        # hsp(L^{-1/2}(1 - [mu_2])) collapses to 1
        assert integrate_local(ResolutionGraph.point(2)) == FracRat.one()

    def test_triple_point(self):
        expect = FracRat(
            poly(
                (Fraction(-1, 6), Fraction(1, 6), 1),
                (Fraction(1, 6), Fraction(-1, 6), 1),
            )
        )
        assert integrate_local(ResolutionGraph.point(3)) == expect

    def test_quadruple_point(self):
        expect = FracRat(
            poly(
                (Fraction(-1, 4), Fraction(1, 4), 1),
                (0, 0, 1),
                (Fraction(1, 4), Fraction(-1, 4), 1),
            )
        )
        assert integrate_local(ResolutionGraph.point(4)) == expect

    def test_bad_multiplicity(self):
        with pytest.raises(InvalidParams):
            ResolutionGraph.point(0)


class TestFrozenGraphs:
    def test_node_resolves_to_one(self):
        assert integrate_local(node_graph()) == FracRat.one()

    def test_cusp_value(self):
        expect = FracRat(
            poly(
                (Fraction(-1, 6), Fraction(1, 6), 1),
                (Fraction(1, 6), Fraction(-1, 6), 1),
            )
        )
        assert integrate_local(cusp_graph()) == expect

    def test_cusp_thom_sebastiani(self):
        matches, product = thom_sebastiani_check(cusp_graph(), 2, 3)
        assert matches
        assert product == integrate_local(cusp_graph())

    def test_node_thom_sebastiani(self):
        matches, product = thom_sebastiani_check(node_graph(), 2, 2)
        assert matches
        assert product == FracRat.one()

    def test_ts_mismatch_detected(self):
        matches, _ = thom_sebastiani_check(node_graph(), 2, 3)
        assert not matches

    def test_smallest_odd_family_graph(self):
        # chain L1 - E4 with E2 and L2 hanging off E4; the integral
        # collapses to 1 + u^{-1/4}v^{1/4} + u^{1/4}v^{-1/4}
        g = ResolutionGraph(
            [strict("L1"), strict("L2"), exc("E2", 2), exc("E4", 4)],
            [("L1", "E4"), ("L2", "E4"), ("E2", "E4")],
        )
        expect = FracRat(
            poly(
                (0, 0, 1),
                (Fraction(-1, 4), Fraction(1, 4), 1),
                (Fraction(1, 4), Fraction(-1, 4), 1),
            )
        )
        assert integrate_local(g) == expect

    def test_smallest_even_family_graph(self):
        # E3 meeting L1 once and L2 twice: 2 + u^{-1/3}v^{1/3} + u^{1/3}v^{-1/3}
        g = ResolutionGraph(
            [strict("L1"), strict("L2"), exc("E3", 3)],
            [("L1", "E3"), ("L2", "E3"), ("L2", "E3")],
        )
        expect = FracRat(
            poly(
                (0, 0, 2),
                (Fraction(-1, 3), Fraction(1, 3), 1),
                (Fraction(1, 3), Fraction(-1, 3), 1),
            )
        )
        assert integrate_local(g) == expect

    def test_double_edge_counts_two_points(self):
        # a double edge contributes exactly like two distinct branches
        double = ResolutionGraph(
            [strict("L1"), strict("L2"), exc("E3", 3)],
            [("L1", "E3"), ("L2", "E3"), ("L2", "E3")],
        )
        three = ResolutionGraph(
            [strict("L1"), strict("L2"), strict("L3"), exc("E3", 3)],
            [("L1", "E3"), ("L2", "E3"), ("L3", "E3")],
        )
        assert integrate_local(double) == integrate_local(three)
        # collapsing the double edge to one point leaves inconsistent
        # branch data (local monodromies no longer multiply to 1)
        collapsed = ResolutionGraph(
            [strict("L1"), strict("L2"), exc("E3", 3)],
            [("L1", "E3"), ("L2", "E3")],
        )
        with pytest.raises(InvalidParams):
            integrate_local(collapsed)


class TestValidation:
    def test_duplicate_id(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph([exc("E", 2), exc("E", 3)], [])

    def test_unknown_edge_reference(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph([exc("E", 2)], [("E", "X")])

    def test_self_loop(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph([exc("E", 2)], [("E", "E")])

    def test_strict_strict_point(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph(
                [exc("E", 2), strict("S1"), strict("S2")],
                [("E", "S1"), ("S1", "S2")],
            )

    def test_non_reduced_strict_branch(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph(
                [exc("E", 2), Divisor("S", 2, False)], [("E", "S")]
            )

    def test_isolated_strict_branch(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph([exc("E", 2), strict("S")], [])

    def test_no_exceptional(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph([strict("S")], [])

    def test_disconnected_exceptional_locus(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph(
                [exc("E1", 2), exc("E2", 2), strict("S")],
                [("E1", "S"), ("E2", "S")],
            )

    def test_nonpositive_multiplicity(self):
        with pytest.raises(InvalidGraph):
            ResolutionGraph([exc("E", 0)], [])

    def test_disconnected_cover_propagates(self):
        # middle divisor of multiplicity 4 with two multiplicity-2
        # neighbours: its degree-4 cover has gcd 2 and falls apart
        g = ResolutionGraph(
            [exc("A", 2), exc("B", 4), exc("C", 2)],
            [("A", "B"), ("B", "C")],
        )
        with pytest.raises(UnsupportedDisconnectedCover):
            integrate_local(g)


class TestSerialization:
    def test_round_trip_dim2(self):
        g = cusp_graph()
        data = g.to_json()
        assert data["dim"] == 2
        assert ResolutionGraph.from_json(data) == g

    def test_round_trip_dim1(self):
        g = ResolutionGraph.point(5)
        back = ResolutionGraph.from_json(g.to_json())
        assert back == g
        assert integrate_local(back) == integrate_local(g)

    def test_equality_ignores_edge_order(self):
        g1 = ResolutionGraph(
            [exc("E", 2), strict("S1"), strict("S2")],
            [("E", "S1"), ("E", "S2")],
        )
        g2 = ResolutionGraph(
            [strict("S2"), exc("E", 2), strict("S1")],
            [("S2", "E"), ("E", "S1")],
        )
        assert g1 == g2
