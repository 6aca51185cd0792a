import pytest
from outerthick.bounds.coloring import chromatic_number_exact, clique_lower_bound, find_k_coloring
from outerthick.bounds.gallery import (
    eight_vertex_cases,
    k7_minus_e_decomposition,
    maximal_equals_optimal_on_eight,
    maximality_witness_k7e,
    one_planar_separation,
    optimal_ot_graph,
)
from outerthick.bounds.lower_bound import BoundVerdict, counting_check, min_vertices
from outerthick.certify.mop import MopCertificate, certify_mop
from outerthick.certify.outerplanar import is_outerplanar_small
from outerthick.certify.search import SearchVerdict
from outerthick.config import Budgets
from outerthick.constructions.doubling import doubling_family
from outerthick.constructions.gn import gn_family
from outerthick.core.errors import BudgetExceededError, InvalidOrderError
from outerthick.core.graph_ops import complete_graph, complete_minus_matching, missing_pairs, union
from outerthick.core.models import Graph
from outerthick.formats.family_file import emit_family, parse_family

K7E_GOLDEN = """family 2 7
graph 0
0 1
0 2
0 6
1 2
2 3
2 4
2 5
2 6
3 4
4 5
5 6
graph 1
0 3
0 5
1 3
1 4
1 5
1 6
3 5
3 6
4 6
"""


def test_min_vertices():
    assert min_vertices(1) == 3
    assert all(min_vertices(t) == 4 * t for t in range(2, 51))
    with pytest.raises(InvalidOrderError):
        min_vertices(0)


def test_counting_check_examples():
    low = counting_check(2, 7)
    assert (low.total_edges, low.capacity) == (22, 21)
    assert low.counting_infeasible
    assert low.verdict == BoundVerdict.INFEASIBLE

    ok = counting_check(2, 8)
    assert (ok.total_edges, ok.capacity) == (26, 28)
    assert ok.verdict == BoundVerdict.FEASIBLE
    assert not ok.lemma_infeasible

    lemma = counting_check(3, 11)
    assert lemma.lemma_infeasible
    assert lemma.f_value == -4
    assert lemma.min_vertices == 12
    assert lemma.verdict == BoundVerdict.INFEASIBLE


def test_counting_check_roots_bracket_the_minimum():
    report = counting_check(5, 20)
    r1, r2 = report.roots
    assert r1 < 3
    assert 19 < r2 <= 20


def test_counting_verdict_matches_sign_of_f_on_grid():
    for t in range(1, 51):
        for n in range(3, 301):
            report = counting_check(t, n)
            assert (report.verdict == BoundVerdict.INFEASIBLE) == (report.f_value < 0)
            assert report.lemma_infeasible == (n < min_vertices(t))


def test_optimal_ot_graph_examples():
    assert optimal_ot_graph(1, 3).graph == complete_graph(3)

    k8m = optimal_ot_graph(2, 8)
    assert k8m.graph == complete_minus_matching(8, [(2, 6), (3, 7)])
    assert k8m.graph.m == 26

    w = optimal_ot_graph(3, 14)
    assert w.graph.m == 75
    assert w.family.t == 3


@pytest.mark.parametrize("t", range(1, 9))
def test_optimal_ot_graph_edge_counts(t):
    for n in (4 * t, 4 * t + 5, 4 * t + 16):
        w = optimal_ot_graph(t, n)
        assert w.graph.m == t * (2 * n - 3)
        assert w.family.n == n
        assert union(w.family) == w.graph


def test_optimal_ot_graph_rejects_orders_below_minimum():
    for t in range(2, 9):
        with pytest.raises(InvalidOrderError):
            optimal_ot_graph(t, 4 * t - 1)


def test_optimal_ot_graph_from_doubling():
    w = optimal_ot_graph(3, 16, construction="doubling")
    assert w.family.t == 3
    assert w.graph.m == 3 * (2 * 16 - 3)
    assert optimal_ot_graph(4, 20, construction="doubling").graph.m == 4 * 37
    with pytest.raises(InvalidOrderError):
        optimal_ot_graph(3, 12, construction="doubling")
    with pytest.raises(ValueError):
        optimal_ot_graph(2, 8, construction="other")


def test_k7_minus_e_decomposition():
    f = k7_minus_e_decomposition()
    left, right = f.graphs()
    assert left.m == 11 and right.m == 9
    assert isinstance(certify_mop(left), MopCertificate)
    assert is_outerplanar_small(right)
    g = union(f)
    assert g.m == 20
    assert missing_pairs(g) == [(0, 4)]


def test_k7_minus_e_golden_file():
    f = k7_minus_e_decomposition()
    assert emit_family(f) == K7E_GOLDEN
    assert emit_family(parse_family(K7E_GOLDEN)) == K7E_GOLDEN


@pytest.mark.slow
def test_maximality_witness_k7e():
    witness = maximality_witness_k7e()
    assert witness.confirmed
    assert witness.k7e_two.verdict == SearchVerdict.FOUND
    assert witness.k7_two.verdict == SearchVerdict.REFUTED
    assert witness.k7_three.verdict == SearchVerdict.FOUND
    assert witness.edge_count == 20 < witness.optimal_edge_count == 22


def test_maximality_witness_reports_budget():
    with pytest.raises(BudgetExceededError):
        maximality_witness_k7e(Budgets(search_node_cap=10), include_three=False)


@pytest.mark.parametrize("n", range(8, 21))
def test_one_planar_separation(n):
    witness = one_planar_separation(n)
    assert witness.edge_count == 4 * n - 6
    assert witness.one_planar_bound == 4 * n - 8
    assert witness.separated


def test_one_planar_separation_needs_eight_vertices():
    with pytest.raises(InvalidOrderError):
        one_planar_separation(7)


def test_eight_vertex_cases():
    cases = eight_vertex_cases()
    assert [c.label for c in cases] == [f"star-{k}" for k in range(1, 8)] + ["triangle"]
    assert all(c.contains_k7 for c in cases)


@pytest.mark.slow
def test_maximal_equals_optimal_on_eight():
    verdict = maximal_equals_optimal_on_eight()
    assert verdict.k7_refuted
    assert verdict.matching_optimal
    assert verdict.holds


def test_chromatic_number_small_graphs():
    assert chromatic_number_exact(complete_graph(3)) == 3
    c5 = Graph(n=5, edges=frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}))
    assert chromatic_number_exact(c5) == 3
    assert chromatic_number_exact(Graph(n=4)) == 1


@pytest.mark.parametrize("family", [
    pytest.param(lambda: gn_family(2), id="gn-2"),
    pytest.param(lambda: doubling_family(1), id="doubling-1"),
])
def test_k8_minus_matching_is_six_chromatic(family):
    g = union(family())
    assert clique_lower_bound(g) == 6
    assert chromatic_number_exact(g) == 6
    assert find_k_coloring(g, 5) is None


def test_chromatic_budget():
    with pytest.raises(BudgetExceededError):
        chromatic_number_exact(complete_graph(13))
