import pytest
from outerthick.certify.mop import MopCertificate, certify_mop
from outerthick.config import Budgets
from outerthick.constructions.doubling import (
    StarGraph,
    Variant,
    base_family,
    base_star,
    check_claim1,
    check_claim2,
    double_graph,
    doubling_family,
    figure_order,
    has_star_property,
    level_of,
    realized_steps,
    star_cycle,
    target_graph,
)
from outerthick.core.errors import BudgetExceededError, InvalidFamilyError, StarPropertyError
from outerthick.core.graph_ops import complete_minus_matching, edges_disjoint, max_degree, union
from outerthick.core.models import Family, Graph


def test_base_family():
    f = base_family()
    assert f.t == 1 and f.n == 4
    assert f.members[0] == frozenset({(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)})
    assert f.steps == (1,)


def test_first_doubling_reproduces_both_drawings():
    f = doubling_family(1)
    middle = {(v, (v + 1) % 8) for v in range(8)} | {(0, 2), (2, 4), (4, 6), (0, 6), (0, 4)}
    assert f.members[0] == frozenset(tuple(sorted(e)) for e in middle)

    cycle = [0, 5, 2, 7, 4, 1, 6, 3]
    right = {tuple(sorted((cycle[p], cycle[(p + 1) % 8]))) for p in range(8)}
    right |= {(1, 3), (3, 5), (5, 7), (1, 7), (1, 5)}
    assert f.members[1] == frozenset(right)
    assert f.steps == (1, 5)
    assert star_cycle(8, 5) == cycle


def test_level_two_steps():
    assert doubling_family(2).steps == (1, 5, 9, 13)


@pytest.mark.parametrize("s", range(0, 7))
def test_doubling_family(s):
    f = doubling_family(s)
    assert f.t == 2 ** s
    assert f.n == 2 ** (s + 2)
    for k, g in enumerate(f.graphs()):
        assert isinstance(certify_mop(g), MopCertificate)
        assert has_star_property(g, f.step(k))
        assert max_degree(g) == 2 * s + 3
    assert edges_disjoint(f).disjoint
    g = union(f)
    assert g == target_graph(s)
    assert g.m == 2 ** s * (2 ** (s + 3) - 3)
    assert check_claim1(f)
    assert check_claim2(f)


def test_target_graph():
    assert target_graph(1) == complete_minus_matching(8, [(2, 6), (3, 7)])


def test_realized_steps_cover_odd_residues():
    assert realized_steps(doubling_family(2)) == set(range(1, 16, 2))


def test_double_graph_variants():
    star = base_star()
    even = double_graph(star, Variant.EVEN)
    odd = double_graph(star, "odd")
    assert (even.index, even.step, even.level) == (0, 1, 1)
    assert (odd.index, odd.step, odd.level) == (1, 5, 1)
    assert even.graph.m == odd.graph.m == 13


def test_double_graph_requires_the_star_property():
    # Outer cycle 0, 2, 1, 3 is not arithmetic with step 1.
    g = Graph(n=4, edges=frozenset({(0, 2), (1, 2), (1, 3), (0, 3), (2, 3)}))
    with pytest.raises(StarPropertyError):
        double_graph(StarGraph(graph=g, step=1, index=0, level=0), Variant.EVEN)


def test_star_graph_validation():
    with pytest.raises(ValueError):
        StarGraph(graph=base_star().graph, step=2, index=0, level=0)
    with pytest.raises(ValueError):
        StarGraph(graph=base_star().graph, step=1, index=0, level=1)


def test_doubling_budget():
    with pytest.raises(BudgetExceededError):
        doubling_family(3, Budgets(doubling_max_s=2))
    with pytest.raises(ValueError):
        doubling_family(-1)


def test_figure_order():
    assert figure_order(doubling_family(2)) == [0, 2, 1, 3]
    assert figure_order(base_family()) == [0]


def test_level_of():
    assert level_of(4) == 0
    assert level_of(32) == 3
    with pytest.raises(InvalidFamilyError):
        level_of(12)


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_claim1_fails_when_a_member_is_dropped(s):
    f = doubling_family(s)
    dropped = f.select([k for k in range(f.t) if k != f.t - 1])
    missing = {f.steps[-1], f.n - f.steps[-1]}
    assert not check_claim1(dropped)
    assert missing.isdisjoint(realized_steps(dropped))


@pytest.mark.parametrize("s", [0, 1, 2, 3])
def test_claim2_fails_when_a_middle_edge_is_removed(s):
    f = doubling_family(s)
    middle = (0, 2 ** (s + 1))
    members = tuple(member - {middle} for member in f.members)
    assert members != f.members
    assert not check_claim2(Family(t=f.t, n=f.n, members=members, steps=f.steps))


@pytest.mark.parametrize("s", [2, 3, 4])
def test_steps_and_parity_split_follow_the_previous_level(s):
    f, previous = doubling_family(s), doubling_family(s - 1)
    half = previous.t
    for k in range(half):
        assert f.steps[k] == previous.steps[k]
        assert f.steps[half + k] == previous.steps[k] + previous.n

        for offset, child in ((0, k), (1, half + k)):
            same_parity = {
                ((u - offset) // 2, (v - offset) // 2)
                for u, v in f.members[child]
                if u % 2 == offset and v % 2 == offset
            }
            assert same_parity == set(previous.members[k])
    for k, g in enumerate(f.graphs()):
        assert has_star_property(g, f.step(k))
