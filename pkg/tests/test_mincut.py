import networkx as nx
import pytest
from hypothesis import given, settings
from itertools import product

from latmin.core.errors import LatminError
from latmin.features.currents.services import find_minimal_current
from latmin.features.energy.models import VertexFunction
from latmin.features.energy.services import perimeter
from latmin.features.lattice.models import VertexSet, Window, window_edges
from latmin.features.mincut.models import FlowNetwork
from latmin.features.mincut.services import (
    brute_force_least_perimeter,
    infinite_capacity,
    is_least_perimeter,
    least_perimeter_solve,
)

from tests.strategies import vertex_sets


def networkx_value(U: Window, ones) -> int:
    graph = nx.DiGraph()
    inf = infinite_capacity(U)
    for p in U.ring():
        if p in ones:
            graph.add_edge("s", p, capacity=inf)
        else:
            graph.add_edge(p, "t", capacity=inf)
    for x, y in window_edges(U):
        graph.add_edge(x, y, capacity=1)
        graph.add_edge(y, x, capacity=1)
    value, _ = nx.minimum_cut(graph, "s", "t")
    return value


def test_flow_network_small_graph():
    network = FlowNetwork(4)
    network.add_arc(0, 1, 3)
    network.add_arc(0, 2, 2)
    network.add_arc(1, 2, 1)
    network.add_arc(1, 3, 2)
    network.add_arc(2, 3, 3)
    assert network.max_flow(0, 3) == 5
    assert network.reachable(0) == {0}


def test_single_cell_with_split_trace_has_two_optima():
    U = Window(lo=(0, 0), hi=(0, 0))
    ones = [(-1, 0), (1, 0)]
    result = brute_force_least_perimeter(U, ones)
    assert result.value == 2
    assert len(result.all_optima) == 2
    cut = least_perimeter_solve(U, ones)
    assert cut.value == 2
    assert (0, 0) not in cut.K_opt.members


def test_full_and_empty_traces():
    U = Window(lo=(0, 0), hi=(1, 1))
    assert least_perimeter_solve(U, U.ring()).value == 0
    assert set(least_perimeter_solve(U, U.ring()).K_opt) >= set(U.cells())
    assert least_perimeter_solve(U, []).value == 0


def test_half_plane_is_least_perimeter(half_plane):
    K = VertexSet.from_pattern(half_plane, Window.ball((0, 0), 4))
    assert is_least_perimeter(K)
    assert least_perimeter_solve(K.window, K).value == perimeter(K) == 9


def test_strip_loses_to_empty_filling():
    U = Window.ball((0, 1), 2)
    ones = [p for p in U.ring() if 0 <= p[1] <= 2]
    assert least_perimeter_solve(U, ones).value == 6


def test_trace_must_lie_on_ring():
    with pytest.raises(LatminError):
        least_perimeter_solve(Window.ball((0, 0), 1), [(0, 0)])


def test_brute_force_guard():
    with pytest.raises(LatminError) as info:
        brute_force_least_perimeter(Window.ball((0, 0), 3), [])
    assert info.value.exit_code == 2


@given(vertex_sets(max_cells=10))
@settings(max_examples=60, deadline=None)
def test_three_way_equivalence(K):
    U = K.window
    ones = K.trace()
    best = brute_force_least_perimeter(U, ones).value
    assert least_perimeter_solve(U, ones).value == best
    assert networkx_value(U, ones) == best
    optimal = perimeter(K) == best
    assert is_least_perimeter(K) == optimal
    assert (find_minimal_current(VertexFunction.indicator(K)) is not None) == optimal


@pytest.mark.parametrize("length", [1, 2, 3, 4])
def test_three_way_equivalence_exhaustive_on_lines(length):
    U = Window(lo=(0,), hi=(length - 1,))
    closure = U.closure_cells()
    for flags in product((False, True), repeat=len(closure)):
        K = VertexSet(U, [p for p, on in zip(closure, flags) if on])
        best = brute_force_least_perimeter(U, K.trace()).value
        optimal = perimeter(K) == best
        assert is_least_perimeter(K) == optimal
        assert (find_minimal_current(VertexFunction.indicator(K)) is not None) == optimal


def test_optima_all_share_the_value():
    U = Window(lo=(0, 0), hi=(1, 1))
    ones = [(-1, 0), (-1, 1), (2, 0)]
    result = brute_force_least_perimeter(U, ones)
    assert all(perimeter(K) == result.value for K in result.all_optima)
