import pytest
from hypothesis import given
from hypothesis import strategies as st

from latmin.core.errors import LatminError
from latmin.features.lattice.models import VertexSet, Window, window_edges
from latmin.features.lattice.schemas import (
    AllOf,
    AnyOf,
    Box,
    Cells,
    Extrude,
    Full,
    HalfSpace,
    Linear,
    Not,
    Orthant,
    PatternOracle,
    Skeleton,
    Translate,
)
from latmin.features.lattice.services import (
    dump_grid2,
    dump_pattern,
    edge_sets,
    exterior_boundary,
    load_pattern,
    neighbors,
    parse_grid2,
    vertex_boundary,
)

RECT_GRID = "GRID2 -1 -1 4 5\n....\n.##.\n.##.\n.##.\n....\n"


def test_neighbors_order():
    assert neighbors((0, 0)) == [(-1, 0), (1, 0), (0, -1), (0, 1)]
    assert len(neighbors((0, 0, 0))) == 6


def test_neighbors_dimension_mismatch():
    with pytest.raises(LatminError):
        neighbors((0, 0), 3)


def test_ball_ring_and_closure():
    W = Window.ball((0, 0), 1)
    assert W.size == 9
    assert len(W.ring()) == 12
    assert len(W.closure_cells()) == 21
    assert len(window_edges(W)) == 24
    assert (2, 2) not in W.closure_cells()


def test_window_rejects_inverted_corners():
    with pytest.raises(LatminError):
        Window(lo=(1, 0), hi=(0, 0))


def test_explicit_set_needs_pattern_beyond_closure():
    K = VertexSet(Window.ball((0, 0), 1), [(0, 0)])
    assert K.outside_rule == "explicit"
    with pytest.raises(LatminError, match="needs pattern"):
        (5, 5) in K


def test_pattern_backed_set_answers_everywhere(half_plane):
    K = VertexSet.from_pattern(half_plane, Window.ball((0, 0), 1))
    assert K.outside_rule == "from-pattern"
    assert (40, 7) in K
    assert (40, -7) not in K


def test_complement_and_trace(half_plane):
    W = Window.ball((0, 0), 1)
    K = VertexSet.from_pattern(half_plane, W)
    C = K.complement()
    assert K.members | C.members == frozenset(W.closure_cells())
    assert not K.members & C.members
    assert (0, -9) in C
    assert K.trace() == frozenset({(-2, 0), (-2, 1), (2, 0), (2, 1), (-1, 2), (0, 2), (1, 2)})


def test_boundaries_of_half_plane(half_plane):
    W = Window.ball((0, 0), 2)
    K = VertexSet.from_pattern(half_plane, W)
    assert set(vertex_boundary(K)) == {(x, 0) for x in range(-2, 3)}
    assert set(exterior_boundary(K)) == {(x, -1) for x in range(-2, 3)}
    cut, edges = edge_sets(K)
    assert len(cut) == 5
    assert edges == window_edges(W)


def test_vertex_boundary_of_single_point(single_point):
    K = VertexSet.from_pattern(single_point, Window.ball((0, 0), 1))
    assert set(vertex_boundary(K)) == {(0, 0)}
    assert set(exterior_boundary(K)) == {(-1, 0), (1, 0), (0, -1), (0, 1)}


def test_grid2_parse_and_dump():
    K = parse_grid2(RECT_GRID)
    assert K.window == Window(lo=(0, 0), hi=(1, 2))
    assert len(K) == 6
    assert dump_grid2(K) == RECT_GRID


@pytest.mark.parametrize(
    "text",
    [
        "GRID 0 0 3 3\n...\n...\n...\n",
        "GRID2 0 0 3 3\n...\n...\n",
        "GRID2 0 0 3 3\n...\n.x.\n...\n",
        "GRID2 0 0 2 2\n..\n..\n",
    ],
)
def test_grid2_rejects_malformed(text):
    with pytest.raises(LatminError) as info:
        parse_grid2(text)
    assert info.value.exit_code == 2


def test_pattern_document_round_trip():
    pattern = PatternOracle(
        dim=2,
        expr=AnyOf(
            parts=[
                Orthant(corner=[0, 0], signs=["+", "-"]),
                Translate(offset=[1, 1], part=Box(lo=[0, 0], hi=[2, 2])),
                Not(part=Linear(coeffs=[1, 1], c=-4)),
            ]
        ),
        id="mixed",
    )
    again = load_pattern(dump_pattern(pattern))
    assert again.model_dump() == pattern.model_dump()


def test_load_pattern_rejects_unknown_operator():
    with pytest.raises(LatminError):
        load_pattern('{"dim": 2, "expr": {"op": "sphere"}}')


def test_complement_toggles_name(half_plane):
    C = half_plane.complement()
    assert C.id == "C:half-plane"
    assert not C((0, 0)) and C((0, -1))
    back = C.complement()
    assert back.id == "half-plane"
    assert back((0, 0))


def test_extruded_and_translated(quadrant):
    E = quadrant.extruded(3)
    assert E.dim == 3 and E.id == "quadrantxZ"
    assert E((1, 1, -50)) and not E((-1, 1, 0))
    T = quadrant.translated((2, 3))
    assert T((2, 3)) and not T((1, 3))


def test_skeleton_node_of_single_point():
    point = Cells(points=[[0, 0, 0]])
    assert Skeleton(k=0, part=point).contains((0, 0, 0))
    assert not Skeleton(k=1, part=point).contains((0, 0, 0))


CSG = [
    HalfSpace(axis=0, sign="-", c=1),
    Linear(coeffs=[2, -1], c=1),
    Orthant(corner=[1, -1], signs=["-", "+"]),
    Box(lo=[-1, -2], hi=[2, 0]),
    Cells(points=[[0, 0], [3, 1]]),
    Full(),
    AllOf(parts=[HalfSpace(axis=1, c=0), Not(part=Box(lo=[0, 0], hi=[1, 1]))]),
    Extrude(axes=[1], part=Cells(points=[[2]])),
    Skeleton(k=2, part=AnyOf(parts=[Box(lo=[0, 0], hi=[1, 1]), Cells(points=[[3, 3]])])),
]


@pytest.mark.parametrize("expr", CSG, ids=lambda e: e.op)
@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_interpreter_and_compiled_predicate_agree(expr, p):
    pattern = PatternOracle(dim=2, expr=expr)
    assert pattern.contains(p) == pattern(p)


def test_restrict_pattern_backed_set(half_plane):
    K = VertexSet.from_pattern(half_plane, Window.ball((0, 0), 1))
    wider = K.restrict(Window.ball((0, 0), 3))
    assert wider == VertexSet.from_pattern(half_plane, Window.ball((0, 0), 3))


def test_restrict_explicit_set_to_smaller_window():
    K = VertexSet(Window.ball((0, 0), 2), [(0, 0), (1, 0), (2, 2)])
    inner = K.restrict(Window.ball((0, 0), 1))
    assert inner.members == frozenset([(0, 0), (1, 0)])
    with pytest.raises(LatminError, match="needs pattern"):
        K.restrict(Window.ball((0, 0), 3))
