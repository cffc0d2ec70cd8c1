import pytest

from latmin.core.errors import LatminError
from latmin.features.lattice.models import Window
from latmin.features.lattice.schemas import AnyOf, Box, Cells, Full, HalfSpace, PatternOracle
from latmin.features.props.services import (
    check_boundary_structure,
    check_convexity,
    check_max_principle,
    check_min_degree,
    check_no_parallel_rays,
    check_slab_refutation,
    growth_bound,
    growth_report,
    run_all,
    slab_axis,
)

from tests.conftest import strip

LOWER = HalfSpace(axis=1, sign="-", c=0)


@pytest.fixture
def bump() -> PatternOracle:
    """{y ≤ 0} with two cells raised above it."""
    return PatternOracle(dim=2, expr=AnyOf(parts=[LOWER, Cells(points=[[0, 1], [1, 1]])]), id="bump")


@pytest.fixture
def cup() -> PatternOracle:
    return PatternOracle(
        dim=2, expr=AnyOf(parts=[Box(lo=[0, 0], hi=[2, 0]), Cells(points=[[0, 1], [2, 1]])]), id="cup"
    )


# -------- Degree --------
def test_half_plane_min_degree_holds(half_plane):
    report = check_min_degree(half_plane, Window.ball((0, 0), 3))
    assert report.holds


def test_isolated_point_has_low_degree(single_point):
    report = check_min_degree(single_point, Window.ball((0, 0), 1))
    assert report.violated
    assert report.witness == {"vertex": (0, 0), "degree": 0}
    assert report.line() == "PROP min-degree violated pattern=point vertex=(0,0) degree=0"


def test_line_of_degree_two_vertices_is_flagged():
    report = check_min_degree(strip(1), Window.ball((0, 0), 2))
    assert report.violated
    assert "edge" in report.witness


# -------- Convexity --------
def test_half_plane_is_convex(half_plane):
    assert check_convexity(half_plane, Window.ball((0, 0), 3)).holds


def test_gapped_row_breaks_convexity(cup):
    report = check_convexity(cup, Window.ball((1, 0), 3))
    assert report.violated
    assert report.witness["gap"] == (1, 1)
    assert report.surrogate


def test_convexity_is_planar(half_space_3d):
    report = check_convexity(half_space_3d, Window.ball((0, 0, 0), 1))
    assert report.verdict == "not-applicable"


# -------- Parallel rays --------
def test_strip_has_parallel_rays():
    report = check_no_parallel_rays(strip(3), Window.ball((0, 1), 3))
    assert report.violated
    first, second = report.witness["runs"]
    assert {first[0][1], second[0][1]} == {0, 2}


def test_half_plane_has_one_ray(half_plane):
    assert check_no_parallel_rays(half_plane, Window.ball((0, 0), 3)).holds


# -------- Boundary structure --------
def test_half_plane_boundary_structure(half_plane):
    assert check_boundary_structure(half_plane, Window.ball((0, 0), 3)).holds


def test_unit_block_boundary_structure():
    block = PatternOracle(dim=2, expr=Box(lo=[0, 0], hi=[1, 1]), id="block")
    assert check_boundary_structure(block, Window.ball((0, 0), 3)).holds


def test_segment_boundary_structure_fails():
    segment = PatternOracle(dim=2, expr=Box(lo=[0, 0], hi=[4, 0]), id="segment")
    assert check_boundary_structure(segment, Window.ball((2, 0), 4)).violated


# -------- Maximum principle --------
def test_bump_violates_max_principle(bump):
    report = check_max_principle(bump, 1, [(0,), (1,)], Window.ball((0, 0), 3))
    assert report.violated
    assert report.witness["clause"] == "max"
    assert report.witness["column"] == (0,)
    assert report.witness["H"] == 1
    assert report.witness["collar"] == 0


def test_flat_lower_half_plane_holds():
    lower = PatternOracle(dim=2, expr=LOWER, id="lower")
    assert check_max_principle(lower, 1, [(0,), (1,)], Window.ball((0, 0), 3)).holds


def test_unbounded_columns_are_not_applicable():
    full = PatternOracle(dim=2, expr=Full(), id="full")
    report = check_max_principle(full, 1, [(0,), (1,)], Window.ball((0, 0), 3))
    assert report.verdict == "not-applicable"
    assert report.witness["reason"] == "unbounded"


def test_scattered_region_is_not_realized(bump):
    report = check_max_principle(bump, 1, [(0,), (2,)], Window.ball((0, 0), 3))
    assert report.verdict == "not-applicable"
    assert report.witness["reason"] == "realization"


def test_max_principle_needs_two_dimensions():
    line = PatternOracle(dim=1, expr=HalfSpace(axis=0), id="ray")
    with pytest.raises(LatminError) as exc:
        check_max_principle(line, 0, [()], Window.ball((0,), 2))
    assert exc.value.exit_code == 2


def test_max_principle_axis_range(bump):
    with pytest.raises(LatminError):
        check_max_principle(bump, 2, [(0,), (1,)], Window.ball((0, 0), 3))


# -------- Slabs --------
@pytest.mark.parametrize("width", [1, 2, 3, 4])
def test_strips_are_refuted(width):
    report = check_slab_refutation(strip(width), width + 4)
    assert report.holds
    assert report.witness["axis"] == 1
    assert report.refuted_at is not None and report.refuted_at <= width + 4


def test_strip_of_width_three_refuted_by_six():
    report = check_slab_refutation(strip(3), 6)
    assert report.refuted_at <= 6


def test_slab_in_three_dimensions_is_refuted():
    report = check_slab_refutation(strip(2, dim=3), 3)
    assert report.holds


def test_half_plane_is_no_slab(half_plane):
    assert slab_axis(half_plane, Window.ball((0, 0), 3)) is None
    report = check_slab_refutation(half_plane, 3)
    assert report.verdict == "not-applicable"


# -------- Growth --------
def test_growth_bound_values():
    assert growth_bound(2, 1) == 48
    assert growth_bound(3, 0) == 36


@pytest.mark.parametrize("pattern_name", ["half_plane", "quadrant"])
def test_planar_growth_is_linear(pattern_name, request):
    series = growth_report(request.getfixturevalue(pattern_name), (0, 0), 5)
    assert [p.boundary for p in series.points] == [2 * r + 1 for r in range(1, 6)]
    assert series.within_bound
    assert series.boundary_nonempty
    assert len(series.records()) == 5


def test_half_space_growth_within_bound(half_space_3d):
    series = growth_report(half_space_3d, (0, 0, 0), 3)
    assert series.within_bound
    assert series.points[-1].boundary == 49


def test_growth_needs_positive_radius(half_plane):
    with pytest.raises(LatminError):
        growth_report(half_plane, (0, 0), 0)


# -------- Suite --------
def test_half_plane_passes_suite(half_plane):
    reports = run_all(half_plane, (0, 0), 4, slab_budget=4)
    verdicts = {r.property_id: r.verdict for r in reports}
    assert verdicts == {
        "min-degree": "holds",
        "convexity": "holds",
        "no-parallel-rays": "holds",
        "boundary-structure": "holds",
        "slab-refutation": "not-applicable",
    }


def test_violations_are_cross_checked():
    reports = run_all(strip(1), (0, 0), 3, slab_budget=3)
    violated = [r for r in reports if r.violated]
    assert violated
    assert all(r.refuted_at == 1 for r in violated)
