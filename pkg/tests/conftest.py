import os

import hypothesis
import pytest

from latmin.features.lattice.schemas import AllOf, AnyOf, Box, Cells, HalfSpace, Orthant, PatternOracle

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


def strip(width: int, dim: int = 2) -> PatternOracle:
    """{0 ≤ x_last ≤ width - 1}."""
    axis = dim - 1
    return PatternOracle(
        dim=dim,
        expr=AllOf(parts=[HalfSpace(axis=axis, sign="+", c=0), HalfSpace(axis=axis, sign="-", c=-(width - 1))]),
        id=f"strip{width}",
    )


@pytest.fixture
def half_plane() -> PatternOracle:
    return PatternOracle(dim=2, expr=HalfSpace(axis=1, sign="+", c=0), id="half-plane")


@pytest.fixture
def quadrant() -> PatternOracle:
    return PatternOracle(dim=2, expr=Orthant(corner=[0, 0], signs=["+", "+"]), id="quadrant")


@pytest.fixture
def half_space_3d() -> PatternOracle:
    return PatternOracle(dim=3, expr=HalfSpace(axis=2, sign="+", c=0), id="half-space")


@pytest.fixture
def single_point() -> PatternOracle:
    return PatternOracle(dim=2, expr=Cells(points=[[0, 0]]), id="point")


@pytest.fixture
def rectangle() -> PatternOracle:
    return PatternOracle(dim=2, expr=Box(lo=[0, 0], hi=[1, 2]), id="rect")


@pytest.fixture
def touching_octants() -> PatternOracle:
    """Two octants meeting only at the origin, which lies in no unit cube.

    The origin has four neighbours in M³ and none of its eight cubes is
    full, so M³ fails the local test there while M is minimal.
    """
    upper = [Orthant(corner=[1, 0, 0], signs=["+", "+", "+"]), Orthant(corner=[0, 1, 0], signs=["+", "+", "+"])]
    lower = [Orthant(corner=[-1, 0, 0], signs=["-", "-", "-"]), Orthant(corner=[0, -1, 0], signs=["-", "-", "-"])]
    return PatternOracle(
        dim=3, expr=AnyOf(parts=upper + lower + [Cells(points=[[0, 0, 0]])]), id="touching-octants"
    )
