import pytest

from latmin.core.errors import LatminError
from latmin.features.currents.services import certify_at_radius
from latmin.features.lattice.models import Window
from latmin.features.render.services import render_ascii, render_svg


def test_ascii_quadrant(quadrant):
    assert render_ascii(quadrant, Window.ball((0, 0), 1)) == ".##\n.##\n...\n"


def test_ascii_mark(quadrant):
    text = render_ascii(quadrant, Window.ball((0, 0), 1), mark=(0, 0))
    assert text.splitlines()[1] == ".@#"


def test_svg_draws_every_vertex(quadrant):
    svg = render_svg(quadrant, Window.ball((0, 0), 1))
    assert svg.startswith('<?xml version="1.0"')
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 9
    assert svg.count('fill="#dddddd"') == 1
    assert 'stroke-width="3"' in svg
    assert "url(#arrow)" not in svg


def test_svg_draws_current_arrows(quadrant):
    certificate = certify_at_radius(quadrant, (0, 0), 1)
    svg = render_svg(quadrant, Window.ball((0, 0), 1), certificate)
    assert 'marker-end="url(#arrow)"' in svg


def test_rendering_is_planar(half_space_3d):
    with pytest.raises(LatminError) as exc:
        render_ascii(half_space_3d, Window.ball((0, 0, 0), 1))
    assert exc.value.exit_code == 2
