import pytest

from latmin.core.config import settings
from latmin.core.errors import LatminError
from latmin.features.catalog2d import services
from latmin.features.catalog2d.models import Family
from latmin.features.catalog2d.registry import FAMILIES
from latmin.features.catalog2d.services import (
    are_isomorphic,
    canonical_form,
    classify_boundary,
    candidate_pattern,
    enumerate_candidates,
    family_center,
    generate,
    isolated_paths,
    list_families,
    load_catalog,
    local_form,
    stored_certificate,
    verify_family,
)
from latmin.features.currents.services import validate_certificate
from latmin.features.lattice.models import Window
from latmin.features.lattice.schemas import Box, Orthant, PatternOracle


# -------- Registry --------
def test_registry_sizes():
    assert len(list_families(connected=True)) == 17
    complements = list_families(connected=False)
    assert len(complements) == 12
    assert all(f.complement_of and f.id == f"C:{f.complement_of}" for f in complements)


def test_generate_names_the_member():
    pattern = generate("F3-2-1", {"h": 1, "d": 3})
    assert pattern.id == "F3-2-1(h=1,d=3)"
    assert pattern.dim == 2


def test_complement_member_is_complement():
    pattern = generate("F3-2-1")
    complement = generate("C:F3-2-1")
    window = Window.ball(family_center("F3-2-1"), 4)
    assert all(pattern(p) != complement(p) for p in window.closure_cells())


@pytest.mark.parametrize(
    "family_id, params",
    [("F1-1", {"h": 3}), ("F1-5", {"a": 1}), ("F1-2", {"h": 2}), ("F3-2-1", {"h": 0, "d": 3})],
)
def test_generator_refuses_out_of_caption(family_id, params):
    with pytest.raises(LatminError) as exc:
        generate(family_id, params)
    assert exc.value.exit_code == 2
    assert "caption" in exc.value.detail


def test_generator_rejects_unknown_parameter():
    with pytest.raises(LatminError) as exc:
        generate("F1-1", {"z": 1})
    assert exc.value.exit_code == 2


def test_unknown_family():
    with pytest.raises(LatminError) as exc:
        generate("F9-9")
    assert exc.value.exit_code == 2


def test_force_bypasses_caption():
    pattern = generate("F1-1", {"h": 3}, force=True)
    assert pattern.id == "F1-1(h=3)"


# -------- Verification --------
@pytest.mark.parametrize("h", [0, 1, 2, 3])
def test_gap_threshold_family(h):
    inside = verify_family("F3-2-1", {"h": h, "d": h + 2}, radius=12)
    assert inside.in_constraint
    assert inside.report.certified
    assert inside.certificate is not None

    beyond = verify_family("F3-2-1", {"h": h, "d": h + 3}, radius=12, force=True)
    assert not beyond.in_constraint
    assert beyond.report.refuted_at is not None
    assert beyond.certificate is None


def test_ledge_family_beyond_caption_is_refuted():
    verification = verify_family("F2-1", {"h": 3}, radius=12, force=True)
    assert verification.report.refuted_at is not None


@pytest.mark.parametrize("family_id", ["F3-1-1", "F3-1-2", "F3-1-4", "F2-1", "C:F3-2-1"])
def test_default_members_certify(family_id):
    verification = verify_family(family_id, radius=6)
    assert verification.report.certified


def test_stored_certificate_validates(monkeypatch):
    monkeypatch.setattr(services, "_REGISTERED", {})
    monkeypatch.setattr(settings, "CATALOG_RADIUS", 5)
    certificate = stored_certificate("F3-1-2")
    assert certificate.window == Window.ball(family_center("F3-1-2"), 5)
    assert validate_certificate(certificate, generate("F3-1-2"))
    assert stored_certificate("F3-1-2") is certificate


def test_unregistrable_family_is_refused(monkeypatch):
    monkeypatch.setattr(services, "_REGISTERED", {})
    monkeypatch.setattr(settings, "CATALOG_RADIUS", 4)
    monkeypatch.setitem(FAMILIES, "X-1", Family(id="X-1", build=lambda p: Box(lo=[0, 0], hi=[0, 0])))
    with pytest.raises(LatminError) as exc:
        generate("X-1")
    assert exc.value.exit_code == 1
    assert "not registrable" in exc.value.detail
    assert "X-1" not in services._REGISTERED


def test_load_catalog_certifies_requested_families(monkeypatch):
    monkeypatch.setattr(services, "_REGISTERED", {})
    monkeypatch.setattr(settings, "CATALOG_RADIUS", 3)
    loaded = load_catalog(["F3-1-1", "F2-1", "C:F3-2-2"])
    assert sorted(loaded) == ["C:F3-2-2", "F2-1", "F3-1-1"]
    assert loaded["F3-1-1"].window == Window.ball((0, 0), 3)


# -------- Non-geodesic families --------
@pytest.mark.parametrize("h, certified", [(1, True), (2, True), (3, False)])
def test_recessed_column_threshold(h, certified):
    verification = verify_family("F1-1", {"h": h}, radius=12, force=True)
    assert verification.in_constraint == (h <= 2)
    assert verification.report.certified == certified


@pytest.mark.parametrize("params", [{"a": 1}, {"b": 1}, {"a": 1, "b": 1}])
def test_short_pinch_row_leaves_the_class(params):
    verification = verify_family("F1-5", params, radius=12, force=True)
    assert not verification.in_constraint
    assert verification.report.certified
    window = Window.ball((0, 0), 6)
    assert classify_boundary(generate("F1-5", params, force=True), window).degrees[(0, 0)] < 4
    assert classify_boundary(generate("F1-5"), window).degrees[(0, 0)] == 4


@pytest.mark.parametrize("family_id", ["F1-1", "F1-4", "F1-5", "F1-6", "F1-7"])
def test_pinched_band_members_certify(family_id):
    assert verify_family(family_id, radius=12).report.certified


# -------- Class flags --------
@pytest.mark.parametrize("family", list_families(connected=True), ids=lambda f: f.id)
def test_family_class_flags(family):
    pattern = generate(family.id)
    analysis = classify_boundary(pattern, Window.ball(family_center(family.id), 6))
    kind = family.id.split("-")[0]
    if kind == "F1":
        assert not analysis.geodesic
    elif kind == "F2":
        assert analysis.geodesic and not analysis.simple
    else:
        assert analysis.geodesic and analysis.simple


# -------- Boundary structure --------
def test_half_plane_boundary(half_plane):
    analysis = classify_boundary(half_plane, Window.ball((0, 0), 3))
    assert analysis.boundary_vertices == [(x, 0) for x in range(-3, 4)]
    assert set(analysis.degrees.values()) == {2}
    assert analysis.flat_runs == [((-3, 0), (3, 0))]
    assert analysis.corners == []
    assert analysis.loops == []
    assert analysis.components == 1
    assert analysis.geodesic and analysis.simple and analysis.oriented


def test_quadrant_has_one_corner(quadrant):
    analysis = classify_boundary(quadrant, Window.ball((0, 0), 3))
    assert analysis.corners == [(0, 0)]
    assert analysis.geodesic


def test_touching_quadrants_are_not_simple():
    analysis = classify_boundary(generate("F2-1", {"h": 0}), Window.ball((0, 0), 3))
    assert analysis.degrees[(0, 0)] == 4
    assert not analysis.simple
    assert analysis.geodesic


def test_unit_square_loop():
    square = PatternOracle(dim=2, expr=Box(lo=[0, 0], hi=[1, 1]))
    analysis = classify_boundary(square, Window.ball((0, 0), 3))
    assert analysis.loops == [[(0, 0), (0, 1), (1, 0), (1, 1)]]
    assert analysis.unit_square_loops == analysis.loops
    assert sorted(analysis.corners) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_segment_is_isolated_path():
    segment = PatternOracle(dim=2, expr=Box(lo=[0, 0], hi=[4, 0]))
    paths = isolated_paths(segment.predicate(), Window.ball((2, 0), 4))
    assert len(paths) == 1
    assert paths[0].vertices == [(x, 0) for x in range(5)]
    assert paths[0].length == 4
    assert paths[0].geodesic
    analysis = classify_boundary(segment, Window.ball((2, 0), 4))
    assert not analysis.oriented


def test_classification_needs_plane(half_space_3d):
    with pytest.raises(LatminError):
        classify_boundary(half_space_3d, Window.ball((0, 0, 0), 1))


# -------- Symmetry --------
def test_rotated_quadrant_is_isomorphic(quadrant):
    rotated = PatternOracle(dim=2, expr=Orthant(corner=[0, 0], signs=["-", "+"]))
    assert are_isomorphic(quadrant, rotated, Window.ball((0, 0), 2))


def test_translated_half_plane_is_isomorphic(half_plane):
    assert are_isomorphic(half_plane, half_plane.translated((0, 1)), Window.ball((0, 0), 2))


def test_half_plane_is_not_a_quadrant(half_plane, quadrant):
    assert not are_isomorphic(half_plane, quadrant, Window.ball((0, 0), 2))


def test_canonical_form_ignores_rotation():
    assert canonical_form([(1, 0), (0, 1)], (0, 0)) == canonical_form([(-1, 0), (0, -1)], (0, 0))
    assert canonical_form([(1, 0), (-1, 0)], (0, 0)) != canonical_form([(1, 0), (0, 1)], (0, 0))


def test_local_form_of_interior_vertex_is_none():
    members = frozenset([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)])
    assert local_form(members, (0, 0)) is None
    assert local_form(members, (5, 5)) is None
    assert local_form(members, (1, 0)) == ((-1, 0),)


# -------- Enumeration --------
def test_radius_one_has_three_local_forms():
    report = enumerate_candidates(1)
    assert not report.partial
    assert report.traces_checked == 4096
    assert len(report.local_forms) == 3
    sizes = sorted(len(form) for form in report.local_forms)
    assert sizes == [2, 2, 3]


def test_radius_two_candidates_have_no_long_geodesic_paths():
    report = enumerate_candidates(2, budget=60, seed=7)
    assert report.partial
    assert report.traces_checked == 60
    window = Window.ball((0, 0), 2)
    for K in report.candidates:
        test = candidate_pattern(K).predicate()
        assert not any(p.geodesic and p.length >= 3 for p in isolated_paths(test, window))


def test_enumeration_radius_is_bounded():
    with pytest.raises(LatminError) as exc:
        enumerate_candidates(6)
    assert exc.value.exit_code == 2
