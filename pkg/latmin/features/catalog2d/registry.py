"""Z² family registry: connected families plus their disconnected complements."""

from typing import Dict, List

from latmin.features.catalog2d.models import Family, Params
from latmin.features.lattice.schemas import (
    AllOf,
    AnyOf,
    Box,
    HalfSpace,
    Linear,
    Node,
    Not,
    Orthant,
)


# -------- Building blocks --------
def quadrant(x: int, y: int, sx: str, sy: str) -> Orthant:
    return Orthant(corner=[x, y], signs=[sx, sy])


def box(x0: int, y0: int, x1: int, y1: int) -> Box:
    return Box(lo=[x0, y0], hi=[x1, y1])


def ledged_quadrant(h: int) -> AnyOf:
    """Upper-left quadrant whose bottom row is extended by a ledge of length h."""
    return AnyOf(parts=[quadrant(0, 1, "-", "+"), box(-h, 0, 0, 0)])


def pinched(*outside: Node) -> AllOf:
    """Everything off the given staircases; (1, 1) and (-1, -1) pinch the origin."""
    return AllOf(parts=[Not(part=quadrant(1, 1, "+", "+")), Not(part=quadrant(-1, -1, "-", "-"))]
                 + [Not(part=part) for part in outside])


# -------- Non-geodesic boundary --------
# Each member is a band between a north-east and a south-west staircase that
# pinch at the origin. Rows meeting both staircases need the full column 0.
def _f1_1(p: Params) -> Node:
    # recessed column of height h left of the pinch
    return pinched(quadrant(-2, p["h"] - 1, "-", "-"))


def _f1_2(p: Params) -> Node:
    return AnyOf(
        parts=[ledged_quadrant(p["h"]), quadrant(1, 0, "+", "-"), box(0, -p["d"], 0, 0)]
    )


def _f1_3(p: Params) -> Node:
    return AnyOf(parts=[ledged_quadrant(p["h"]), quadrant(p["d"], 0, "+", "-")])


def _f1_4(p: Params) -> Node:
    # spur of column 0 capped d + 1 rows above the pinch
    return pinched(quadrant(-p["h"] - 1, 0, "-", "-"), quadrant(0, p["d"] + 2, "+", "+"))


def _f1_5(p: Params) -> Node:
    # row 0 runs from -a + 1 to b - 1 through the pinch; h, d place the upper corner
    h, d = p["h"], p["d"]
    return AllOf(
        parts=[
            Not(part=quadrant(d, h, "+", "+")),
            Not(part=quadrant(d + p["b"] - 1, h - 1, "+", "+")),
            Not(part=quadrant(-1, -1, "-", "-")),
            Not(part=quadrant(-p["a"], 0, "-", "-")),
        ]
    )


def _f1_6(p: Params) -> Node:
    # recess of width h + d
    return pinched(quadrant(-p["h"] - p["d"] - 1, 0, "-", "-"))


def _f1_7(p: Params) -> Node:
    h = p["h"]
    return pinched(quadrant(-h - 1, 0, "-", "-"), quadrant(-h - p["d"] - 1, 1, "-", "-"))


# -------- Geodesic, non-simple boundary --------
def _f2_1(p: Params) -> Node:
    h = p["h"]
    return AnyOf(parts=[quadrant(h, 0, "+", "+"), quadrant(0, 0, "-", "-"), box(0, 0, h, 0)])


def _f2_2(p: Params) -> Node:
    h, d = p["h"], p["d"]
    return AnyOf(parts=[quadrant(d, h, "+", "+"), quadrant(0, 0, "-", "-"), box(0, 0, d, h)])


def _f2_3(p: Params) -> Node:
    h, d = p["h"], p["d"]
    return AnyOf(parts=[quadrant(d, h, "+", "+"), quadrant(0, 0, "-", "-"), box(d, 0, d, h - 1)])


# -------- Geodesic, simple boundary --------
def _f3_2_1(p: Params) -> Node:
    h, d = p["h"], p["d"]
    return AllOf(parts=[Not(part=quadrant(1, h + 1, "+", "+")), Not(part=quadrant(d - 1, -1, "-", "-"))])


def _f3_2_2(p: Params) -> Node:
    h, d = p["h"], p["d"]
    return AllOf(parts=[Not(part=quadrant(d + 1, h + 1, "+", "+")), Not(part=quadrant(-1, -1, "-", "-"))])


def _caption(text: str, check) -> Dict:
    return {"caption": text, "constraint": check}


_HD1 = _caption("h=d=1", lambda p: p["h"] == 1 and p["d"] == 1)

CONNECTED: List[Family] = [
    Family(id="F1-1", parameters=("h",), defaults={"h": 1}, build=_f1_1, reconstructed=True,
           **_caption("h<=2", lambda p: 0 <= p["h"] <= 2)),
    Family(id="F1-2", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f1_2,
           reconstructed=True, **_HD1),
    Family(id="F1-3", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f1_3,
           reconstructed=True, **_HD1),
    Family(id="F1-4", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f1_4,
           reconstructed=True, **_HD1),
    Family(id="F1-5", parameters=("h", "d", "a", "b"), defaults={"h": 1, "d": 1, "a": 2, "b": 2},
           build=_f1_5, reconstructed=True,
           **_caption("h=d=1,a>=2,b>=2",
                      lambda p: p["h"] == 1 and p["d"] == 1 and p["a"] >= 2 and p["b"] >= 2)),
    Family(id="F1-6", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f1_6,
           reconstructed=True, **_HD1),
    Family(id="F1-7", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f1_7,
           reconstructed=True, **_HD1),
    Family(id="F2-1", parameters=("h",), defaults={"h": 0}, build=_f2_1,
           anchor=lambda p: (p["h"] // 2, 0), **_caption("h<=2", lambda p: 0 <= p["h"] <= 2)),
    Family(id="F2-2", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f2_2, **_HD1),
    Family(id="F2-3", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f2_3,
           reconstructed=True, **_HD1),
    Family(id="F3-1-1", build=lambda p: HalfSpace(axis=1, sign="+", c=0)),
    Family(id="F3-1-2", build=lambda p: quadrant(0, 0, "+", "+")),
    Family(id="F3-1-3", build=lambda p: AnyOf(parts=[HalfSpace(axis=0, sign="-", c=0),
                                                     HalfSpace(axis=1, sign="-", c=0)]),
           reconstructed=True),
    Family(id="F3-1-4", build=lambda p: Linear(coeffs=[1, 1], c=0), reconstructed=True),
    Family(id="F3-1-5", build=lambda p: AllOf(parts=[HalfSpace(axis=1, sign="+", c=0),
                                                     Linear(coeffs=[1, 1], c=0)]),
           reconstructed=True),
    Family(id="F3-2-1", parameters=("h", "d"), defaults={"h": 1, "d": 3}, build=_f3_2_1,
           anchor=lambda p: (p["d"] // 2, p["h"] // 2),
           **_caption("0<=d<=h+2", lambda p: p["h"] >= 0 and 0 <= p["d"] <= p["h"] + 2)),
    Family(id="F3-2-2", parameters=("h", "d"), defaults={"h": 1, "d": 1}, build=_f3_2_2,
           anchor=lambda p: (p["d"] // 2, p["h"] // 2),
           **_caption("d>=0,h>=0", lambda p: p["d"] >= 0 and p["h"] >= 0)),
]


def _complement(family: Family) -> Family:
    build = family.build
    return family.model_copy(
        update={
            "id": f"C:{family.id}",
            "build": lambda p, build=build: Not(part=build(p)),
            "connected": False,
            "complement_of": family.id,
        }
    )


# complements of the families with two boundary pieces are disconnected
COMPLEMENTS: List[Family] = [_complement(f) for f in CONNECTED if not f.id.startswith("F3-1")]

FAMILIES: Dict[str, Family] = {f.id: f for f in CONNECTED + COMPLEMENTS}
