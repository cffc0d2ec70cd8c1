from typing import Iterable

from latmin.core.errors import usage_error
from latmin.features.lattice.models import Point
from latmin.features.lattice.schemas import AnyOf, PatternOracle, Skeleton


class SkeletonView:
    """Mᵏ of a base pattern: vertices of unit k-cubes lying wholly in the pattern."""

    __slots__ = ("base", "k", "pattern")

    def __init__(self, base: PatternOracle, k: int):
        if not 0 <= k <= base.dim:
            raise usage_error(f"skeleton order {k} outside 0..{base.dim}")
        self.base = base
        self.k = k
        name = f"{base.id}^{k}" if base.id else None
        self.pattern = PatternOracle(dim=base.dim, expr=Skeleton(k=k, part=base.expr), id=name)

    def __contains__(self, p: Point) -> bool:
        return self.pattern(p)


def skeleton_union(base: PatternOracle, orders: Iterable[int]) -> PatternOracle:
    """Pattern of the union of several skeleta, e.g. M³ ∪ M²."""
    orders = sorted(set(orders), reverse=True)
    for k in orders:
        if not 0 <= k <= base.dim:
            raise usage_error(f"skeleton order {k} outside 0..{base.dim}")
    parts = [Skeleton(k=k, part=base.expr) for k in orders]
    label = "∪".join(f"^{k}" for k in orders)
    name = f"{base.id}{label}" if base.id else None
    return PatternOracle(dim=base.dim, expr=AnyOf(parts=parts), id=name)
