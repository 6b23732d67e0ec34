"""Ordering schemes for vector values and extrema over finite sets.

Values are m-dimensional tuples of floats. Three schemes are provided:

* marginal: component-wise partial order. Only extrema are exposed; the
  supremum/infimum may be a vector absent from the operands (a false value).
* lexicographic: total order by first differing component.
* rank: an explicit bijection value -> rank realizing an arbitrary total
  order over a finite support (used by the tour-derived order).

Total orders guarantee that extrema of a finite set belong to the set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

VectorValue = tuple[float, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def as_value(v) -> VectorValue:
    """Normalize a vector-like to a tuple of builtin floats."""
    return tuple(float(c) for c in v)


def _check_same_dim(x: Sequence[float], y: Sequence[float]):
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")


def lex_compare(x, y) -> int:
    """Compare two values lexicographically: LESS, EQUAL or GREATER."""
    x, y = as_value(x), as_value(y)
    _check_same_dim(x, y)
    for a, b in zip(x, y):
        if a < b:
            return LESS
        if a > b:
            return GREATER
    return EQUAL


def marginal_extrema(values: Iterable, which: str) -> VectorValue:
    """Component-wise supremum or infimum of a finite set of values.

    The result need not belong to the set (false value).
    """
    vals = [as_value(v) for v in values]
    if not vals:
        raise ValueError("extrema of empty set undefined")
    m = len(vals[0])
    for v in vals:
        _check_same_dim(vals[0], v)
    agg = max if _check_which(which) == "sup" else min
    return tuple(agg(v[j] for v in vals) for j in range(m))


def order_extrema(values: Iterable, order, which: str) -> VectorValue:
    """Maximal or minimal element of a finite set under a total order.

    The result always belongs to the set. Raises for the marginal scheme,
    which is not total.
    """
    if not getattr(order, "is_total", False):
        raise ValueError(f"order {order.kind!r} is not total; extrema may leave the set")
    vals = [as_value(v) for v in values]
    if not vals:
        raise ValueError("extrema of empty set undefined")
    which = _check_which(which)
    best = vals[0]
    for v in vals[1:]:
        c = order.compare(v, best)
        if (which == "sup" and c == GREATER) or (which == "inf" and c == LESS):
            best = v
    return best


def _check_which(which: str) -> str:
    if which not in ("sup", "inf"):
        raise ValueError(f"which must be 'sup' or 'inf', got {which!r}")
    return which


@dataclass(frozen=True)
class MarginalOrder:
    """Component-wise partial order; exposes extrema only, no comparator."""

    kind: str = field(default="marginal", init=False)
    is_total: bool = field(default=False, init=False)

    def sup(self, values) -> VectorValue:
        return marginal_extrema(values, "sup")

    def inf(self, values) -> VectorValue:
        return marginal_extrema(values, "inf")


@dataclass(frozen=True)
class LexOrder:
    """Total order by the first differing component."""

    kind: str = field(default="lexicographic", init=False)
    is_total: bool = field(default=True, init=False)

    def compare(self, x, y) -> int:
        return lex_compare(x, y)

    def sup(self, values) -> VectorValue:
        return order_extrema(values, self, "sup")

    def inf(self, values) -> VectorValue:
        return order_extrema(values, self, "inf")


class RankOrder:
    """Total order realized as an explicit list of values in rank position.

    rank 0 is the bottom element. The map value -> rank is a bijection over
    the support; comparing values outside the support is an error.
    """

    kind = "rank"
    is_total = True

    def __init__(self, values: Iterable):
        vals = [as_value(v) for v in values]
        if not vals:
            raise ValueError("rank order needs at least one value")
        m = len(vals[0])
        for v in vals:
            _check_same_dim(vals[0], v)
        self.values: tuple[VectorValue, ...] = tuple(vals)
        self.value_to_rank: dict[VectorValue, int] = {v: i for i, v in enumerate(vals)}
        if len(self.value_to_rank) != len(vals):
            raise ValueError("rank order values must be distinct")
        self.dim = m

    def rank_of(self, v) -> int:
        try:
            return self.value_to_rank[as_value(v)]
        except KeyError:
            raise ValueError(f"value outside order support: {as_value(v)}") from None

    def compare(self, x, y) -> int:
        rx, ry = self.rank_of(x), self.rank_of(y)
        return LESS if rx < ry else GREATER if rx > ry else EQUAL

    def sup(self, values) -> VectorValue:
        return order_extrema(values, self, "sup")

    def inf(self, values) -> VectorValue:
        return order_extrema(values, self, "inf")

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, RankOrder) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self) -> str:
        return f"RankOrder({len(self.values)} values, dim={self.dim})"
