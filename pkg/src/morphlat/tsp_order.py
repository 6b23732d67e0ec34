"""Total orders built from short Hamiltonian tours over an image's values.

The pipeline: construct a cyclic tour over the distinct pixel values with two
classical heuristics (nearest neighbor and farthest insertion), keep the
cheaper tour, cut the cycle at its longest edge, orient the resulting open
path so the first endpoint has the smaller euclidean norm, and rank values by
their position along the path. Ranks then realize a total order usable by the
morphological operators.

Tie-breaking is positional: argmin/argmax take the first optimum, so feeding
values in lexicographic order (as build_tsp_order does) makes every tie
resolve lexicographically and the whole construction deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .image import VectorImage
from .image_io import distinct_values
from .metrics import Metric
from .orders import RankOrder, VectorValue, as_value


@dataclass(frozen=True)
class Tour:
    """A cyclic visiting order of distinct values and its total length."""

    sequence: tuple[VectorValue, ...]
    cost: float


class TspOrder(NamedTuple):
    order: RankOrder
    heuristic: str
    tour_cost: float
    path_length: float


def path_length(values: Sequence, metric: Metric) -> float:
    """Sum of consecutive distances along an open path (no closing edge)."""
    vals = _as_list(values)
    if len(vals) == 1:
        return 0.0
    arr = np.asarray(vals, dtype=float)
    return float(metric.rowwise(arr[:-1], arr[1:]).sum())


def total_variation(values: Sequence, metric: Metric) -> float:
    """Cyclic tour length: consecutive distances plus the closing edge."""
    vals = _as_list(values)
    if len(vals) == 1:
        return 0.0
    return path_length(vals, metric) + metric.dist(vals[-1], vals[0])


def nearest_neighbor_tour(values: Sequence, metric: Metric, start: int = 0) -> Tour:
    """Greedy tour: repeatedly visit the unvisited value closest to the
    current one. Ties take the earliest-listed candidate."""
    vals = _as_distinct_list(values)
    if not 0 <= start < len(vals):
        raise ValueError(f"start index {start} out of range for {len(vals)} values")
    dist = metric.pairwise(vals)
    seq = _nearest_neighbor(dist, start)
    ordered = [vals[i] for i in seq]
    return Tour(tuple(ordered), total_variation(ordered, metric))


def farthest_insertion_tour(values: Sequence, metric: Metric) -> Tour:
    """Farthest insertion: start from the two mutually farthest values, then
    repeatedly insert the value farthest from the partial tour at the spot
    with the smallest cost increase. Ties take the earliest candidate/slot."""
    vals = _as_distinct_list(values)
    dist = metric.pairwise(vals)
    seq = _farthest_insertion(dist)
    ordered = [vals[i] for i in seq]
    return Tour(tuple(ordered), total_variation(ordered, metric))


def cut_tour(tour: Tour, metric: Metric) -> list[VectorValue]:
    """Open the cycle at its longest edge and orient the path by endpoint norm.

    The returned list keeps all tour adjacencies except the removed edge, so
    the endpoint distance is at least every consecutive gap. The list is
    oriented so the first value's euclidean norm does not exceed the last's
    (kept as rotated on exact norm ties).
    """
    seq = list(tour.sequence)
    if len(seq) == 1:
        return seq
    arr = np.asarray(seq, dtype=float)
    edges = metric.rowwise(arr, np.roll(arr, -1, axis=0))
    cut = int(np.argmax(edges))
    opened = seq[cut + 1 :] + seq[: cut + 1]
    if np.linalg.norm(opened[0]) > np.linalg.norm(opened[-1]):
        opened.reverse()
    return opened


def build_tsp_order(image: VectorImage, metric: Metric) -> TspOrder:
    """Build the tour-derived rank order for an image's distinct values.

    Runs nearest neighbor (starting from the lexicographically smallest
    value) and farthest insertion, keeps the cheaper tour (nearest neighbor
    on exact ties), cuts and orients it, and assigns ranks by path position.
    """
    vals = distinct_values(image)
    dist = metric.pairwise(vals)
    candidates = [
        ("nearest_neighbor", _nearest_neighbor(dist, 0)),
        ("farthest_insertion", _farthest_insertion(dist)),
    ]
    best_name, best_ordered, best_cost = None, None, np.inf
    for name, seq in candidates:
        ordered = [vals[i] for i in seq]
        cost = total_variation(ordered, metric)
        if cost < best_cost:
            best_name, best_ordered, best_cost = name, ordered, cost
    path = cut_tour(Tour(tuple(best_ordered), best_cost), metric)
    return TspOrder(
        order=RankOrder(path),
        heuristic=best_name,
        tour_cost=best_cost,
        path_length=path_length(path, metric),
    )


def _nearest_neighbor(dist: np.ndarray, start: int) -> list[int]:
    k = dist.shape[0]
    visited = np.zeros(k, dtype=bool)
    seq = [start]
    visited[start] = True
    for _ in range(k - 1):
        row = np.where(visited, np.inf, dist[seq[-1]])
        nxt = int(np.argmin(row))
        seq.append(nxt)
        visited[nxt] = True
    return seq


def _farthest_insertion(dist: np.ndarray) -> list[int]:
    k = dist.shape[0]
    if k == 1:
        return [0]
    i, j = np.unravel_index(int(np.argmax(dist)), dist.shape)
    seq = [int(i), int(j)]
    in_tour = np.zeros(k, dtype=bool)
    in_tour[[i, j]] = True
    to_tour = np.minimum(dist[:, i], dist[:, j])
    for _ in range(k - 2):
        r = int(np.argmax(np.where(in_tour, -np.inf, to_tour)))
        arr = np.asarray(seq)
        succ = np.roll(arr, -1)
        increase = dist[arr, r] + dist[r, succ] - dist[arr, succ]
        slot = int(np.argmin(increase))
        seq.insert(slot + 1, r)
        in_tour[r] = True
        to_tour = np.minimum(to_tour, dist[:, r])
    return seq


def _as_list(values) -> list[VectorValue]:
    vals = [as_value(v) for v in values]
    if not vals:
        raise ValueError("value list must be non-empty")
    return vals


def _as_distinct_list(values) -> list[VectorValue]:
    vals = _as_list(values)
    if len(set(vals)) != len(vals):
        raise ValueError("tour values must be distinct")
    return vals
