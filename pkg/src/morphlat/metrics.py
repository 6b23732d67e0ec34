"""Distance functions on the value space.

All distances operate on m-dimensional value vectors (tuples or arrays of
floats). Three classical metrics are supported; euclidean is the default
everywhere in the library.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

_CDIST_NAME = {
    "euclidean": "euclidean",
    "manhattan": "cityblock",
    "chebyshev": "chebyshev",
}

METRIC_KINDS = tuple(_CDIST_NAME)


@dataclass(frozen=True)
class Metric:
    """A metric d(x, y) >= 0 on value vectors, identified by its kind."""

    kind: str = "euclidean"

    def __post_init__(self):
        if self.kind not in _CDIST_NAME:
            raise ValueError(
                f"unknown metric kind {self.kind!r}; expected one of {METRIC_KINDS}"
            )

    def dist(self, x, y) -> float:
        """Distance between two single values."""
        a = np.asarray(x, dtype=float)
        b = np.asarray(y, dtype=float)
        if a.shape != b.shape:
            raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
        return float(self._rowwise(a.reshape(1, -1), b.reshape(1, -1))[0])

    def rowwise(self, a, b) -> np.ndarray:
        """Distances between corresponding rows of two (n, m) arrays."""
        a = np.atleast_2d(np.asarray(a, dtype=float))
        b = np.atleast_2d(np.asarray(b, dtype=float))
        if a.shape != b.shape:
            raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
        return self._rowwise(a, b)

    def pairwise(self, a, b=None) -> np.ndarray:
        """Full distance matrix between rows of a and rows of b (or a)."""
        a = np.atleast_2d(np.asarray(a, dtype=float))
        b = a if b is None else np.atleast_2d(np.asarray(b, dtype=float))
        if a.shape[1] != b.shape[1]:
            raise ValueError(f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}")
        return cdist(a, b, metric=_CDIST_NAME[self.kind])

    def _rowwise(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        diff = a - b
        if self.kind == "euclidean":
            return np.sqrt(np.einsum("ij,ij->i", diff, diff))
        if self.kind == "manhattan":
            return np.abs(diff).sum(axis=1)
        return np.abs(diff).max(axis=1)


def metric(kind: str = "euclidean") -> Metric:
    """Build a Metric from its kind name."""
    return Metric(kind)
