"""Core raster types: vector-valued images and structuring elements."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .orders import VectorValue, as_value


@dataclass(frozen=True)
class VectorImage:
    """A rectangular grid of m-dimensional real-valued pixels.

    The backing array has shape (height, width, channels), dtype float64,
    and is frozen after construction so images can be shared freely.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=float)
        if arr.ndim == 2:
            arr = arr[:, :, np.newaxis]
        if arr.ndim != 3:
            raise ValueError(f"image data must be (H, W, m), got shape {arr.shape}")
        h, w, m = arr.shape
        if h < 1 or w < 1 or m < 1:
            raise ValueError(f"image dimensions must be positive, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("image values must be finite")
        # private snapshot: callers keep ownership of what they passed in
        arr = np.ascontiguousarray(arr).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    @property
    def pixel_count(self) -> int:
        return self.height * self.width

    def pixel(self, y: int, x: int) -> VectorValue:
        return as_value(self.data[y, x])

    def values_flat(self) -> np.ndarray:
        """Pixels as an (n, m) array in row-major order."""
        return self.data.reshape(-1, self.channels)

    def equals(self, other: "VectorImage") -> bool:
        """Exact pixel-for-pixel equality."""
        return self.data.shape == other.data.shape and np.array_equal(
            self.data, other.data
        )

    def __repr__(self) -> str:
        return f"VectorImage({self.width}x{self.height}, m={self.channels})"


@dataclass(frozen=True)
class StructuringElement:
    """A finite set of integer (dy, dx) pixel offsets."""

    offsets: tuple[tuple[int, int], ...]

    def __post_init__(self):
        offs = tuple((int(dy), int(dx)) for dy, dx in self.offsets)
        if not offs:
            raise ValueError("structuring element must be non-empty")
        if len(set(offs)) != len(offs):
            raise ValueError("structuring element offsets must be distinct")
        object.__setattr__(self, "offsets", offs)

    @property
    def contains_origin(self) -> bool:
        return (0, 0) in self.offsets

    def __len__(self) -> int:
        return len(self.offsets)


def square_se(size: int) -> StructuringElement:
    """Square structuring element of odd side length, centered at the origin."""
    r = _radius(size)
    return StructuringElement(
        tuple((dy, dx) for dy in range(-r, r + 1) for dx in range(-r, r + 1))
    )


def cross_se(size: int) -> StructuringElement:
    """Plus-shaped structuring element of odd side length, centered at the origin."""
    r = _radius(size)
    offs = [(0, 0)]
    for d in range(1, r + 1):
        offs += [(-d, 0), (d, 0), (0, -d), (0, d)]
    return StructuringElement(tuple(offs))


def _radius(size: int) -> int:
    if size < 1 or size % 2 == 0:
        raise ValueError(f"structuring element size must be odd and positive, got {size}")
    return size // 2
