"""Flat morphological operators on vector images under a pluggable order.

Dilation takes the supremum of I(p - s) over the structuring element, erosion
the infimum of I(p + s); opening and closing are their compositions with the
same structuring element. Windows are truncated at the domain boundary (no
padding values are invented), which keeps the dilation/erosion adjunction and
hence exact idempotence of opening and closing.

Total orders (lexicographic, rank) are evaluated by mapping pixels to integer
ranks over the image's value set and sliding integer extrema, so outputs are
always existing image values. The marginal order slides each channel
independently and may create false values.
"""

from __future__ import annotations

import numpy as np

from .image import StructuringElement, VectorImage
from .orders import MarginalOrder, RankOrder


def dilate(image: VectorImage, se: StructuringElement, order) -> VectorImage:
    """Per-pixel supremum of the window {I(p - s) : s in se} under the order."""
    return _apply(image, se.offsets, order, maximize=True)


def erode(image: VectorImage, se: StructuringElement, order) -> VectorImage:
    """Per-pixel infimum of the window {I(p + s) : s in se} under the order."""
    negated = tuple((-dy, -dx) for dy, dx in se.offsets)
    return _apply(image, negated, order, maximize=False)


def open_(image: VectorImage, se: StructuringElement, order) -> VectorImage:
    """Erosion followed by dilation with the same structuring element."""
    return dilate(erode(image, se, order), se, order)


def close_(image: VectorImage, se: StructuringElement, order) -> VectorImage:
    """Dilation followed by erosion with the same structuring element."""
    return erode(dilate(image, se, order), se, order)


def _apply(image, offsets, order, maximize):
    if isinstance(order, MarginalOrder):
        out = np.empty_like(image.data)
        for c in range(image.channels):
            out[:, :, c] = _slide_float(image.data[:, :, c], offsets, maximize)
        return VectorImage(out)
    if not getattr(order, "is_total", False):
        raise ValueError(f"order {getattr(order, 'kind', order)!r} unsupported")
    ranks, table = _rank_plane(image, order)
    out_ranks = _slide_ranks(ranks, offsets, maximize, n_ranks=len(table))
    return VectorImage(table[out_ranks])


def _rank_plane(image, order):
    """Map each pixel to its rank under the order; return ranks and the
    rank -> value lookup table."""
    flat = image.values_flat()
    uniq, inv = np.unique(flat, axis=0, return_inverse=True)
    inv = inv.reshape(image.height, image.width)
    if order.kind == "lexicographic":
        # np.unique sorts rows lexicographically, so inv is already the rank.
        return inv, uniq
    if isinstance(order, RankOrder):
        uniq_ranks = np.array([order.rank_of(tuple(row)) for row in uniq.tolist()])
        table = np.asarray(order.values, dtype=float)
        if table.ndim == 1:
            table = table[:, np.newaxis]
        return uniq_ranks[inv], table
    raise ValueError(f"order {getattr(order, 'kind', order)!r} unsupported")


def _slide_ranks(ranks, offsets, maximize, n_ranks):
    sentinel = -1 if maximize else n_ranks
    out = _slide(ranks, offsets, maximize, sentinel, dtype=np.int64)
    if maximize:
        empty = out == sentinel
    else:
        empty = out >= sentinel
    if empty.any():
        raise ValueError("empty structuring window")
    return out


def _slide_float(plane, offsets, maximize):
    sentinel = -np.inf if maximize else np.inf
    out = _slide(plane, offsets, maximize, sentinel, dtype=float)
    if not np.all(np.isfinite(out)):
        raise ValueError("empty structuring window")
    return out


def _slide(plane, offsets, maximize, sentinel, dtype):
    """out[y, x] = extremum of plane[y - dy, x - dx] over in-bounds offsets."""
    h, w = plane.shape
    out = np.full((h, w), sentinel, dtype=dtype)
    combine = np.maximum if maximize else np.minimum
    for dy, dx in offsets:
        y0, y1 = max(0, dy), min(h, h + dy)
        x0, x1 = max(0, dx), min(w, w + dx)
        if y0 >= y1 or x0 >= x1:
            continue
        src = plane[y0 - dy : y1 - dy, x0 - dx : x1 - dx]
        combine(out[y0:y1, x0:x1], src, out=out[y0:y1, x0:x1])
    return out
