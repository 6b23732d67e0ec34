"""Shared generators and brute-force oracles used across the test suite.

Everything here is deliberately naive: per-pixel loops, exhaustive
enumeration, handcrafted byte buffers.  The oracles must not share code
paths with the library internals they check.
"""

import itertools

import numpy as np

from morphlat.image import VectorImage
from morphlat.tsp_order import total_variation


def random_quantized(rng, height, width, channels=3, palette=None):
    """Random image on the 8-bit grid, optionally drawn from a small palette
    so that value collisions occur."""
    if palette is None:
        bytes_ = rng.integers(0, 256, size=(height, width, channels))
    else:
        choices = rng.integers(0, 256, size=(palette, channels))
        idx = rng.integers(0, palette, size=(height, width))
        bytes_ = choices[idx]
    return VectorImage(bytes_ / 255.0)


def random_values(rng, count, channels=3):
    """`count` distinct quantized vector values, lexicographically sorted."""
    seen = set()
    while len(seen) < count:
        seen.add(tuple(rng.integers(0, 256, channels) / 255.0))
    return sorted(seen)


def oracle_morph(image, se, order, op):
    """Per-pixel window scan; windows truncate at the border.

    `order` may be an object with sup/inf, the string "lex" (native tuple
    comparison), or a rank mapping exercised through `rank_of`.
    """
    h, w = image.height, image.width
    out = np.empty_like(np.asarray(image.data))
    for y in range(h):
        for x in range(w):
            window = []
            for dy, dx in se.offsets:
                if op == "dilate":
                    yy, xx = y - dy, x - dx
                else:
                    yy, xx = y + dy, x + dx
                if 0 <= yy < h and 0 <= xx < w:
                    window.append(image.pixel(yy, xx))
            if not window:
                raise AssertionError("oracle hit an empty window")
            if order == "lex":
                pick = max(window) if op == "dilate" else min(window)
            else:
                key = order.rank_of
                pick = (max if op == "dilate" else min)(window, key=key)
            out[y, x] = pick
    return VectorImage(out)


def oracle_scalar_morph(image, se, op):
    """Grayscale flat morphology by plain float extrema."""
    h, w = image.height, image.width
    out = np.empty((h, w), dtype=float)
    plane = np.asarray(image.data)[:, :, 0]
    for y in range(h):
        for x in range(w):
            vals = []
            for dy, dx in se.offsets:
                if op == "dilate":
                    yy, xx = y - dy, x - dx
                else:
                    yy, xx = y + dy, x + dx
                if 0 <= yy < h and 0 <= xx < w:
                    vals.append(plane[yy, xx])
            out[y, x] = max(vals) if op == "dilate" else min(vals)
    return VectorImage(out)


_PERM_CACHE = {}


def _perm_table(k):
    if k not in _PERM_CACHE:
        _PERM_CACHE[k] = np.array(list(itertools.permutations(range(1, k))), dtype=np.intp)
    return _PERM_CACHE[k]


def brute_force_tour_cost(values, met):
    """Exhaustive optimal cyclic tour cost, first value pinned (k <= 9)."""
    k = len(values)
    if k <= 2:
        return total_variation(list(values), met)
    arr = np.asarray(values, dtype=float)
    dist = met.pairwise(arr, arr)
    perms = _perm_table(k)
    seq = np.hstack([np.zeros((len(perms), 1), dtype=np.intp), perms])
    cost = dist[seq[:, :-1], seq[:, 1:]].sum(axis=1) + dist[seq[:, -1], seq[:, 0]]
    return float(cost.min())


_BIJECTION_CACHE = {}


def _bijections(n):
    if n not in _BIJECTION_CACHE:
        _BIJECTION_CACHE[n] = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    return _BIJECTION_CACHE[n]


def brute_force_w1(a, b, met):
    """Exact 1-Wasserstein between two tiny images by trying every pixel
    bijection (n <= 8)."""
    pa = a.values_flat()
    pb = b.values_flat()
    n = len(pa)
    dist = met.pairwise(pa, pb)
    perms = _bijections(n)
    costs = dist[np.arange(n)[np.newaxis, :], perms].sum(axis=1)
    return float(costs.min())


def compare_pixelwise(a, b, compare):
    """Return the set of comparison outcomes {-1, 0, 1} over all pixels."""
    seen = set()
    for y in range(a.height):
        for x in range(a.width):
            seen.add(compare(a.pixel(y, x), b.pixel(y, x)))
    return seen
