"""Static 3-D figures of color-value paths inside the RGB unit cube.

Input documents are JSON files with fields {order_name, metric, points,
path_length, tour_cost}: the distinct values of an image listed in rank
order. The figure scatters each value at its own RGB coordinate, colored by
itself, and threads a polyline through them in rank order.
"""

from __future__ import annotations

import json
import os

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

__version__ = "0.1.0"
__all__ = ["DocumentError", "load_document", "render", "describe"]

_REQUIRED_FIELDS = ("order_name", "metric", "points", "path_length", "tour_cost")


class DocumentError(ValueError):
    """The path-export document is malformed or unsupported."""


def load_document(path: str | os.PathLike) -> dict:
    """Read and validate a path-export JSON document."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError(f"expected a JSON object in {path}")
    missing = [k for k in _REQUIRED_FIELDS if k not in doc]
    if missing:
        raise DocumentError(f"missing fields {missing} in {path}")
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise DocumentError("points must be a non-empty list")
    for p in points:
        if not isinstance(p, list) or len(p) != 3:
            raise DocumentError(
                f"3-channel points required for cube rendering, got {p!r}"
            )
        for c in p:
            if not isinstance(c, (int, float)) or not np.isfinite(c) or not 0 <= c <= 1:
                raise DocumentError(f"point components must lie in [0, 1], got {p!r}")
    for key in ("path_length", "tour_cost"):
        v = doc[key]
        if not isinstance(v, (int, float)) or not np.isfinite(v) or v < 0:
            raise DocumentError(f"{key} must be a non-negative number, got {v!r}")
    if not isinstance(doc["order_name"], str) or not isinstance(doc["metric"], str):
        raise DocumentError("order_name and metric must be strings")
    return doc


def describe(doc: dict) -> str:
    """One-line summary embedded in the output file's metadata."""
    return (
        f"order={doc['order_name']} points={len(doc['points'])} "
        f"path_length={doc['path_length']:.10g} metric={doc['metric']}"
    )


def render(
    doc: dict,
    out_path: str | os.PathLike,
    elev: float = 28.0,
    azim: float = -60.0,
    point_size: float = 36.0,
):
    """Draw the document's value path inside the unit cube and save it.

    The output format follows the file extension (.png or .svg). The figure
    title carries the order name and path length; the file metadata carries
    a machine-readable summary including the point count.
    """
    ext = os.path.splitext(os.fspath(out_path))[1].lower()
    if ext not in (".png", ".svg"):
        raise DocumentError(f"output must be a .png or .svg file, got {ext!r}")

    pts = np.asarray(doc["points"], dtype=float)
    fig = plt.figure(figsize=(6.0, 6.0), dpi=100)
    try:
        ax = fig.add_subplot(projection="3d")
        if len(pts) > 1:
            ax.plot(
                pts[:, 0], pts[:, 1], pts[:, 2],
                color="0.35", linewidth=1.3, zorder=1,
            )
        ax.scatter(
            pts[:, 0], pts[:, 1], pts[:, 2],
            c=pts, s=point_size, edgecolors="0.2", linewidths=0.4,
            depthshade=False, zorder=2,
        )
        ax.set_xlim(0.0, 1.0)
        ax.set_ylim(0.0, 1.0)
        ax.set_zlim(0.0, 1.0)
        ax.set_xlabel("R")
        ax.set_ylabel("G")
        ax.set_zlabel("B")
        ax.view_init(elev=elev, azim=azim)
        ax.set_title(f"{doc['order_name']} path, length {doc['path_length']:.4g}")
        # Date: None and a fixed hashsalt keep SVG output free of timestamps
        # and per-session ids, so identical inputs produce identical files
        with matplotlib.rc_context({"svg.hashsalt": "plotviz"}):
            fig.savefig(
                out_path,
                metadata={"Description": describe(doc), "Date": None},
            )
    finally:
        plt.close(fig)
