"""Image file input/output and value-set extraction.

Supported formats: 8-bit PNG (grayscale or RGB, alpha rejected) and binary
PPM (P6) / PGM (P5) with maxval 255. Channels are mapped exactly between
{0..255} and the normalized grid {0, 1/255, ..., 1}, so loading is lossless
and value equality stays exact.
"""

from __future__ import annotations

import os

import numpy as np
from PIL import Image

from .image import VectorImage
from .orders import VectorValue

_ACCEPTED_MODES = {"L": 1, "RGB": 3}
_FORMAT_BY_EXT = {".png": "PNG", ".ppm": "PPM", ".pgm": "PGM"}


def load_image(path: str | os.PathLike) -> VectorImage:
    """Load an 8-bit PNG/PPM/PGM file as a normalized VectorImage."""
    try:
        with Image.open(path) as img:
            fmt = img.format
            if fmt not in ("PNG", "PPM"):
                raise ValueError(f"unsupported image format {fmt!r} in {path}")
            if img.mode not in _ACCEPTED_MODES:
                raise ValueError(
                    f"unsupported pixel mode {img.mode!r} in {path}; "
                    "only 8-bit grayscale (L) and RGB without alpha are accepted"
                )
            raw = np.asarray(img, dtype=np.uint8)
    except (OSError, SyntaxError) as exc:
        raise OSError(f"cannot read image {path}: {exc}") from exc
    if raw.ndim == 2:
        raw = raw[:, :, np.newaxis]
    return VectorImage(raw.astype(np.float64) / 255.0)


def save_image(image: VectorImage, path: str | os.PathLike, format: str | None = None):
    """Quantize to 8-bit (round(v*255)) and write a PNG/PPM/PGM file."""
    data = image.data
    if data.min() < 0.0 or data.max() > 1.0:
        raise ValueError("image values must lie in [0, 1] to be saved as 8-bit")
    if image.channels not in (1, 3):
        raise ValueError(f"cannot save {image.channels}-channel image; need 1 or 3")
    if format is None:
        ext = os.path.splitext(os.fspath(path))[1].lower()
        if ext not in _FORMAT_BY_EXT:
            raise ValueError(f"cannot infer format from extension {ext!r}")
        format = _FORMAT_BY_EXT[ext]
    format = format.upper()
    if format not in ("PNG", "PPM", "PGM"):
        raise ValueError(f"unsupported output format {format!r}")
    if format == "PGM" and image.channels != 1:
        raise ValueError("PGM output requires a single-channel image")

    quantized = np.rint(data * 255.0).astype(np.uint8)
    if image.channels == 1:
        pil = Image.fromarray(quantized[:, :, 0], mode="L")
    else:
        pil = Image.fromarray(quantized, mode="RGB")
    # Pillow picks P5/P6 from the mode under its unified "PPM" writer.
    pil.save(path, format="PPM" if format == "PGM" else format)


def distinct_values(image: VectorImage) -> list[VectorValue]:
    """The set of pixel values of an image, deduplicated and lex-sorted."""
    uniq = np.unique(image.values_flat(), axis=0)
    return [tuple(row) for row in uniq.tolist()]
