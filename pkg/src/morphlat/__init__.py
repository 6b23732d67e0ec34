"""Vector-valued mathematical morphology under pluggable total orders,
with an exact transport-based irregularity index for operator outputs."""

from .image import StructuringElement, VectorImage, cross_se, square_se
from .image_io import distinct_values, load_image, save_image
from .irregularity import (
    IrregularityReport,
    irregularity_index,
    pixelwise_distance,
    wasserstein1,
)
from .metrics import Metric, metric
from .morphology import close_, dilate, erode, open_
from .orders import (
    EQUAL,
    GREATER,
    LESS,
    LexOrder,
    MarginalOrder,
    RankOrder,
    lex_compare,
    marginal_extrema,
    order_extrema,
)
from .tsp_order import (
    Tour,
    TspOrder,
    build_tsp_order,
    cut_tour,
    farthest_insertion_tour,
    nearest_neighbor_tour,
    path_length,
    total_variation,
)

__version__ = "0.1.0"

__all__ = [
    "EQUAL",
    "GREATER",
    "IrregularityReport",
    "LESS",
    "LexOrder",
    "MarginalOrder",
    "Metric",
    "RankOrder",
    "StructuringElement",
    "Tour",
    "TspOrder",
    "VectorImage",
    "build_tsp_order",
    "close_",
    "cross_se",
    "cut_tour",
    "dilate",
    "distinct_values",
    "erode",
    "farthest_insertion_tour",
    "irregularity_index",
    "lex_compare",
    "load_image",
    "marginal_extrema",
    "metric",
    "nearest_neighbor_tour",
    "open_",
    "order_extrema",
    "path_length",
    "pixelwise_distance",
    "save_image",
    "square_se",
    "total_variation",
    "wasserstein1",
]
