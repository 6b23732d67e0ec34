import json

import pytest


@pytest.fixture
def make_document(tmp_path):
    """Write a path-export JSON file and return (path, document)."""

    def _make(points=None, **overrides):
        doc = {
            "order_name": "tsp",
            "metric": "euclidean",
            "points": points
            if points is not None
            else [[0.0, 0.0, 0.0], [0.8, 0.2, 0.1], [0.5, 0.9, 0.3]],
            "path_length": 1.5,
            "tour_cost": 2.2,
        }
        doc.update(overrides)
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(doc))
        return path, doc

    return _make
