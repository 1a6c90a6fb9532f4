from __future__ import annotations

import pytest

from iaselect import default_schema, document
from iaselect.sampledata import build_graph


@pytest.fixture
def sample_graph():
    """The bundled 6-practice dataset, host-capacity edges included."""
    return build_graph()


@pytest.fixture
def sample_db(tmp_path):
    """The sample dataset saved as a document; returns its path."""
    path = tmp_path / "graph.json"
    path.write_bytes(document.save(build_graph(), default_schema()))
    return path
