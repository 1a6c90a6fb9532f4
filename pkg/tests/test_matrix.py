import csv
import io

import pytest

from iaselect.matrix import (
    MalformedTable,
    UnknownCharacteristicLabel,
    WeightOutOfRange,
    export_matrix,
    import_matrix,
)
from iaselect.schema import default_schema, validate
from iaselect import sampledata


def _practices(rows: str) -> bytes:
    return ("name,location,coupling,apiClient,channel\n" + rows).encode()


MINI_PRACTICES = _practices("P:1,Hybrid,loose,Client,Chan\nP:2,OnDevice,tight,Client,Chan\n")


def test_fixture_import_counts():
    graph = import_matrix(sampledata.practices_csv(), sampledata.weights_csv())
    assert len(graph.nodes_with_label("Practice")) == 6
    characteristic = sum(
        len(graph.nodes_with_label(lab))
        for lab in ("Domain", "Function", "Maintenance", "PerformanceEfficiency")
    )
    assert characteristic == 9
    assert graph.edge_count() == 54
    assert validate(graph, default_schema()) == []


def test_location_becomes_label():
    graph = import_matrix(MINI_PRACTICES, b"name\n")
    by_name = {n.attrs["name"]: n for n in graph.nodes()}
    assert by_name["P:1"].labels == frozenset({"Practice", "Hybrid"})
    assert by_name["P:2"].labels == frozenset({"Practice", "OnDevice"})


def test_empty_matrix_header_only():
    matrix = b"name,Domain:Factory Automation,Function:Control\n"
    graph = import_matrix(MINI_PRACTICES, matrix)
    assert graph.node_count() == 4
    assert graph.edge_count() == 0


def test_empty_cells_mean_no_edge():
    matrix = b"name,Domain:Factory Automation,Function:Control\nP:1,3.5,\n"
    graph = import_matrix(MINI_PRACTICES, matrix)
    assert graph.edge_count() == 1
    edge = next(graph.edges())
    assert edge.attrs == {"value": 3.5}


def test_out_of_range_cell_rejected_in_strict_mode():
    matrix = b"name,Domain:Factory Automation\nP:1,6.0\n"
    with pytest.raises(WeightOutOfRange):
        import_matrix(MINI_PRACTICES, matrix)


def test_out_of_range_cell_kept_when_not_strict():
    matrix = b"name,Domain:Factory Automation\nP:1,6.0\n"
    graph = import_matrix(MINI_PRACTICES, matrix, strict=False)
    assert next(graph.edges()).attrs["value"] == 6.0
    assert len(validate(graph, default_schema())) == 1


def test_unknown_characteristic_label():
    matrix = b"name,Sorcery:Dark Arts\nP:1,1.0\n"
    with pytest.raises(UnknownCharacteristicLabel):
        import_matrix(MINI_PRACTICES, matrix)


@pytest.mark.parametrize(
    "matrix, fragment",
    [
        (b"practice,Domain:Energy\n", "must start with 'name'"),
        (b"name,Domain\nP:1,1\n", "'<Label>:<Name>'"),
        (b"name,Domain:Energy\nP:9,1.0\n", "unknown practice"),
        (b"name,Domain:Energy\nP:1,1.0\nP:1,2.0\n", "duplicate row"),
        (b"name,Domain:Energy\nP:1,soup\n", "not a number"),
        (b"name,Domain:Energy\nP:1\n", "expected 2 fields"),
        (b"name,Domain:Energy,Domain:Energy\nP:1,1,1\n", "duplicate matrix column"),
        (b"name,Domain:Energy\nP:1,nan\n", "finite"),
    ],
)
def test_malformed_matrix(matrix, fragment):
    with pytest.raises(MalformedTable) as info:
        import_matrix(MINI_PRACTICES, matrix)
    assert fragment in str(info.value)


@pytest.mark.parametrize(
    "practices, fragment",
    [
        (b"nombre,location,coupling,apiClient,channel\n", "header"),
        (_practices("P:1,Underwater,loose,C,C\n"), "location"),
        (_practices("P:1,Hybrid,medium,C,C\n"), "coupling"),
        (_practices("P:1,Hybrid,loose,C,C\nP:1,Hybrid,loose,C,C\n"), "duplicate practice"),
        (_practices(",Hybrid,loose,C,C\n"), "empty practice name"),
        (b"", "empty"),
    ],
)
def test_malformed_practices(practices, fragment):
    with pytest.raises(MalformedTable) as info:
        import_matrix(practices, b"name\n")
    assert fragment in str(info.value)


def test_row_keys_may_be_a_subset():
    matrix = b"name,Domain:Energy\nP:2,2.0\n"
    graph = import_matrix(MINI_PRACTICES, matrix)
    assert graph.edge_count() == 1


def test_export_reproduces_import():
    practices_out, weights_out = export_matrix(
        import_matrix(sampledata.practices_csv(), sampledata.weights_csv())
    )
    assert practices_out == sampledata.practices_csv()

    def parse(data: bytes):
        rows = list(csv.reader(io.StringIO(data.decode())))
        header, body = rows[0], rows[1:]
        return header, {
            row[0]: [float(c) if c else None for c in row[1:]] for row in body
        }

    assert parse(weights_out) == parse(sampledata.weights_csv())
