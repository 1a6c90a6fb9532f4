import random

import pytest

from iaselect import document, save
from iaselect.graph import PropertyGraph
from iaselect.query import evaluate, parse
from iaselect.query.ast import PatternQuery
from iaselect.query import backend
from iaselect.query.plan import build_graph_index, compile_query
from iaselect.query import _pure
from iaselect.schema import GraphSchema

from generators import random_graph, random_query
from oracle import oracle_evaluate, result_id_rows

SHOWCASE_QUERY = (
    'MATCH(h:Hybrid)-[w:WEIGHT]->(d:Domain)\n'
    'WHERE w.value > 2\n'
    'AND d.name = "Factory Automation"\n'
    'RETURN *'
)


def _tiny_graph():
    g = PropertyGraph()
    a = g.add_node({"Alpha"}, {"value": 1.0, "name": "north"})
    b = g.add_node({"Beta"}, {"value": 2.0})
    c = g.add_node({"Alpha", "Beta"}, {"value": 3.0})
    g.add_edge(a, b, "LINK", {"value": 1.0})
    g.add_edge(a, b, "LINK", {"value": 4.0})
    g.add_edge(b, c, "FLOW", {"value": 2.0})
    g.add_edge(c, a, "LINK", {"value": 0.5})
    return g, a, b, c


def test_simple_label_match():
    g, a, _b, c = _tiny_graph()
    result = evaluate(parse("MATCH (n:Alpha) RETURN n"), g)
    assert result.columns == ["n"]
    assert result_id_rows(result) == [(a,), (c,)]


def test_edge_match_with_filter():
    g, a, b, _c = _tiny_graph()
    result = evaluate(parse("MATCH (x)-[e:LINK]->(y) WHERE e.value > 0.9 RETURN x, e, y"), g)
    ids = result_id_rows(result)
    assert all(row[0] == a and row[2] == b for row in ids)
    assert len(ids) == 2  # the two parallel LINK edges


def test_empty_graph_keeps_columns():
    result = evaluate(parse("MATCH (a)-[r]->(b) RETURN a, r, b"), PropertyGraph())
    assert result.columns == ["a", "r", "b"]
    assert result.rows == []


def test_missing_attribute_is_false():
    g, _a, _b, _c = _tiny_graph()
    result = evaluate(parse("MATCH (n) WHERE n.ghost = 1 RETURN n"), g)
    assert result.rows == []


def test_kind_mismatch_is_false():
    g, _a, _b, _c = _tiny_graph()
    result = evaluate(parse('MATCH (n) WHERE n.value = "1.0" RETURN n'), g)
    assert result.rows == []


def test_node_variables_may_coincide():
    g = PropertyGraph()
    a = g.add_node({"Alpha"})
    b = g.add_node({"Alpha"})
    g.add_edge(a, b, "LINK")
    g.add_edge(b, a, "LINK")
    # x and y are distinct variables but may map to overlapping nodes
    result = evaluate(parse("MATCH (x)-[e1]->(y)-[e2]->(x) RETURN x, y"), g)
    assert result_id_rows(result) == [(a, b), (b, a)]


def test_edge_variables_bind_distinct_edges():
    g = PropertyGraph()
    a = g.add_node({"Alpha"})
    b = g.add_node({"Alpha"})
    g.add_edge(a, b, "LINK")
    result = evaluate(parse("MATCH (x)-[e1]->(y), (z)-[e2]->(w) RETURN *"), g)
    assert result.rows == []  # only one edge exists, e1 and e2 must differ


def test_anonymous_edges_also_distinct():
    g = PropertyGraph()
    a = g.add_node({"Alpha"})
    b = g.add_node({"Alpha"})
    g.add_edge(a, b, "LINK")
    result = evaluate(parse("MATCH (x)-[]->(y), (z)-[]->(w) RETURN x"), g)
    assert result.rows == []


def test_shared_edge_variable_is_one_edge():
    g = PropertyGraph()
    a = g.add_node({"Alpha"})
    b = g.add_node({"Beta"})
    g.add_edge(a, b, "LINK")
    result = evaluate(parse("MATCH (x)-[e]->(y), (z)-[e]->(w) RETURN x, z"), g)
    assert result_id_rows(result) == [(a, a)]


def test_return_projection_deduplicates():
    g, a, b, _c = _tiny_graph()
    # two parallel edges produce two bindings that collapse after projection
    result = evaluate(parse("MATCH (x)-[e:LINK]->(y) RETURN x, y"), g)
    assert (a, b) in result_id_rows(result)
    assert len([r for r in result_id_rows(result) if r == (a, b)]) == 1


def test_row_order_ascending_by_ids():
    g, _a, _b, _c = _tiny_graph()
    result = evaluate(parse("MATCH (x)-[e]->(y) RETURN x, e, y"), g)
    ids = result_id_rows(result)
    assert ids == sorted(ids)


def test_label_missing_from_graph():
    g, _a, _b, _c = _tiny_graph()
    assert evaluate(parse("MATCH (n:Nothing) RETURN n"), g).rows == []
    assert evaluate(parse("MATCH (x)-[e:GHOST]->(y) RETURN x"), g).rows == []


def test_showcase_query_matches_oracle(sample_graph):
    result = evaluate(parse(SHOWCASE_QUERY), sample_graph)
    assert result.columns == ["h", "w", "d"]
    names = {row["h"].attrs["name"] for row in result.rows}
    assert names == {"HL:1", "HL:2"}
    assert all(row["w"].attrs["value"] > 2 for row in result.rows)
    assert all(row["d"].attrs["name"] == "Factory Automation" for row in result.rows)
    columns, expected = oracle_evaluate(parse(SHOWCASE_QUERY), sample_graph)
    assert columns == result.columns
    assert result_id_rows(result) == expected


def test_practice_count(sample_graph):
    assert len(evaluate(parse("MATCH (n:Practice) RETURN n"), sample_graph).rows) == 6


def test_evaluation_is_read_only(sample_graph):
    schema = GraphSchema(set(), [])
    before = save(sample_graph, schema)
    evaluate(parse(SHOWCASE_QUERY), sample_graph)
    evaluate(parse("MATCH (a)-[b]->(c)-[d]->(e) RETURN *"), sample_graph)
    assert save(sample_graph, schema) == before


def test_determinism(sample_graph):
    query = parse("MATCH (p:Practice)-[w:WEIGHT]->(c) WHERE w.value >= 2 RETURN p, c")
    first = evaluate(query, sample_graph)
    second = evaluate(query, sample_graph)
    assert result_id_rows(first) == result_id_rows(second)
    assert first.to_obj() == second.to_obj()


def test_oracle_equivalence_random():
    rng = random.Random(4242)
    for _ in range(120):
        graph = random_graph(rng)
        query = random_query(rng, max_paths=2, max_edges_per_path=2)
        result = evaluate(query, graph)
        columns, expected = oracle_evaluate(query, graph)
        assert result.columns == columns
        assert result_id_rows(result) == expected, (query, graph)


def test_filter_monotonicity():
    rng = random.Random(515)
    for _ in range(60):
        graph = random_graph(rng)
        query = random_query(rng, max_filters=3)
        if not query.filters:
            continue
        full = set(result_id_rows(evaluate(query, graph)))
        relaxed = PatternQuery(query.paths, query.filters[:-1], query.returns)
        assert full <= set(result_id_rows(evaluate(relaxed, graph)))


def test_backend_parity():
    if backend.BACKEND_NAME != "cython":
        pytest.skip("compiled kernel not built")
    rng = random.Random(808)
    for _ in range(120):
        graph = random_graph(rng)
        query = random_query(rng, max_paths=2, max_edges_per_path=3)
        index = build_graph_index(graph)
        plan = compile_query(query, index, graph)
        args = (
            len(index.node_ids), len(plan.node_var_names), len(plan.edge_var_names),
            plan.step_kind, plan.s_a, plan.s_b, plan.s_c, plan.s_d, plan.s_e,
            plan.cand_start, plan.cand_flat, plan.has_label,
            index.out_start, index.out_edges, index.esrc, index.edst, index.elab,
        )
        assert sorted(backend.enumerate_bindings(*args)) == sorted(_pure.enumerate_bindings(*args))
