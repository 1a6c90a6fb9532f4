import pytest

from iaselect.query import parse
from iaselect.query.ast import (
    Comparison,
    EdgePattern,
    Literal,
    NodePattern,
    PathPattern,
    PatternQuery,
    PropertyRef,
)
from iaselect.query.errors import ParseError, UndeclaredVariable

SHOWCASE_QUERY = (
    'MATCH(h:Hybrid)-[w:WEIGHT]->(d:Domain)\n'
    'WHERE w.value > 2\n'
    'AND d.name = "Factory Automation"\n'
    'RETURN *'
)


def test_showcase_query_ast():
    assert parse(SHOWCASE_QUERY) == PatternQuery(
        paths=(
            PathPattern(
                (NodePattern("h", "Hybrid"), NodePattern("d", "Domain")),
                (EdgePattern("w", "WEIGHT"),),
            ),
        ),
        filters=(
            Comparison(PropertyRef("w", "value"), ">", Literal(2.0)),
            Comparison(PropertyRef("d", "name"), "=", Literal("Factory Automation")),
        ),
        returns=None,
    )


def test_minimal_query():
    query = parse("MATCH (n) RETURN n")
    assert query == PatternQuery(
        paths=(PathPattern((NodePattern("n", None),)),),
        filters=(),
        returns=("n",),
    )


def test_anonymous_patterns():
    query = parse("MATCH ()-[]->(b) RETURN b")
    path = query.paths[0]
    assert path.nodes[0] == NodePattern(None, None)
    assert path.edges[0] == EdgePattern(None, None)


def test_label_only_patterns():
    query = parse("MATCH (:Practice)-[:WEIGHT]->(x) RETURN x")
    path = query.paths[0]
    assert path.nodes[0] == NodePattern(None, "Practice")
    assert path.edges[0] == EdgePattern(None, "WEIGHT")


def test_multiple_paths():
    query = parse("MATCH (a)-[r]->(b), (a)-[s]->(c) RETURN a, b, c")
    assert len(query.paths) == 2
    assert query.returns == ("a", "b", "c")


def test_undeclared_return_variable():
    with pytest.raises(UndeclaredVariable) as info:
        parse("MATCH (a)-[r:WEIGHT]->(b) RETURN x")
    assert info.value.name == "x"


def test_undeclared_filter_variable():
    with pytest.raises(UndeclaredVariable) as info:
        parse("MATCH (a) WHERE q.value > 1 RETURN a")
    assert info.value.name == "q"


def test_conflicting_variable_kind_rejected():
    with pytest.raises(ParseError):
        parse("MATCH (a)-[a]->(b) RETURN b")


def test_variable_reuse_same_kind_allowed():
    query = parse("MATCH (a)-[r]->(a) RETURN a")
    assert query.variables() == {"a": "node", "r": "edge"}


def test_literal_only_comparison_rejected():
    with pytest.raises(ParseError):
        parse("MATCH (a) WHERE 1 < 2 RETURN a")


def test_duplicate_return_rejected():
    with pytest.raises(ParseError):
        parse("MATCH (a)-[r]->(b) RETURN a, a")


def test_incomplete_node_position():
    with pytest.raises(ParseError) as info:
        parse("MATCH (")
    assert (info.value.line, info.value.column) == (1, 8)
    assert "identifier" in info.value.expected


def test_missing_arrow():
    with pytest.raises(ParseError) as info:
        parse("MATCH (a)-[r](b) RETURN a")
    assert "']->'" in str(info.value)


def test_missing_return():
    with pytest.raises(ParseError) as info:
        parse("MATCH (a)")
    assert "RETURN" in info.value.expected


def test_trailing_garbage():
    with pytest.raises(ParseError) as info:
        parse("MATCH (a) RETURN a extra")
    assert info.value.expected == "end of input"


def test_comparison_operand_forms():
    query = parse('MATCH (a)-[r]->(b) WHERE a.x <> b.x AND 3 <= r.value AND r.ok = true RETURN a')
    ops = [(type(c.lhs).__name__, c.op, type(c.rhs).__name__) for c in query.filters]
    assert ops == [
        ("PropertyRef", "<>", "PropertyRef"),
        ("Literal", "<=", "PropertyRef"),
        ("PropertyRef", "=", "Literal"),
    ]
    assert query.filters[2].rhs == Literal(True)


def test_keywords_any_case():
    query = parse("match (n) where n.x = 1 return n")
    assert query.returns == ("n",)


def test_parse_empty_input():
    with pytest.raises(ParseError) as info:
        parse("")
    assert info.value.expected == "MATCH"


def test_declaration_order():
    query = parse("MATCH (b)-[z]->(a), (q) RETURN *")
    assert list(query.variables()) == ["b", "z", "a", "q"]
