"""Best-fit practice scoring and report generation.

The user supplies an application context (a domain, a function, and whether
the practice must be able to host agents) plus percentage-weighted criteria
over the maintenance / performance-efficiency characteristics. Each
practice's score is

    final = [sum over criteria c of (pct_c / 100) * w(p, c)]
            * mean(w(p, domain), w(p, function))

where w(p, c) is the value of the WEIGHT edge from practice to
characteristic (0 when absent, the arithmetic mean when parallel edges
exist). Rows are ranked by descending score with ties broken by ascending
name, and the top row is the recommendation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from .graph import Node, PropertyGraph
from .schema import (
    DOMAIN,
    FUNCTION,
    HOST_AGENTS,
    MAINTENANCE,
    PERFORMANCE_EFFICIENCY,
    PRACTICE,
    WEIGHT,
)

CRITERIA_LABELS = (MAINTENANCE, PERFORMANCE_EFFICIENCY)


@dataclass(frozen=True)
class ContextSelection:
    domain: str
    function: str
    require_host_agents: bool = False


@dataclass(frozen=True)
class CriteriaError:
    code: str  # SumNot100 | UnknownCharacteristic | OutOfRange
    message: str
    name: str | None = None
    actual: int | None = None


class InvalidCriteria(ValueError):
    def __init__(self, errors: list[CriteriaError]):
        self.errors = errors
        super().__init__("; ".join(e.message for e in errors))


class UnknownContext(ValueError):
    def __init__(self, kind: str, name: str):
        self.kind = kind
        self.name = name
        super().__init__(f"no {kind} characteristic named {name!r}")


@dataclass(frozen=True)
class PracticeScore:
    name: str
    api_client: str
    channel: str
    cumulative: float
    context_avg: float
    final_score: float


@dataclass
class PracticeReport:
    rows: list[PracticeScore] = field(default_factory=list)
    recommended: str | None = None
    excluded: list[str] = field(default_factory=list)

    def to_obj(self) -> dict:
        obj: dict = {
            "rows": [
                {
                    "name": row.name,
                    "apiClient": row.api_client,
                    "channel": row.channel,
                    "finalScore": display_score(row.final_score),
                }
                for row in self.rows
            ],
        }
        if self.recommended is not None:
            obj["recommended"] = self.recommended
        obj["excluded"] = list(self.excluded)
        return obj


def display_score(score: float) -> float:
    """Round to two decimals, halves away from zero (display convention)."""
    return float(Decimal(score).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _characteristic_nodes(graph: PropertyGraph, labels: tuple[str, ...]) -> dict[str, list[int]]:
    """Name -> node ids over the given characteristic labels."""
    by_name: dict[str, list[int]] = {}
    for label in labels:
        for node_id in graph.nodes_with_label(label):
            name = graph.node(node_id).attrs.get("name")
            if isinstance(name, str):
                by_name.setdefault(name, []).append(node_id)
    return by_name


def _weight_to(graph: PropertyGraph, practice_id: int, target_ids: list[int]) -> float:
    """Mean WEIGHT edge value from the practice into the target nodes; 0 if none."""
    values = []
    for edge in graph.out_edges(practice_id):
        if edge.label != WEIGHT or edge.dst not in target_ids:
            continue
        value = edge.attrs.get("value")
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            values.append(float(value))
    return sum(values) / len(values) if values else 0.0


def validate_criteria(criteria: dict, graph: PropertyGraph) -> list[CriteriaError]:
    """Check a criteria map; an empty result means it is usable.

    Percentage shape problems (non-integers, values outside [0, 100], a sum
    other than 100) are reported without touching the graph; name resolution
    runs only on shapely criteria.
    """
    errors: list[CriteriaError] = []
    total = 0
    for name in sorted(criteria):
        pct = criteria[name]
        if isinstance(pct, bool) or not isinstance(pct, int):
            errors.append(CriteriaError(
                "OutOfRange", f"percentage for {name!r} must be an integer in [0, 100]", name=name))
            continue
        if not 0 <= pct <= 100:
            errors.append(CriteriaError(
                "OutOfRange", f"percentage for {name!r} must be in [0, 100], got {pct}", name=name))
            continue
        total += pct
    if not errors and total != 100:
        errors.append(CriteriaError(
            "SumNot100", f"criteria percentages must total 100, got {total}", actual=total))
    if errors:
        return errors
    eligible = _characteristic_nodes(graph, CRITERIA_LABELS)
    eligible.pop(HOST_AGENTS, None)
    for name in sorted(criteria):
        if name not in eligible:
            errors.append(CriteriaError(
                "UnknownCharacteristic", f"unknown criteria characteristic {name!r}", name=name))
    return errors


def cumulative_weight(practice: Node, criteria: dict, graph: PropertyGraph) -> float:
    """Percentage-weighted sum of the practice's criteria edge weights."""
    by_name = _characteristic_nodes(graph, CRITERIA_LABELS)
    total = 0.0
    for name, pct in criteria.items():
        total += (pct / 100) * _weight_to(graph, practice.id, by_name.get(name, []))
    return total


def context_average(practice: Node, context: ContextSelection, graph: PropertyGraph) -> float:
    """Mean of the practice's weights into the selected domain and function."""
    domains = _characteristic_nodes(graph, (DOMAIN,))
    functions = _characteristic_nodes(graph, (FUNCTION,))
    return (
        _weight_to(graph, practice.id, domains.get(context.domain, []))
        + _weight_to(graph, practice.id, functions.get(context.function, []))
    ) / 2


def generate_report(context: ContextSelection, criteria: dict, graph: PropertyGraph) -> PracticeReport:
    """Score every practice under the context and criteria.

    Practices failing the host-agents requirement (no positive weight on the
    "Capacity To Host agents" edge) are excluded rather than scored; all
    others are listed even with a zero score.
    """
    errors = validate_criteria(criteria, graph)
    if errors:
        raise InvalidCriteria(errors)
    if context.domain not in _characteristic_nodes(graph, (DOMAIN,)):
        raise UnknownContext("domain", context.domain)
    if context.function not in _characteristic_nodes(graph, (FUNCTION,)):
        raise UnknownContext("function", context.function)

    host_ids = _characteristic_nodes(graph, (MAINTENANCE,)).get(HOST_AGENTS, [])
    rows = []
    excluded = []
    for node_id in graph.nodes_with_label(PRACTICE):
        practice = graph.node(node_id)
        name = practice.attrs.get("name")
        name = name if isinstance(name, str) else str(practice.id)
        if context.require_host_agents and _weight_to(graph, node_id, host_ids) <= 0:
            excluded.append(name)
            continue
        cumulative = cumulative_weight(practice, criteria, graph)
        context_avg = context_average(practice, context, graph)
        api_client = practice.attrs.get("apiClient")
        channel = practice.attrs.get("channel")
        rows.append(
            PracticeScore(
                name=name,
                api_client=api_client if isinstance(api_client, str) else "",
                channel=channel if isinstance(channel, str) else "",
                cumulative=cumulative,
                context_avg=context_avg,
                final_score=cumulative * context_avg,
            )
        )
    rows.sort(key=lambda row: (-row.final_score, row.name))
    excluded.sort()
    return PracticeReport(
        rows=rows,
        recommended=rows[0].name if rows else None,
        excluded=excluded,
    )


def recommend(report: PracticeReport) -> str | None:
    """Name of the top-ranked practice, or None for an empty report."""
    return report.rows[0].name if report.rows else None
