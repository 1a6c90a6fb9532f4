"""iaselect: rank industrial-agent interface practices from a property graph.

The package bundles an embedded property-graph store with schema validation
and CSV ingestion, a small declarative pattern-query language, a weighted
scoring engine that turns context + criteria into ranked practice reports,
and CLI / HTTP surfaces over all of it.
"""

from .document import MalformedDocument, load, save
from .graph import (
    Edge,
    EmptyLabels,
    GraphError,
    Node,
    PropertyGraph,
    UnknownElement,
    UnknownEndpoint,
)
from .matrix import (
    MalformedTable,
    UnknownCharacteristicLabel,
    WeightOutOfRange,
    export_matrix,
    import_matrix,
)
from .recommend import (
    ContextSelection,
    CriteriaError,
    InvalidCriteria,
    PracticeReport,
    PracticeScore,
    UnknownContext,
    context_average,
    cumulative_weight,
    generate_report,
    recommend,
    validate_criteria,
)
from .schema import AttrRule, EdgeTypeRule, GraphSchema, Violation, default_schema, validate
from .values import AttrValue, InvalidAttrKey, InvalidAttrValue

__version__ = "0.1.0"

__all__ = [
    "AttrRule",
    "AttrValue",
    "ContextSelection",
    "CriteriaError",
    "Edge",
    "EdgeTypeRule",
    "EmptyLabels",
    "GraphError",
    "GraphSchema",
    "InvalidAttrKey",
    "InvalidAttrValue",
    "InvalidCriteria",
    "MalformedDocument",
    "MalformedTable",
    "Node",
    "PracticeReport",
    "PracticeScore",
    "PropertyGraph",
    "UnknownCharacteristicLabel",
    "UnknownContext",
    "UnknownElement",
    "UnknownEndpoint",
    "Violation",
    "WeightOutOfRange",
    "context_average",
    "cumulative_weight",
    "default_schema",
    "export_matrix",
    "generate_report",
    "import_matrix",
    "load",
    "recommend",
    "save",
    "validate",
    "validate_criteria",
    "__version__",
]
