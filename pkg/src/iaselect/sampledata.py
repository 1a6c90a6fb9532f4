"""The bundled demonstration dataset.

Six practices (two per coupling/location family in use) weighted against the
canonical characteristic vocabulary. The weights are stand-ins chosen so the
showcase report (domain "Factory Automation", function "Simulation", host
agents required, criteria Re-usability 80 / Scalability 10 / Time behaviour
10) ranks HL:1 first with the familiar spread of scores:

    HL:1 4.70, HL:2 4.60, OL:1 2.82, OL:2 2.82, HT:1 1.16, OT:1 0.46

The weights matrix CSV intentionally leaves out "Capacity To Host agents":
whether hosting capacity is a weighted characteristic at all is an open
modelling question, so it rides along as explicit extra edges instead of a
matrix column.
"""

from __future__ import annotations

import io
import sys
from pathlib import Path

from .graph import PropertyGraph
from .matrix import import_matrix
from .schema import HOST_AGENTS, MAINTENANCE, WEIGHT, default_schema

PRACTICES = [
    # name, location, coupling, apiClient, channel
    ("HL:1", "Hybrid", "loose", "Apache Milo", "OPC-UA"),
    ("HL:2", "Hybrid", "loose", "Apache Paho", "MQTT"),
    ("HT:1", "Hybrid", "tight", "Java", "Modbus"),
    ("OL:1", "OnDevice", "loose", "Apache Milo", "OPC-UA"),
    ("OL:2", "OnDevice", "loose", "Apache Paho", "MQTT"),
    ("OT:1", "OnDevice", "tight", "Java", "Modbus"),
]

MATRIX_COLUMNS = [
    "Domain:Factory Automation",
    "Domain:Building Automation",
    "Domain:Energy",
    "Function:Monitoring",
    "Function:Control",
    "Function:Simulation",
    "Maintenance:Re-usability",
    "PerformanceEfficiency:Time behaviour",
    "PerformanceEfficiency:Scalability",
]

WEIGHTS = {
    #        FA   BA   En   Mon  Ctl  Sim  Reu  TimeB Scal
    "HL:1": (4.0, 3.0, 2.0, 3.0, 2.0, 0.7, 2.0, 2.0, 2.0),
    "HL:2": (4.0, 2.5, 1.5, 2.5, 3.0, 0.6, 2.0, 2.0, 2.0),
    "HT:1": (0.5, 1.0, 1.0, 2.0, 4.0, 0.3, 3.0, 2.0, 3.0),
    "OL:1": (1.4, 2.0, 2.0, 1.0, 1.0, 1.0, 2.5, 1.75, 1.75),
    "OL:2": (1.4, 2.0, 2.0, 1.0, 1.5, 1.0, 2.5, 1.75, 1.75),
    "OT:1": (0.2, 0.5, 0.5, 2.0, 3.0, 0.2, 2.5, 1.0, 2.0),
}

# Weighted "Capacity To Host agents" edges, kept outside the base matrix.
HOST_AGENT_WEIGHTS = {
    "HL:1": 5.0,
    "HL:2": 5.0,
    "HT:1": 4.0,
    "OL:1": 3.0,
    "OL:2": 3.0,
    "OT:1": 2.0,
}


def practices_csv() -> bytes:
    out = io.StringIO()
    out.write("name,location,coupling,apiClient,channel\n")
    for row in PRACTICES:
        out.write(",".join(row) + "\n")
    return out.getvalue().encode("utf-8")


def weights_csv() -> bytes:
    out = io.StringIO()
    out.write(",".join(["name"] + MATRIX_COLUMNS) + "\n")
    for name, _, _, _, _ in PRACTICES:
        cells = [repr(value) for value in WEIGHTS[name]]
        out.write(",".join([name] + cells) + "\n")
    return out.getvalue().encode("utf-8")


def build_graph(*, host_agents: bool = True) -> PropertyGraph:
    """The demonstration graph: matrix import plus host-capacity edges."""
    graph = import_matrix(practices_csv(), weights_csv())
    if host_agents:
        host_id = graph.add_node({MAINTENANCE}, {"name": HOST_AGENTS})
        practice_ids = {
            node.attrs["name"]: node.id
            for node in graph.nodes()
            if "Practice" in node.labels
        }
        for name, value in HOST_AGENT_WEIGHTS.items():
            graph.add_edge(practice_ids[name], host_id, WEIGHT, {"value": value})
    return graph


def write_files(directory: Path) -> list[Path]:
    """Emit practices.csv, weights.csv and graph.json into a directory."""
    from . import document

    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, data in (
        ("practices.csv", practices_csv()),
        ("weights.csv", weights_csv()),
        ("graph.json", document.save(build_graph(), default_schema())),
    ):
        path = directory / name
        path.write_bytes(data)
        written.append(path)
    return written


def main(argv: list[str] | None = None) -> int:
    args = argv if argv is not None else sys.argv[1:]
    target = Path(args[0]) if args else Path("fixtures")
    for path in write_files(target):
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
