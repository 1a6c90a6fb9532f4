"""Compare the compiled matching kernel against the pure-Python fallback.

Builds a random labeled multigraph, compiles a few chain queries, and times
the structural enumeration through both kernels on identical plan arrays.

    python3 benchmarks/bench_match.py --nodes 300 --edges 3000 --repeat 5
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from iaselect.graph import PropertyGraph
from iaselect.query import parse
from iaselect.query import _pure
from iaselect.query.plan import build_graph_index, compile_query

try:
    from iaselect.query import _kernel
except ImportError:
    _kernel = None

QUERIES = [
    ("1-hop labeled", "MATCH (a:Alpha)-[e:LINK]->(b:Beta) RETURN a, e, b"),
    ("2-hop chain", "MATCH (a:Alpha)-[e1:LINK]->(b)-[e2:LINK]->(c:Gamma) RETURN a, b, c"),
    ("3-hop chain", "MATCH (a:Alpha)-[e1]->(b)-[e2]->(c)-[e3:FLOW]->(d) RETURN a, d"),
    ("diamond", "MATCH (a:Alpha)-[e1:LINK]->(b), (a)-[e2:FLOW]->(c) RETURN a, b, c"),
]


def build_graph(rng: random.Random, n_nodes: int, n_edges: int) -> PropertyGraph:
    graph = PropertyGraph()
    labels = ("Alpha", "Beta", "Gamma")
    nodes = [graph.add_node({rng.choice(labels)}, {"value": rng.random() * 5}) for _ in range(n_nodes)]
    for _ in range(n_edges):
        graph.add_edge(
            rng.choice(nodes), rng.choice(nodes),
            rng.choice(("LINK", "FLOW")), {"value": rng.random() * 5},
        )
    return graph


def time_kernel(kernel, args, repeat: int) -> tuple[float, int]:
    samples = []
    rows = 0
    for _ in range(repeat):
        start = time.perf_counter()
        rows = len(kernel.enumerate_bindings(*args))
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=300)
    parser.add_argument("--edges", type=int, default=3000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    opts = parser.parse_args()

    graph = build_graph(random.Random(opts.seed), opts.nodes, opts.edges)
    index = build_graph_index(graph)
    print(f"graph: {opts.nodes} nodes, {opts.edges} edges; median of {opts.repeat} runs\n")
    print(f"{'query':<14} {'rows':>9} {'pure':>10} {'cython':>10} {'speedup':>8}")

    for name, text in QUERIES:
        plan = compile_query(parse(text), index, graph)
        args = (
            len(index.node_ids), len(plan.node_var_names), len(plan.edge_var_names),
            plan.step_kind, plan.s_a, plan.s_b, plan.s_c, plan.s_d, plan.s_e,
            plan.cand_start, plan.cand_flat, plan.has_label,
            index.out_start, index.out_edges, index.esrc, index.edst, index.elab,
        )
        pure_time, pure_rows = time_kernel(_pure, args, opts.repeat)
        if _kernel is None:
            print(f"{name:<14} {pure_rows:>9} {pure_time * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        cy_time, cy_rows = time_kernel(_kernel, args, opts.repeat)
        assert cy_rows == pure_rows, "kernels disagree"
        print(
            f"{name:<14} {pure_rows:>9} {pure_time * 1e3:>8.2f}ms "
            f"{cy_time * 1e3:>8.2f}ms {pure_time / cy_time:>7.1f}x"
        )
    if _kernel is None:
        print("\ncompiled kernel not built; showing pure-Python timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
