"""Pure-Python structural matching kernel.

Same contract as the compiled kernel in ``_kernel.pyx``: enumerate every
assignment of dense node/edge indexes to variable slots that satisfies the
step program. Kept dependency-free and semantically identical so it can act
as the import-time fallback and as the comparison baseline in benchmarks.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def enumerate_bindings(
    n_nodes: int,
    n_node_vars: int,
    n_edge_vars: int,
    step_kind,
    s_a,
    s_b,
    s_c,
    s_d,
    s_e,
    cand_start,
    cand_flat,
    has_label,
    out_start,
    out_edges,
    esrc,
    edst,
    elab,
) -> list[tuple[int, ...]]:
    results: list[tuple[int, ...]] = []
    node_assign = [-1] * n_node_vars
    edge_assign = [-1] * n_edge_vars
    n_steps = len(step_kind)

    def node_ok(dense: int, label_key: int) -> bool:
        return label_key < 0 or has_label[label_key * n_nodes + dense] != 0

    def descend(k: int) -> None:
        if k == n_steps:
            results.append(tuple(node_assign) + tuple(edge_assign))
            return
        if step_kind[k] == 0:  # bind a path's first node
            var, label_key = s_a[k], s_b[k]
            current = node_assign[var]
            if current >= 0:
                if node_ok(current, label_key):
                    descend(k + 1)
                return
            if label_key >= 0:
                candidates = cand_flat[cand_start[label_key]:cand_start[label_key + 1]]
            else:
                candidates = range(n_nodes)
            for dense in candidates:
                node_assign[var] = dense
                descend(k + 1)
            node_assign[var] = -1
            return
        # expand one edge from an already-bound source
        evar, need_label = s_a[k], s_b[k]
        src_var, dst_var, dst_label_key = s_c[k], s_d[k], s_e[k]
        src = node_assign[src_var]
        current = edge_assign[evar]
        if current >= 0:
            # reused edge variable: this occurrence must agree with the binding
            if esrc[current] != src:
                return
            if need_label != -2 and elab[current] != need_label:
                return
            _try_dst(current, edst[current], dst_var, dst_label_key, k)
            return
        for j in range(out_start[src], out_start[src + 1]):
            e = out_edges[j]
            if need_label != -2 and elab[e] != need_label:
                continue
            if e in edge_assign:  # edge variables bind pairwise distinct edges
                continue
            edge_assign[evar] = e
            _try_dst(e, edst[e], dst_var, dst_label_key, k)
            edge_assign[evar] = -1

    def _try_dst(e: int, dst: int, dst_var: int, dst_label_key: int, k: int) -> None:
        if not node_ok(dst, dst_label_key):
            return
        current = node_assign[dst_var]
        if current >= 0:
            if current == dst:
                descend(k + 1)
            return
        node_assign[dst_var] = dst
        descend(k + 1)
        node_assign[dst_var] = -1

    descend(0)
    return results
