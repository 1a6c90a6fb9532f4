# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled structural matching kernel.

Mirrors ``_pure.enumerate_bindings`` exactly; the step program and array
encoding are produced by ``plan.compile_query``. Only the backtracking
search is compiled - filters, projection and ordering stay in Python.
"""

from cpython.list cimport PyList_Append

BACKEND_NAME = "cython"

ctypedef long long i64


cdef class _Search:
    cdef:
        i64 n_nodes, n_steps, n_node_vars, n_edge_vars
        i64[::1] step_kind, s_a, s_b, s_c, s_d, s_e
        i64[::1] cand_start, cand_flat
        signed char[::1] has_label
        i64[::1] out_start, out_edges, esrc, edst, elab
        i64[::1] node_assign, edge_assign
        list results

    cdef bint node_ok(self, i64 dense, i64 label_key) noexcept:
        if label_key < 0:
            return True
        return self.has_label[label_key * self.n_nodes + dense] != 0

    cdef bint edge_used(self, i64 e) noexcept:
        cdef i64 i
        for i in range(self.n_edge_vars):
            if self.edge_assign[i] == e:
                return True
        return False

    cdef void emit(self):
        cdef i64 i
        cdef list row = []
        for i in range(self.n_node_vars):
            row.append(self.node_assign[i])
        for i in range(self.n_edge_vars):
            row.append(self.edge_assign[i])
        PyList_Append(self.results, tuple(row))

    cdef void try_dst(self, i64 dst, i64 dst_var, i64 dst_label_key, i64 k):
        cdef i64 current
        if not self.node_ok(dst, dst_label_key):
            return
        current = self.node_assign[dst_var]
        if current >= 0:
            if current == dst:
                self.descend(k + 1)
            return
        self.node_assign[dst_var] = dst
        self.descend(k + 1)
        self.node_assign[dst_var] = -1

    cdef void descend(self, i64 k):
        cdef i64 var, label_key, current, dense, i
        cdef i64 evar, need_label, src_var, dst_var, dst_label_key, src, e, j
        if k == self.n_steps:
            self.emit()
            return
        if self.step_kind[k] == 0:
            var = self.s_a[k]
            label_key = self.s_b[k]
            current = self.node_assign[var]
            if current >= 0:
                if self.node_ok(current, label_key):
                    self.descend(k + 1)
                return
            if label_key >= 0:
                for i in range(self.cand_start[label_key], self.cand_start[label_key + 1]):
                    self.node_assign[var] = self.cand_flat[i]
                    self.descend(k + 1)
            else:
                for dense in range(self.n_nodes):
                    self.node_assign[var] = dense
                    self.descend(k + 1)
            self.node_assign[var] = -1
            return
        evar = self.s_a[k]
        need_label = self.s_b[k]
        src_var = self.s_c[k]
        dst_var = self.s_d[k]
        dst_label_key = self.s_e[k]
        src = self.node_assign[src_var]
        current = self.edge_assign[evar]
        if current >= 0:
            if self.esrc[current] != src:
                return
            if need_label != -2 and self.elab[current] != need_label:
                return
            self.try_dst(self.edst[current], dst_var, dst_label_key, k)
            return
        for j in range(self.out_start[src], self.out_start[src + 1]):
            e = self.out_edges[j]
            if need_label != -2 and self.elab[e] != need_label:
                continue
            if self.edge_used(e):
                continue
            self.edge_assign[evar] = e
            self.try_dst(self.edst[e], dst_var, dst_label_key, k)
            self.edge_assign[evar] = -1


def enumerate_bindings(
    n_nodes,
    n_node_vars,
    n_edge_vars,
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
):
    from array import array

    cdef _Search search = _Search()
    search.n_nodes = n_nodes
    search.n_node_vars = n_node_vars
    search.n_edge_vars = n_edge_vars
    search.n_steps = len(step_kind)
    # array('q') buffers arrive directly; empty ones need a dummy element so
    # the typed memoryview cast always succeeds
    search.step_kind = step_kind if len(step_kind) else array("q", [0])
    search.s_a = s_a if len(s_a) else array("q", [0])
    search.s_b = s_b if len(s_b) else array("q", [0])
    search.s_c = s_c if len(s_c) else array("q", [0])
    search.s_d = s_d if len(s_d) else array("q", [0])
    search.s_e = s_e if len(s_e) else array("q", [0])
    search.cand_start = cand_start if len(cand_start) else array("q", [0])
    search.cand_flat = cand_flat if len(cand_flat) else array("q", [0])
    search.has_label = has_label if len(has_label) else array("b", [0])
    search.out_start = out_start if len(out_start) else array("q", [0])
    search.out_edges = out_edges if len(out_edges) else array("q", [0])
    search.esrc = esrc if len(esrc) else array("q", [0])
    search.edst = edst if len(edst) else array("q", [0])
    search.elab = elab if len(elab) else array("q", [0])
    search.node_assign = array("q", [-1] * max(n_node_vars, 1))
    search.edge_assign = array("q", [-1] * max(n_edge_vars, 1))
    search.results = []
    if search.n_steps == 0:
        search.emit()
        return search.results
    search.descend(0)
    return search.results
