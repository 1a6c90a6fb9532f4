import os
import threading
import time

import pytest

import iaselect.store as store_module
from iaselect import document
from iaselect.locking import ReadWriteLock
from iaselect.schema import default_schema
from iaselect.store import GraphStore, ReadOnlyStore, SchemaViolation, write_document_atomically


def _open(sample_db, **kwargs):
    return GraphStore.open(sample_db, **kwargs)


def test_open_and_read(sample_db):
    store = _open(sample_db)
    with store.read() as graph:
        assert len(graph.nodes_with_label("Practice")) == 6


def test_mutation_persists(sample_db):
    store = _open(sample_db)
    node_id = store.mutate(lambda g: g.add_node({"Domain"}, {"name": "Mining"}))
    graph, _ = document.load(sample_db.read_bytes())
    assert graph.has_node(node_id)


def test_strict_mode_rolls_back_schema_violation(sample_db):
    store = _open(sample_db, strict=True)
    before = sample_db.read_bytes()
    edge = next(iter(store.graph._edges))
    with pytest.raises(SchemaViolation):
        store.mutate(lambda g: g.update_attrs(edge, {"value": 9.0}))
    assert sample_db.read_bytes() == before
    with store.read() as graph:
        assert graph.edge(edge).attrs["value"] != 9.0


def test_permissive_mode_allows_violations(sample_db):
    store = _open(sample_db, strict=False)
    edge = next(iter(store.graph._edges))
    store.mutate(lambda g: g.update_attrs(edge, {"value": 9.0}))
    with store.read() as graph:
        assert graph.edge(edge).attrs["value"] == 9.0


def test_readonly_store_rejects_mutations(sample_db):
    store = _open(sample_db, readonly=True)
    with pytest.raises(ReadOnlyStore):
        store.mutate(lambda g: g.add_node({"Domain"}, {"name": "x"}))


def test_failed_mutation_function_leaves_state(sample_db):
    store = _open(sample_db)
    before = sample_db.read_bytes()

    def boom(graph):
        graph.add_node({"Domain"}, {"name": "doomed"})
        raise RuntimeError("injected failure")

    with pytest.raises(RuntimeError):
        store.mutate(boom)
    assert sample_db.read_bytes() == before
    with store.read() as graph:
        assert all(n.attrs.get("name") != "doomed" for n in graph.nodes())


def test_crash_between_write_and_rename_keeps_old_document(sample_db, monkeypatch):
    store = _open(sample_db)
    before = sample_db.read_bytes()

    def crash(src, dst):
        raise OSError("injected crash before rename")

    monkeypatch.setattr(store_module.os, "replace", crash)
    with pytest.raises(OSError):
        store.mutate(lambda g: g.add_node({"Domain"}, {"name": "lost"}))
    monkeypatch.undo()

    assert sample_db.read_bytes() == before  # old document, byte for byte
    assert [p for p in sample_db.parent.iterdir() if p.suffix == ".tmp"] == []
    with store.read() as graph:
        assert all(n.attrs.get("name") != "lost" for n in graph.nodes())
    # the store still works after the crash
    store.mutate(lambda g: g.add_node({"Domain"}, {"name": "recovered"}))
    graph, _ = document.load(sample_db.read_bytes())
    assert any(n.attrs.get("name") == "recovered" for n in graph.nodes())


def test_atomic_write_replaces_whole_file(tmp_path):
    path = tmp_path / "doc.json"
    path.write_bytes(b"old content")
    write_document_atomically(path, b"new content")
    assert path.read_bytes() == b"new content"
    assert list(tmp_path.iterdir()) == [path]


def test_readers_see_consistent_snapshot_during_mutation(sample_db):
    store = _open(sample_db)
    errors = []
    stop = threading.Event()

    def reader():
        while not stop.is_set():
            with store.read() as graph:
                node_ids = {n.id for n in graph.nodes()}
                for e in graph.edges():
                    if e.src not in node_ids or e.dst not in node_ids:
                        errors.append("dangling edge seen")

    threads = [threading.Thread(target=reader) for _ in range(4)]
    for t in threads:
        t.start()
    try:
        for _ in range(10):
            node_id = store.mutate(lambda g: g.add_node({"Domain"}, {"name": "t"}))
            store.mutate(lambda g: g.remove(node_id))
    finally:
        stop.set()
        for t in threads:
            t.join()
    assert errors == []


def test_rwlock_excludes_writer_during_reads():
    lock = ReadWriteLock()
    state = {"readers": 0, "writer": False, "max_readers": 0}
    bad = []

    def read():
        with lock.read_locked():
            state["readers"] += 1
            state["max_readers"] = max(state["max_readers"], state["readers"])
            if state["writer"]:
                bad.append("reader overlapped writer")
            time.sleep(0.01)
            state["readers"] -= 1

    def write():
        with lock.write_locked():
            if state["readers"] or state["writer"]:
                bad.append("writer overlapped")
            state["writer"] = True
            time.sleep(0.01)
            state["writer"] = False

    threads = [threading.Thread(target=read) for _ in range(8)]
    threads += [threading.Thread(target=write) for _ in range(3)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert bad == []
    assert state["max_readers"] >= 2  # readers actually ran concurrently
