"""A graph document on disk plus the concurrency and durability rules.

Reads run under a shared lock against an immutable snapshot. Mutations copy
the graph, apply the change to the copy, optionally check the schema
(strict mode rejects mutations introducing new violations), persist the new
document atomically (temp file + rename in the same directory), and only
then publish the copy. A crash anywhere in between leaves the old document
intact on disk and the old graph visible to readers.
"""

from __future__ import annotations

import copy
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import document
from .graph import PropertyGraph
from .locking import ReadWriteLock
from .schema import GraphSchema, Violation, validate


class StoreError(Exception):
    pass


class ReadOnlyStore(StoreError):
    pass


class SchemaViolation(StoreError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        first = violations[0]
        super().__init__(
            f"{first.element_kind} {first.element_id}: {first.message}"
            + (f" (+{len(violations) - 1} more)" if len(violations) > 1 else "")
        )


def write_document_atomically(path: Path, data: bytes) -> None:
    """Replace the file at ``path`` with ``data`` via temp-file-and-rename."""
    fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(temp_name, path)
    except BaseException:
        try:
            os.unlink(temp_name)
        except OSError:
            pass
        raise


@dataclass
class GraphStore:
    path: Path | None
    graph: PropertyGraph
    schema: GraphSchema
    strict: bool = True
    readonly: bool = False

    def __post_init__(self):
        self._lock = ReadWriteLock()

    @classmethod
    def open(cls, path: str | Path, *, strict: bool = True, readonly: bool = False) -> "GraphStore":
        path = Path(path)
        graph, schema = document.load(path.read_bytes())
        return cls(path, graph, schema, strict=strict, readonly=readonly)

    def read(self):
        """Shared-lock context yielding the current graph snapshot."""
        return _ReadLease(self)

    def mutate(self, apply: Callable[[PropertyGraph], object]):
        """Run one mutation.

        ``apply`` receives a private copy of the graph and returns whatever
        the caller wants back (an id, a previous-attrs map, ...). The result
        is published and persisted only if the schema check and the disk
        write succeed.
        """
        if self.readonly:
            raise ReadOnlyStore("store is in read-only mode")
        with self._lock.write_locked():
            before = validate(self.graph, self.schema) if self.strict else []
            working = copy.deepcopy(self.graph)
            result = apply(working)
            if self.strict:
                known = set(before)
                introduced = [v for v in validate(working, self.schema) if v not in known]
                if introduced:
                    raise SchemaViolation(introduced)
            if self.path is not None:
                write_document_atomically(self.path, document.save(working, self.schema))
            self.graph = working
            return result


class _ReadLease:
    def __init__(self, store: GraphStore):
        self._store = store
        self._ctx = None

    def __enter__(self) -> PropertyGraph:
        self._ctx = self._store._lock.read_locked()
        self._ctx.__enter__()
        return self._store.graph

    def __exit__(self, *exc):
        return self._ctx.__exit__(*exc)
