"""HTTP/JSON front door: query, report, and admin mutation endpoints.

All routes live under ``/api/v1``. Read endpoints are public; mutations
need a bearer token mapped to the admin role. Every non-2xx response body
is a single error object ``{"code", "message"}`` (plus ``"position"`` for
parse errors).
"""

from __future__ import annotations

import json
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import document
from .graph import EmptyLabels, GraphError, UnknownElement, UnknownEndpoint
from .query import QueryError, evaluate, parse
from .recommend import (
    ContextSelection,
    InvalidCriteria,
    PracticeReport,
    UnknownContext,
    generate_report,
)
from .schema import CHARACTERISTIC_LABELS, HOST_AGENTS, PRACTICE
from .store import GraphStore, ReadOnlyStore, SchemaViolation
from .values import InvalidAttrKey, InvalidAttrValue, check_attrs

MAX_QUERY_BYTES = 4096

ROLE_USER = "user"
ROLE_ADMIN = "admin"


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, position: dict | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.position = position
        super().__init__(message)

    def response(self) -> JSONResponse:
        body: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.position is not None:
            body["position"] = self.position
        return JSONResponse(status_code=self.status, content=body)


def json_bytes(obj: Any) -> bytes:
    """The service's canonical JSON encoding (shared with the CLI)."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def report_json_bytes(report: PracticeReport) -> bytes:
    return json_bytes(report.to_obj())


def _expect(body: Any, key: str, kind: type, where: str):
    if not isinstance(body, dict):
        raise ApiError(400, "BadRequest", f"{where} must be a JSON object")
    if key not in body:
        raise ApiError(400, "BadRequest", f"{where} is missing {key!r}")
    value = body[key]
    if kind is not bool and isinstance(value, bool) or not isinstance(value, kind):
        raise ApiError(400, "BadRequest", f"{where}.{key} must be {kind.__name__}")
    return value


def _attrs_from_json(obj: Any, where: str) -> dict:
    if not isinstance(obj, dict):
        raise ApiError(400, "BadRequest", f"{where} must be a JSON object")
    try:
        return check_attrs(obj)
    except (InvalidAttrKey, InvalidAttrValue) as exc:
        raise ApiError(400, "InvalidAttrs", str(exc)) from None


def create_app(
    store: GraphStore,
    *,
    tokens: dict[str, str] | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    """Build the application around an open store.

    ``tokens`` maps bearer tokens to roles ("user" or "admin").
    """
    tokens = tokens or {}
    app = FastAPI(title="iaselect", version="0.1.0", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins if cors_origins is not None else ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        return exc.response()

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(_request: Request, exc: StarletteHTTPException):
        return ApiError(exc.status_code, "HttpError", str(exc.detail)).response()

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError):
        return ApiError(400, "BadRequest", "request body is not valid JSON").response()

    @app.exception_handler(Exception)
    async def _unhandled(_request: Request, exc: Exception):
        return ApiError(500, "Internal", "internal server error").response()

    def require_admin(request: Request) -> None:
        header = request.headers.get("authorization", "")
        if not header.startswith("Bearer "):
            raise ApiError(401, "Unauthorized", "admin endpoints require a bearer token")
        role = tokens.get(header[len("Bearer "):])
        if role is None:
            raise ApiError(401, "Unauthorized", "unknown token")
        if role != ROLE_ADMIN:
            raise ApiError(403, "Forbidden", "this endpoint requires the admin role")
        if store.readonly:
            raise ApiError(503, "ReadOnly", "the store is serving in read-only mode")

    async def read_json(request: Request) -> Any:
        raw = await request.body()
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            raise ApiError(400, "BadRequest", "request body is not valid JSON") from None

    # -- read endpoints ------------------------------------------------------

    @app.get("/api/v1/schema")
    def get_schema():
        with store.read() as graph:
            names = {}
            for label in CHARACTERISTIC_LABELS:
                found = []
                for node_id in graph.nodes_with_label(label):
                    name = graph.node(node_id).attrs.get("name")
                    if isinstance(name, str):
                        found.append(name)
                names[label] = sorted(set(found))
            criteria = sorted(
                set(names["Maintenance"] + names["PerformanceEfficiency"]) - {HOST_AGENTS}
            )
            body = {
                "schema": document.schema_to_obj(store.schema),
                "names": names,
                "criteriaNames": criteria,
            }
        return Response(content=json_bytes(body), media_type="application/json")

    @app.get("/api/v1/practices")
    def get_practices():
        with store.read() as graph:
            practices = []
            for node_id in graph.nodes_with_label(PRACTICE):
                node = graph.node(node_id)
                location = ""
                for candidate in ("OnDevice", "Hybrid"):
                    if candidate in node.labels:
                        location = candidate
                practices.append(
                    {
                        "name": str(node.attrs.get("name", "")),
                        "location": location,
                        "coupling": str(node.attrs.get("coupling", "")),
                        "apiClient": str(node.attrs.get("apiClient", "")),
                        "channel": str(node.attrs.get("channel", "")),
                    }
                )
            practices.sort(key=lambda p: p["name"])
        return Response(content=json_bytes(practices), media_type="application/json")

    @app.post("/api/v1/report")
    async def post_report(request: Request):
        body = await read_json(request)
        context_obj = _expect(body, "context", dict, "request")
        criteria = _expect(body, "criteria", dict, "request")
        host_agents = context_obj.get("requireHostAgents", False)
        if not isinstance(host_agents, bool):
            raise ApiError(400, "BadRequest", "context.requireHostAgents must be a boolean")
        context = ContextSelection(
            domain=_expect(context_obj, "domain", str, "context"),
            function=_expect(context_obj, "function", str, "context"),
            require_host_agents=host_agents,
        )
        try:
            with store.read() as graph:
                report = generate_report(context, criteria, graph)
        except InvalidCriteria as exc:
            first = exc.errors[0]
            raise ApiError(422, first.code, first.message) from None
        except UnknownContext as exc:
            raise ApiError(400, "UnknownContext", str(exc)) from None
        return Response(content=report_json_bytes(report), media_type="application/json")

    @app.post("/api/v1/query")
    async def post_query(request: Request):
        body = await read_json(request)
        text = _expect(body, "text", str, "request")
        if len(text.encode("utf-8")) > MAX_QUERY_BYTES:
            raise ApiError(413, "QueryTooLarge", f"query text exceeds {MAX_QUERY_BYTES} bytes")
        try:
            query = parse(text)
        except QueryError as exc:
            raise ApiError(
                400, type(exc).__name__, str(exc),
                position={"line": exc.line, "column": exc.column},
            ) from None
        with store.read() as graph:
            result = evaluate(query, graph)
        return Response(content=json_bytes(result.to_obj()), media_type="application/json")

    # -- admin mutations -----------------------------------------------------

    def run_mutation(apply):
        try:
            return store.mutate(apply)
        except ReadOnlyStore:
            raise ApiError(503, "ReadOnly", "the store is serving in read-only mode") from None
        except SchemaViolation as exc:
            raise ApiError(409, "SchemaViolation", str(exc)) from None
        except UnknownElement as exc:
            raise ApiError(404, "UnknownElement", str(exc)) from None
        except UnknownEndpoint as exc:
            raise ApiError(400, "UnknownEndpoint", str(exc)) from None
        except EmptyLabels as exc:
            raise ApiError(400, "EmptyLabels", str(exc)) from None
        except (InvalidAttrKey, InvalidAttrValue) as exc:
            raise ApiError(400, "InvalidAttrs", str(exc)) from None
        except GraphError as exc:
            raise ApiError(400, "GraphError", str(exc)) from None

    @app.post("/api/v1/nodes")
    async def post_node(request: Request):
        require_admin(request)
        body = await read_json(request)
        labels = _expect(body, "labels", list, "request")
        if not all(isinstance(lab, str) for lab in labels):
            raise ApiError(400, "BadRequest", "labels must be strings")
        attrs = _attrs_from_json(body.get("attrs", {}), "attrs")
        node_id = run_mutation(lambda g: g.add_node(labels, attrs))
        return JSONResponse(status_code=201, content={"id": str(node_id)})

    @app.post("/api/v1/edges")
    async def post_edge(request: Request):
        require_admin(request)
        body = await read_json(request)
        src = _parse_element_id(_expect(body, "src", str, "request"))
        dst = _parse_element_id(_expect(body, "dst", str, "request"))
        label = _expect(body, "label", str, "request")
        attrs = _attrs_from_json(body.get("attrs", {}), "attrs")
        edge_id = run_mutation(lambda g: g.add_edge(src, dst, label, attrs))
        return JSONResponse(status_code=201, content={"id": str(edge_id)})

    def _parse_element_id(text: str) -> int:
        try:
            return int(text, 10)
        except ValueError:
            raise ApiError(400, "BadRequest", f"invalid element id {text!r}") from None

    def _checked_element(kind: str, element_id: str) -> int:
        parsed = _parse_element_id(element_id)
        with store.read() as graph:
            exists = graph.has_node(parsed) if kind == "nodes" else graph.has_edge(parsed)
        if not exists:
            raise ApiError(404, "UnknownElement", f"no {kind[:-1]} with id {element_id}")
        return parsed

    @app.patch("/api/v1/{kind}/{element_id}")
    async def patch_element(kind: str, element_id: str, request: Request):
        require_admin(request)
        if kind not in ("nodes", "edges"):
            raise ApiError(404, "NotFound", f"unknown collection {kind!r}")
        body = await read_json(request)
        attrs = _attrs_from_json(_expect(body, "attrs", dict, "request"), "attrs")
        parsed = _checked_element(kind, element_id)
        previous = run_mutation(lambda g: g.update_attrs(parsed, attrs))
        return JSONResponse(status_code=200, content={"id": element_id, "previous": previous})

    @app.delete("/api/v1/{kind}/{element_id}")
    async def delete_element(kind: str, element_id: str, request: Request):
        require_admin(request)
        if kind not in ("nodes", "edges"):
            raise ApiError(404, "NotFound", f"unknown collection {kind!r}")
        parsed = _checked_element(kind, element_id)
        removed = run_mutation(lambda g: g.remove(parsed))
        return JSONResponse(status_code=200, content={"id": element_id, "removed": removed})

    return app
