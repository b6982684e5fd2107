"""HTTP facade for interactive clients, versioned under /v1.

Models live in an in-memory session store keyed by an opaque id, each with a
revision counter for optimistic concurrency: writers send the revision they
read, and a stale revision is rejected with a conflict so no update is lost
silently. Judgment sets that fail the consistency threshold are accepted and
flagged, because the workflow is evaluate-then-revise. An optional persist
directory gets a write-through .ahp.json copy of every accepted state.
"""

import dataclasses
import json
import os
import threading
import uuid

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ahpkit import __version__
from ahpkit.consistency import RANDOM_INDEX, estimate_random_index
from ahpkit.engine import evaluate, partial_reports, sweep_from_current
from ahpkit.errors import SchemaError, ValidationError
from ahpkit.model import JudgmentSet
from ahpkit.store import (
    ModelDocument,
    load_model,
    report_to_dict,
    result_to_dict,
    save_model,
    sweep_to_dict,
)


@dataclasses.dataclass
class ModelSession:
    document: ModelDocument
    revision: int


class SessionStore:
    """Synchronized map of model sessions with compare-and-swap mutation."""

    def __init__(self, persist_dir=None):
        self._lock = threading.Lock()
        self._sessions: dict[str, ModelSession] = {}
        self.persist_dir = persist_dir
        if persist_dir is not None:
            os.makedirs(persist_dir, exist_ok=True)

    def _persist(self, model_id: str, doc: ModelDocument):
        if self.persist_dir is None:
            return
        path = os.path.join(self.persist_dir, f"{model_id}.ahp.json")
        tmp = path + ".tmp"
        with open(tmp, "wb") as handle:
            handle.write(save_model(doc))
        os.replace(tmp, path)

    def create(self, doc: ModelDocument) -> tuple[str, int]:
        model_id = uuid.uuid4().hex[:12]
        with self._lock:
            self._sessions[model_id] = ModelSession(doc, 1)
            self._persist(model_id, doc)
        return model_id, 1

    def get(self, model_id: str) -> ModelSession:
        with self._lock:
            session = self._sessions.get(model_id)
            if session is None:
                raise KeyError(model_id)
            return ModelSession(session.document, session.revision)

    def replace_judgments(self, model_id: str, node_id: str, judgment_set: JudgmentSet,
                          if_revision: int) -> tuple[ModelDocument, int]:
        """Swap one node's judgment set atomically; stale revisions conflict."""
        with self._lock:
            session = self._sessions.get(model_id)
            if session is None:
                raise KeyError(model_id)
            if session.revision != if_revision:
                raise RevisionConflict(session.revision)
            doc = session.document
            judgments = dict(doc.judgments)
            judgments[node_id] = judgment_set
            new_doc = dataclasses.replace(doc, judgments=judgments)
            session.document = new_doc
            session.revision += 1
            self._persist(model_id, new_doc)
            return new_doc, session.revision


class RevisionConflict(Exception):
    def __init__(self, current: int):
        super().__init__(f"stale revision; current revision is {current}")
        self.current = current


def _error(status: int, code: str, message: str, path=None, **extra) -> JSONResponse:
    body = {"code": code, "message": message}
    if path is not None:
        body["path"] = path
    body.update(extra)
    return JSONResponse({"error": body}, status_code=status)


def _document_json(doc: ModelDocument) -> dict:
    return json.loads(save_model(doc).decode("utf-8"))


def _node_report(doc: ModelDocument, node_id: str) -> dict:
    """Fresh consistency feedback for one node, null while incomplete."""
    size = next(cs.size for cs in doc.hierarchy.comparison_sets() if cs.node_id == node_id)
    judgment_set = doc.judgments.get(node_id)
    missing = judgment_set.missing_pairs(size) if judgment_set else \
        [(i, j) for i in range(size) for j in range(i + 1, size)]
    if missing:
        return {"report": None, "missing_pairs": [list(p) for p in missing]}
    reports = partial_reports(doc)
    return {"report": report_to_dict(reports[node_id]), "missing_pairs": []}


def create_app(persist_dir=None, cors: bool = True) -> FastAPI:
    app = FastAPI(title="ahpkit", version=__version__, docs_url=None, redoc_url=None)
    store = SessionStore(persist_dir)
    app.state.store = store

    if cors:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.get("/v1/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/v1/models")
    async def create_model(request: Request):
        body = await request.body()
        if not body:
            return _error(400, "empty-body", "request body is empty; expected a model document")
        try:
            doc = load_model(body)
        except SchemaError as exc:
            return _error(400, "schema", str(exc), path=exc.path,
                          line=exc.line, column=exc.column)
        except ValidationError as exc:
            return _error(400, "invalid-hierarchy", str(exc),
                          defects=[dataclasses.asdict(d) for d in exc.defects])
        model_id, revision = store.create(doc)
        return JSONResponse(
            {"model_id": model_id, "revision": revision, "status": "created"},
            status_code=201,
        )

    @app.get("/v1/models/{model_id}")
    def get_model(model_id: str):
        try:
            session = store.get(model_id)
        except KeyError:
            return _error(404, "not-found", f"no model with id {model_id!r}")
        return {
            "model_id": model_id,
            "revision": session.revision,
            "document": _document_json(session.document),
            "incomplete": [
                {"node": node_id, "missing": [list(p) for p in missing]}
                for node_id, missing in session.document.incomplete_nodes()
            ],
        }

    @app.put("/v1/models/{model_id}/judgments/{node_id}")
    async def put_judgments(model_id: str, node_id: str, request: Request,
                            if_revision: int):
        body = await request.body()
        try:
            raw = json.loads(body or b"")
        except json.JSONDecodeError as exc:
            return _error(400, "schema", f"not valid JSON: {exc.msg}",
                          line=exc.lineno, column=exc.colno)
        if not isinstance(raw, list):
            return _error(400, "schema", "body must be a list of judgment entries")
        try:
            session = store.get(model_id)
        except KeyError:
            return _error(404, "not-found", f"no model with id {model_id!r}")
        sizes = {cs.node_id: cs.size for cs in session.document.hierarchy.comparison_sets()}
        if node_id not in sizes:
            return _error(404, "not-found", f"no comparison set for node {node_id!r}")
        try:
            triples = []
            for entry in raw:
                if not isinstance(entry, dict) or not {"i", "j", "value"} <= set(entry):
                    raise ValidationError("each entry needs integer i, j and a value")
                triples.append((entry["i"], entry["j"], entry["value"]))
            judgment_set = JudgmentSet.of(node_id, triples)
            for entry in judgment_set.entries:
                if entry.j >= sizes[node_id]:
                    raise ValidationError(
                        f"pair ({entry.i}, {entry.j}) out of range for node "
                        f"{node_id!r} of size {sizes[node_id]}")
        except ValidationError as exc:
            return _error(400, "invalid-judgment", str(exc), path=f"judgments.{node_id}")
        try:
            new_doc, revision = store.replace_judgments(model_id, node_id, judgment_set, if_revision)
        except KeyError:
            return _error(404, "not-found", f"no model with id {model_id!r}")
        except RevisionConflict as exc:
            return _error(409, "revision-conflict", str(exc), current_revision=exc.current)
        feedback = _node_report(new_doc, node_id)
        return {"model_id": model_id, "revision": revision, "node": node_id, **feedback}

    @app.get("/v1/models/{model_id}/consistency")
    def get_consistency(model_id: str):
        try:
            session = store.get(model_id)
        except KeyError:
            return _error(404, "not-found", f"no model with id {model_id!r}")
        reports = partial_reports(session.document)
        incomplete = session.document.incomplete_nodes()
        return {
            "model_id": model_id,
            "revision": session.revision,
            "reports": {node_id: report_to_dict(r) for node_id, r in reports.items()},
            "incomplete": [
                {"node": node_id, "missing": [list(p) for p in missing]}
                for node_id, missing in incomplete
            ],
            "consistent": (not incomplete) and all(r.consistent for r in reports.values()),
        }

    def _evaluated(model_id: str):
        session = store.get(model_id)
        incomplete = session.document.incomplete_nodes()
        if incomplete:
            names = [node_id for node_id, _ in incomplete]
            raise ValidationError(
                f"model is incomplete; missing judgments for node(s) {', '.join(names)}")
        return session, evaluate(session.document)

    @app.get("/v1/models/{model_id}/synthesis")
    def get_synthesis(model_id: str):
        try:
            session, ev = _evaluated(model_id)
        except KeyError:
            return _error(404, "not-found", f"no model with id {model_id!r}")
        except ValidationError as exc:
            return _error(400, "incomplete-model", str(exc))
        payload = result_to_dict(ev.synthesis, session.document.hierarchy)
        payload["model_id"] = model_id
        payload["revision"] = session.revision
        payload["reports"] = {nid: report_to_dict(r) for nid, r in ev.reports.items()}
        inconsistent = ev.inconsistent_nodes()
        if inconsistent:
            payload["warning"] = {
                "code": "inconsistent-judgments",
                "nodes": inconsistent,
                "message": "one or more comparison sets exceed the CR threshold",
            }
        return payload

    @app.get("/v1/models/{model_id}/sensitivity")
    def get_sensitivity(model_id: str, node: str, steps: int = 100):
        if steps < 2:
            return _error(400, "bad-request", "steps must be at least 2", path="steps")
        try:
            _, ev = _evaluated(model_id)
            sweep = sweep_from_current(ev, node, steps)
        except KeyError:
            return _error(404, "not-found", f"no model with id {model_id!r}")
        except ValidationError as exc:
            return _error(400, "bad-request", str(exc), path="node")
        return sweep_to_dict(sweep)

    @app.get("/v1/ri")
    def get_ri(n: int, samples: int = 100_000, seed: int = 0):
        try:
            estimate = estimate_random_index(n, samples, seed)
        except ValidationError as exc:
            return _error(400, "bad-request", str(exc), path="n")
        return {
            "n": n, "samples": samples, "seed": seed,
            "estimate": estimate, "table": RANDOM_INDEX[n],
            "difference": estimate - RANDOM_INDEX[n],
        }

    return app
