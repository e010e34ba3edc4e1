"""Local HTTP+JSON API over the whole engine.

Routes (all bodies UTF-8 JSON, domain errors answer 400 with
``{"error": code, "message": ...}``):

* ``POST /sessions`` ``{participant?}`` -> ``{id}``
* ``POST /sessions/{id}/attempts`` ``{task, trace, answer?, attempt_id?}``
  -> ``{correct, report}``
* ``GET /sessions/{id}`` -> the full session
* ``GET /sessions/{id}/report`` -> aggregate summary
* ``GET /abacus/economical?n=&rods=`` -> config
* ``POST /abacus/normalize`` ``{config}`` -> config
* ``GET /abacus/inscriptions?n=&rods=`` -> [config, ...]
* ``GET /verbalize?n=&lang=`` -> numeral form
* ``POST /classify`` ``{trace, target, rod_count?}`` -> report
* ``POST /worksheets`` ``{spec}`` -> ``{svg, key}``

The engine is pure, so GETs are freely concurrent; the store serializes
writes per session. Responses carry permissive CORS headers so a browser
front end served from anywhere on this machine can call the API.
"""

from __future__ import annotations

import json
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .classify import classify
from .core import DEFAULT_ROD_COUNT, AbacusConfig, enumerate_inscriptions, normalize, set_economical
from .errors import DomainError
from .gestures import Trace
from .session import SessionStore, Task, session_report
from .verbal import Language, say
from .worksheet import WorksheetSpec, worksheet_generate


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _int_param(params: dict, name: str, default=None) -> int:
    values = params.get(name)
    if not values:
        if default is None:
            raise ApiError(400, "missing-parameter", f"query parameter {name!r} is required")
        return default
    try:
        return int(values[0])
    except ValueError:
        raise ApiError(400, "invalid-input", f"{name!r} must be an integer") from None


class _Handler(BaseHTTPRequestHandler):
    server_version = "suanpan"
    store: SessionStore
    default_rod_count: int

    # ---- plumbing -------------------------------------------------------
    def log_message(self, format, *args):  # quiet by default
        pass

    def _send(self, status: int, payload) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        try:
            data = json.loads(self.rfile.read(length).decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            raise ApiError(400, "invalid-json", "request body is not valid JSON") from None
        if not isinstance(data, dict):
            raise ApiError(400, "invalid-json", "request body must be a JSON object")
        return data

    def _dispatch(self, method: str) -> None:
        url = urlparse(self.path)
        params = parse_qs(url.query)
        try:
            payload = self._route(method, url.path, params)
        except ApiError as err:
            self._send(err.status, {"error": err.code, "message": err.message})
        except DomainError as err:
            self._send(400, {"error": err.code, "message": err.message})
        except (ValueError, KeyError) as err:
            self._send(400, {"error": "invalid-input", "message": str(err)})
        else:
            self._send(200, payload)

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    # ---- routes ---------------------------------------------------------
    def _route(self, method: str, path: str, params: dict):
        if method == "POST" and path == "/sessions":
            body = self._body()
            session = self.store.create(participant=str(body.get("participant", "anonymous")))
            return {"id": session.id}

        match = re.fullmatch(r"/sessions/([A-Za-z0-9]+)", path)
        if match and method == "GET":
            return self._load_session(match.group(1)).to_json()

        match = re.fullmatch(r"/sessions/([A-Za-z0-9]+)/report", path)
        if match and method == "GET":
            return session_report(self._load_session(match.group(1))).to_json()

        match = re.fullmatch(r"/sessions/([A-Za-z0-9]+)/attempts", path)
        if match and method == "POST":
            body = self._body()
            if "task" not in body or "trace" not in body:
                raise ApiError(400, "missing-field", "an attempt needs a task and a trace")
            session_id = match.group(1)
            self._load_session(session_id)  # 404 before evaluating
            task = Task.from_json(body["task"])
            trace = Trace.from_json(body["trace"])
            attempt = self.store.add_attempt(
                session_id,
                task,
                trace,
                answer=body.get("answer"),
                attempt_id=body.get("attempt_id"),
            )
            return {"correct": attempt.correct, "report": attempt.report.to_json()}

        if method == "GET" and path == "/abacus/economical":
            n = _int_param(params, "n")
            rods = _int_param(params, "rods", self.default_rod_count)
            return set_economical(n, rods).to_json()

        if method == "POST" and path == "/abacus/normalize":
            body = self._body()
            if "config" not in body:
                raise ApiError(400, "missing-field", "normalize needs a config")
            return normalize(AbacusConfig.from_json(body["config"])).to_json()

        if method == "GET" and path == "/abacus/inscriptions":
            n = _int_param(params, "n")
            rods = _int_param(params, "rods", self.default_rod_count)
            return [c.to_json() for c in enumerate_inscriptions(n, rods)]

        if method == "GET" and path == "/verbalize":
            n = _int_param(params, "n")
            lang_values = params.get("lang")
            if not lang_values:
                raise ApiError(400, "missing-parameter", "query parameter 'lang' is required")
            try:
                lang = Language(lang_values[0].lower())
            except ValueError:
                raise ApiError(400, "invalid-input", f"unknown language {lang_values[0]!r}") from None
            return say(n, lang).to_json()

        if method == "POST" and path == "/classify":
            body = self._body()
            if "trace" not in body or "target" not in body:
                raise ApiError(400, "missing-field", "classify needs a trace and a target")
            trace = Trace.from_json(body["trace"])
            rod_count = body.get("rod_count", self.default_rod_count)
            return classify(trace, target=int(body["target"]), rod_count=int(rod_count)).to_json()

        if method == "POST" and path == "/worksheets":
            body = self._body()
            spec = WorksheetSpec.from_json(body.get("spec", body))
            document = worksheet_generate(spec)
            return {"svg": list(document.pages), "key": {str(k): v for k, v in document.key.items()}}

        raise ApiError(404, "not-found", f"no route for {method} {path}")

    def _load_session(self, session_id: str):
        try:
            return self.store.load(session_id)
        except KeyError:
            raise ApiError(404, "not-found", f"no session {session_id!r}") from None


def make_server(
    port: int = 0,
    data_dir: str = "./sessions",
    rod_count: int = DEFAULT_ROD_COUNT,
    host: str = "127.0.0.1",
) -> ThreadingHTTPServer:
    """Build (but do not run) the API server; port 0 picks a free port."""
    handler = type(
        "Handler",
        (_Handler,),
        {"store": SessionStore(data_dir), "default_rod_count": rod_count},
    )
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(server: ThreadingHTTPServer) -> None:
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def serve_in_background(server: ThreadingHTTPServer) -> threading.Thread:
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return thread
