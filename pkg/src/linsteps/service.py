"""HTTP JSON API exposing the engine to the web UI and other clients.

Endpoints (HTTP/1.1, application/json; charset=utf-8):

    GET  /api/v1/health     -> {"status": "ok"}
    GET  /api/v1/methods    -> {"methods": [{task, id, name, applicability}]}
    POST /api/v1/compute    -> {"traces": [...], "comparison": {...} | null}
    POST /api/v1/verify-sw  -> basis-check report

The service is a stateless local compute endpoint: no sessions, no
persistence.  Each computation is pure, so concurrent identical requests
return identical bodies, and compute responses are byte-identical to the
CLI's JSON output because both serialize the same payload the same way.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import (DimensionCapExceeded, EngineError, TaskMismatch,
                     UnknownMethod)
from .matmul import VARIANTS
from .pedagogy import verify_sw_basis
from .registry import METHODS, TASKS, check_cap, compute_payload, find_method, parse_task_inputs
from .trace import canonical_json

log = logging.getLogger(__name__)

MAX_BODY_BYTES = 1 << 20  # 1 MiB


class EngineServer(ThreadingHTTPServer):
    daemon_threads = True
    allow_reuse_address = True

    def __init__(self, address, cors: bool = True):
        self.cors = cors
        super().__init__(address, ApiHandler)


class ApiHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):
        log.debug("%s - %s", self.address_string(), fmt % args)

    # -- plumbing ---------------------------------------------------------

    def _send(self, status: int, payload) -> None:
        body = canonical_json(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self._cors_headers()
        self.end_headers()
        self.wfile.write(body)

    def _cors_headers(self) -> None:
        if getattr(self.server, "cors", True):
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _read_json(self):
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY_BYTES:
            self._drain(length)
            self.close_connection = True
            self._send(413, {"error": "PayloadTooLarge",
                             "message": f"request body above {MAX_BODY_BYTES} bytes"})
            return None
        raw = self.rfile.read(length) if length else b""
        try:
            return json.loads(raw.decode("utf-8")) if raw else {}
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            self._send(400, {"error": "ParseError", "message": f"malformed JSON: {exc}"})
            return None

    def _drain(self, length: int, cap: int = 64 << 20) -> None:
        """Discard an oversized body so the client can finish writing it."""
        remaining = min(length, cap)
        while remaining > 0:
            chunk = self.rfile.read(min(remaining, 1 << 16))
            if not chunk:
                break
            remaining -= len(chunk)

    # -- routes -----------------------------------------------------------

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Content-Length", "0")
        self._cors_headers()
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/v1/health":
            self._send(200, {"status": "ok"})
        elif self.path == "/api/v1/methods":
            self._send(200, {"methods": [m.to_json() for m in METHODS]})
        else:
            self._send(404, {"error": "NotFound", "message": self.path})

    def do_POST(self):
        if self.path == "/api/v1/compute":
            self._compute()
        elif self.path == "/api/v1/verify-sw":
            self._verify_sw()
        else:
            self._send(404, {"error": "NotFound", "message": self.path})

    def _compute(self):
        payload = self._read_json()
        if payload is None:
            return
        task = payload.get("task")
        if task not in TASKS:
            self._send(400, {"error": "UnknownTask",
                             "message": f"task must be one of {', '.join(TASKS)}"})
            return
        method_ids = payload.get("methods")
        if not isinstance(method_ids, list) or not method_ids:
            self._send(400, {"error": "ParseError", "message": "methods must be a nonempty list"})
            return
        try:
            for mid in method_ids:
                find_method(task, mid)
            inputs = parse_task_inputs(task, payload.get("inputs"))
            check_cap(inputs)
        except UnknownMethod as exc:
            self._send(400, {"error": exc.code, "message": str(exc)})
            return
        except TaskMismatch as exc:
            self._send(422, {"error": exc.code, "message": str(exc)})
            return
        except DimensionCapExceeded as exc:
            self._send(413, {"error": exc.code, "message": str(exc)})
            return
        except EngineError as exc:
            self._send(400, {"error": exc.code, "message": str(exc)})
            return
        self._send(200, compute_payload(task, method_ids, inputs))

    def _verify_sw(self):
        payload = self._read_json()
        if payload is None:
            return
        variant = payload.get("variant", "winograd")
        samples = payload.get("samples", 50)
        seed = payload.get("seed", 0)
        if variant not in VARIANTS or not isinstance(samples, int) or not isinstance(seed, int):
            self._send(400, {"error": "ConfigInvalid",
                             "message": f"variant must be one of {VARIANTS}; "
                                        f"samples and seed must be integers"})
            return
        try:
            report = verify_sw_basis(variant, samples, seed)
        except EngineError as exc:
            self._send(400, {"error": exc.code, "message": str(exc)})
            return
        self._send(200, report.to_json())


def create_server(port: int = 0, bind: str = "127.0.0.1", cors: bool = True) -> EngineServer:
    return EngineServer((bind, port), cors=cors)


def serve(port: int = 8000, bind: str = "127.0.0.1", cors: bool = True) -> None:
    """Run until interrupted."""
    server = create_server(port, bind, cors)
    host, actual_port = server.server_address[:2]
    print(f"listening on http://{host}:{actual_port}/api/v1/ (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
