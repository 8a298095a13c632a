"""JSON-over-HTTP service hosting the analysis pipeline and the UI.

Endpoints:
    POST /api/analyze          {"text": ..., "title"?, "config"?} -> 201 {"id"}
    GET  /api/analyses         -> {"analyses": [{id, title, created}, ...]}
    GET  /api/analyses/{id}    -> stored analysis JSON | 404
    GET  /api/health           -> {"status": "ok"}
    GET  /...                  -> static UI files when a static dir is set

A threading server handles concurrent requests; analyses are
independent and the store serializes its own index updates. Binds to
127.0.0.1 unless told otherwise: this is a local tool with no auth.
"""

from __future__ import annotations

import json
import mimetypes
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import AnalyzeError, SirenlessError
from .pipeline import AnalyzeConfig, analyze, canonical_json
from .store import AnalysisStore

MAX_BODY_BYTES = 1 << 20  # 1 MiB

_CONFIG_KEYS = {"seed", "topics_k", "lda_iterations", "topic_top_n"}


def _config_from_request(raw: dict) -> AnalyzeConfig:
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    kwargs = {}
    for key in _CONFIG_KEYS & set(raw):
        value = raw[key]
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"config {key} must be a non-negative integer")
        kwargs[key] = value
    return AnalyzeConfig(**kwargs)


class AnalysisRequestHandler(BaseHTTPRequestHandler):
    server_version = "sirenless"
    protocol_version = "HTTP/1.1"

    # Injected by make_server().
    store: AnalysisStore
    static_dir: str | None = None
    max_body_bytes: int = MAX_BODY_BYTES
    quiet = True

    def log_message(self, fmt, *args):  # noqa: D102 - silence default stderr spam
        if not self.quiet:
            super().log_message(fmt, *args)

    # -- helpers ---------------------------------------------------------

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict) -> None:
        body = (json.dumps(payload, ensure_ascii=False) + "\n").encode("utf-8")
        self._send(status, body, "application/json; charset=utf-8")

    def _error(self, status: int, code: str, message: str) -> None:
        self._send_json(status, {"error": code, "message": message})

    # -- routes ----------------------------------------------------------

    def do_POST(self):  # noqa: N802
        if self.path.rstrip("/") != "/api/analyze":
            self._error(404, "not_found", f"unknown endpoint {self.path}")
            return
        length = self.headers.get("Content-Length")
        if length is None:
            self._error(400, "missing_length", "Content-Length required")
            return
        try:
            n = int(length)
        except ValueError:
            self._error(400, "bad_length", "Content-Length not an integer")
            return
        if n > self.max_body_bytes:
            # Drain before replying so the client can finish its send.
            remaining = n
            while remaining > 0:
                chunk = self.rfile.read(min(remaining, 1 << 16))
                if not chunk:
                    break
                remaining -= len(chunk)
            self.close_connection = True
            self._error(
                413, "body_too_large", f"body exceeds {self.max_body_bytes} bytes"
            )
            return
        body = self.rfile.read(n)
        try:
            payload = json.loads(body)
        except json.JSONDecodeError as exc:
            self._error(400, "invalid_json", str(exc))
            return
        if not isinstance(payload, dict) or not isinstance(payload.get("text"), str):
            self._error(400, "missing_text", 'body must be {"text": "..."}')
            return
        title = payload.get("title")
        if title is not None and not isinstance(title, str):
            self._error(400, "bad_title", "title must be a string")
            return
        try:
            config = _config_from_request(payload.get("config") or {})
        except (ValueError, TypeError) as exc:
            self._error(400, "bad_config", str(exc))
            return
        try:
            result = analyze(payload["text"], title=title, config=config)
        except AnalyzeError as exc:
            self._error(400, "unanalyzable", str(exc))
            return
        except SirenlessError as exc:
            self._error(500, "engine_error", str(exc))
            return
        analysis_id = self.store.put(result)
        self._send_json(201, {"id": analysis_id})

    def do_GET(self):  # noqa: N802
        path = self.path.split("?", 1)[0]
        if path == "/api/health":
            self._send_json(200, {"status": "ok"})
            return
        if path.rstrip("/") == "/api/analyses":
            self._send_json(200, {"analyses": self.store.list()})
            return
        if path.startswith("/api/analyses/"):
            analysis_id = path[len("/api/analyses/"):].strip("/")
            raw = self.store.get_raw(analysis_id) if analysis_id else None
            if raw is None:
                self._error(404, "not_found", f"no analysis {analysis_id!r}")
                return
            self._send(200, raw, "application/json; charset=utf-8")
            return
        if path.startswith("/api/"):
            self._error(404, "not_found", f"unknown endpoint {path}")
            return
        self._serve_static(path)

    def _serve_static(self, path: str) -> None:
        if self.static_dir is None:
            self._error(404, "not_found", "no static assets configured")
            return
        rel = path.lstrip("/") or "index.html"
        full = os.path.realpath(os.path.join(self.static_dir, rel))
        root = os.path.realpath(self.static_dir)
        if not full.startswith(root + os.sep) and full != root:
            self._error(404, "not_found", "path outside static dir")
            return
        if os.path.isdir(full):
            full = os.path.join(full, "index.html")
        if not os.path.isfile(full):
            self._error(404, "not_found", f"no such file {rel}")
            return
        ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
        with open(full, "rb") as fh:
            self._send(200, fh.read(), ctype)


def make_server(
    port: int,
    store: AnalysisStore,
    static_dir: str | None = None,
    bind: str = "127.0.0.1",
    max_body_bytes: int = MAX_BODY_BYTES,
) -> ThreadingHTTPServer:
    """Build (but do not start) the service; port 0 picks a free port."""
    handler = type(
        "BoundHandler",
        (AnalysisRequestHandler,),
        {"store": store, "static_dir": static_dir, "max_body_bytes": max_body_bytes},
    )
    return ThreadingHTTPServer((bind, port), handler)


def serve(
    port: int,
    store: AnalysisStore,
    static_dir: str | None = None,
    bind: str = "127.0.0.1",
) -> None:
    """Run the service until interrupted."""
    httpd = make_server(port, store, static_dir, bind)
    host, actual_port = httpd.server_address[:2]
    print(f"sirenless serving on http://{host}:{actual_port}/ (data: {store.directory})")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()


def start_background(
    store: AnalysisStore, static_dir: str | None = None, bind: str = "127.0.0.1"
) -> tuple[ThreadingHTTPServer, threading.Thread, int]:
    """Start the service on a free port in a daemon thread (for tests)."""
    httpd = make_server(0, store, static_dir, bind)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    return httpd, thread, httpd.server_address[1]
