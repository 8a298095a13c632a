"""Directory-backed analysis store: one JSON file per analysis plus an
index file. Writes go to a temp file and rename into place; the index
is updated under a lock so concurrent analyses cannot corrupt it."""

from __future__ import annotations

import json
import os
import tempfile
import threading
import time

from .errors import StoreError
from .pipeline import canonical_json

INDEX_FILE = "index.json"


class AnalysisStore:
    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, analysis_id: str) -> str:
        if not analysis_id or "/" in analysis_id or analysis_id.startswith("."):
            raise StoreError(f"invalid analysis id {analysis_id!r}")
        return os.path.join(self.directory, f"{analysis_id}.json")

    def _write_atomic(self, path: str, content: str) -> None:
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(content)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def put(self, result: dict) -> str:
        """Store an analysis under its content-hash id; re-analysis of the
        same text overwrites losslessly and keeps its original slot."""
        analysis_id = result["id"]
        path = self._path(analysis_id)
        self._write_atomic(path, canonical_json(result))
        with self._lock:
            index = self._read_index()
            existing = next(
                (e for e in index if e["id"] == analysis_id), None
            )
            if existing is None:
                index.append(
                    {
                        "id": analysis_id,
                        "title": result.get("title"),
                        "created": time.time(),
                    }
                )
            else:
                existing["title"] = result.get("title")
            index.sort(key=lambda e: (e["created"], e["id"]))
            self._write_atomic(
                os.path.join(self.directory, INDEX_FILE),
                json.dumps(index, ensure_ascii=False, indent=1) + "\n",
            )
        return analysis_id

    def get(self, analysis_id: str) -> dict | None:
        path = self._path(analysis_id)
        try:
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
        except FileNotFoundError:
            return None
        except json.JSONDecodeError as exc:
            raise StoreError(f"corrupt analysis file {path}: {exc}") from exc

    def get_raw(self, analysis_id: str) -> bytes | None:
        """Stored bytes, exactly as written."""
        try:
            with open(self._path(analysis_id), "rb") as fh:
                return fh.read()
        except FileNotFoundError:
            return None

    def list(self) -> list[dict]:
        """Index entries sorted by creation time."""
        with self._lock:
            return self._read_index()

    def _read_index(self) -> list[dict]:
        path = os.path.join(self.directory, INDEX_FILE)
        try:
            with open(path, encoding="utf-8") as fh:
                index = json.load(fh)
        except FileNotFoundError:
            return []
        except json.JSONDecodeError as exc:
            raise StoreError(f"corrupt index {path}: {exc}") from exc
        if not isinstance(index, list):
            raise StoreError(f"corrupt index {path}: expected a list")
        return index
