"""On-disk response cache keyed by request digest.

One JSON file per entry, written via temp-file-then-rename so concurrent
writers never leave a torn entry; an in-memory index avoids re-reading.
"""

from __future__ import annotations

import json
import os
import time
from pathlib import Path


class ResponseCache:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._index: dict[str, str] = {}

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> str | None:
        if key in self._index:
            return self._index[key]
        path = self._path(key)
        if not path.exists():
            return None
        entry = json.loads(path.read_text(encoding="utf-8"))
        response = entry["response"]
        self._index[key] = response
        return response

    def put(self, key: str, response: str) -> None:
        entry = {"key": key, "response": response, "timestamp": time.time()}
        temp = self._path(key).with_suffix(f".tmp.{os.getpid()}")
        temp.write_text(json.dumps(entry, ensure_ascii=False), encoding="utf-8")
        os.replace(temp, self._path(key))
        self._index[key] = response

    def __len__(self) -> int:
        return len(list(self.directory.glob("*.json")))
