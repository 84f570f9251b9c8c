"""Content-addressed JSON result cache.

Entries live in ``$HITPROB_CACHE/<sha256 of key>.json`` and are written to a
temporary file first, then renamed into place.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Callable

log = logging.getLogger(__name__)

ENV_VAR = "HITPROB_CACHE"
FORMAT_VERSION = 1


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(self, directory: str | Path | None = None, enabled: bool = True):
        if directory is None:
            directory = os.environ.get(ENV_VAR) or None
        self.directory = Path(directory) if directory else None
        self.enabled = enabled and self.directory is not None

    def path_for(self, key: dict) -> Path:
        assert self.directory is not None
        digest = hashlib.sha256(_dumps({"v": FORMAT_VERSION, "key": key}).encode()).hexdigest()
        return self.directory / f"{digest}.json"

    def get(self, key: dict) -> Any | None:
        if not self.enabled:
            return None
        path = self.path_for(key)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text())
            value = entry["value"]
            if entry.get("key") != key or entry.get("sha256") != hashlib.sha256(_dumps(value).encode()).hexdigest():
                raise ValueError("checksum or key mismatch")
        except (ValueError, KeyError, TypeError, OSError) as exc:
            log.warning("discarding corrupt cache entry %s (%s); recomputing", path.name, exc)
            return None
        return value

    def put(self, key: dict, value: Any) -> None:
        if not self.enabled:
            return
        assert self.directory is not None
        self.directory.mkdir(parents=True, exist_ok=True)
        body = _dumps({"key": key, "value": value, "sha256": hashlib.sha256(_dumps(value).encode()).hexdigest()})
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(body)
            os.replace(tmp, self.path_for(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, key: dict, compute: Callable[[], Any]) -> Any:
        hit = self.get(key)
        if hit is not None:
            return hit
        value = compute()
        # round-trip so fresh and cached results are identical objects
        value = json.loads(_dumps(value))
        self.put(key, value)
        return value


def cache_get(key: dict, cache: ResultCache | None = None) -> Any | None:
    return (cache or ResultCache()).get(key)


def cache_put(key: dict, value: Any, cache: ResultCache | None = None) -> None:
    (cache or ResultCache()).put(key, value)
