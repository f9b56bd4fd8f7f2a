"""Optional on-disk cache for enumerated groups and lattices.

Activated by the COXSHUFFLE_CACHE environment variable (a directory).
Cache files carry a format version and a SHA-256 checksum of the payload;
stale or corrupted files are silently rebuilt.
"""

from __future__ import annotations

import hashlib
import os
import pickle
from pathlib import Path
from typing import Callable, Optional

FORMAT_VERSION = "coxshuffle-cache-1"


def cache_dir() -> Optional[Path]:
    d = os.environ.get("COXSHUFFLE_CACHE")
    if not d:
        return None
    path = Path(d)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _path_for(key: str) -> Optional[Path]:
    d = cache_dir()
    if d is None:
        return None
    safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in key)
    return d / f"{safe}.pkl"


def load(key: str):
    path = _path_for(key)
    if path is None or not path.exists():
        return None
    try:
        with open(path, "rb") as fh:
            wrapper = pickle.load(fh)
        if wrapper.get("version") != FORMAT_VERSION:
            return None
        payload = wrapper["payload"]
        if hashlib.sha256(payload).hexdigest() != wrapper["sha256"]:
            return None
        return pickle.loads(payload)
    except Exception:
        return None


def store(key: str, value) -> None:
    path = _path_for(key)
    if path is None:
        return
    payload = pickle.dumps(value, protocol=pickle.HIGHEST_PROTOCOL)
    wrapper = {
        "version": FORMAT_VERSION,
        "sha256": hashlib.sha256(payload).hexdigest(),
        "payload": payload,
    }
    tmp = path.with_suffix(".tmp")
    with open(tmp, "wb") as fh:
        pickle.dump(wrapper, fh, protocol=pickle.HIGHEST_PROTOCOL)
    tmp.replace(path)


def cached(key: str, builder: Callable):
    value = load(key)
    if value is None:
        value = builder()
        store(key, value)
    return value
