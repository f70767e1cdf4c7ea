"""Content-addressed JSON result cache.

Entries are keyed by a sha256 of a canonical JSON description (schema
version, root system, weight, operation).  Writes are atomic (tmp file +
os.replace) and idempotent; corrupt entries are dropped with a warning and
recomputed.  The directory comes from SPINDLE_CACHE_DIR; caching is off
when the variable is unset.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile

SCHEMA_VERSION = 1


def cache_dir():
    return os.environ.get("SPINDLE_CACHE_DIR") or None


def cache_key(operation, type_letter, rank, weight, extra=None):
    payload = {
        "schema": SCHEMA_VERSION,
        "operation": operation,
        "type": type_letter,
        "rank": rank,
        "weight": list(weight) if weight is not None else None,
        "extra": extra,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _path(directory, key):
    return os.path.join(directory, key + ".json")


def load(key):
    """Cached JSON value for key, or None on miss or corruption."""
    directory = cache_dir()
    if directory is None:
        return None
    path = _path(directory, key)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        return None
    except (ValueError, OSError) as exc:
        print(f"warning: dropping corrupt cache entry {path}: {exc}",
              file=sys.stderr)
        try:
            os.remove(path)
        except OSError:
            pass
        return None


def store(key, value):
    """Atomically write value under key; no-op without a cache directory."""
    directory = cache_dir()
    if directory is None:
        return
    os.makedirs(directory, exist_ok=True)
    path = _path(directory, key)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(value, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.remove(tmp)
        except OSError:
            pass
        raise


def cached(operation, type_letter, rank, weight, compute, extra=None):
    """Fetch-or-compute wrapper around load/store."""
    key = cache_key(operation, type_letter, rank, weight, extra)
    hit = load(key)
    if hit is not None:
        return hit
    value = compute()
    store(key, value)
    return value
