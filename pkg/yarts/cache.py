"""
On-disk result cache.

Exhaustive long-line searches are deterministic and slow, so their results
are pickled under a key derived from the defining data. The cache lives in
$YARTS_CACHE_DIR, or /tmp/yarts-cache where there is a /tmp.
"""

import hashlib
import os
import os.path
import pickle
import sys

_ENABLED = True


def set_enabled(enabled):
    """Switch the cache on or off for this process."""
    global _ENABLED
    _ENABLED = enabled


def _get_cache_root():
    if sys.platform in ("freebsd", "linux", "darwin"):
        return "/tmp"
    else:
        return os.getcwd()


def _get_cache_dir():
    cache_dir = os.environ.get("YARTS_CACHE_DIR") or os.path.join(
        _get_cache_root(), "yarts-cache"
    )
    os.makedirs(cache_dir, exist_ok=True)
    return cache_dir


def _get_cache_file(key):
    return os.path.join(_get_cache_dir(), f"{key}.pkl")


def cache_key(prefix, *parts):
    """Hash byte strings and reprs into a cache key."""
    digest = hashlib.sha256()
    for part in parts:
        digest.update(part if isinstance(part, bytes) else repr(part).encode())
    return f"{prefix}-{digest.hexdigest()[:24]}"


def get_cache(key):
    if not _ENABLED:
        return None
    try:
        with open(_get_cache_file(key), "rb") as f:
            return pickle.load(f)
    except (FileNotFoundError, EOFError, pickle.UnpicklingError):
        return None


def set_cache(key, value):
    if not _ENABLED:
        return
    with open(_get_cache_file(key), "wb") as f:
        pickle.dump(value, f, protocol=pickle.HIGHEST_PROTOCOL)
