"""Text cache files guarded by a sha256 sidecar; anything that fails to verify is rebuilt."""

import hashlib
from pathlib import Path


def _digest(text):
    return hashlib.sha256(text.encode()).hexdigest()


def read_verified(path):
    """Return the cached text, or None when missing or corrupt."""
    path = Path(path)
    side = path.with_name(path.name + ".sha256")
    try:
        text = path.read_text()
        if side.read_text().strip() != _digest(text):
            return None
    except (OSError, UnicodeDecodeError):
        return None
    return text


def write_verified(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    path.with_name(path.name + ".sha256").write_text(_digest(text) + "\n")


def cached_text(path, build, parse, dump):
    """parse(cached text) if it verifies and parses, else build() and store dump(obj)."""
    if path is None:
        return build()
    text = read_verified(path)
    if text is not None:
        try:
            return parse(text)
        except (ValueError, IndexError, KeyError):
            pass
    obj = build()
    write_verified(path, dump(obj))
    return obj
