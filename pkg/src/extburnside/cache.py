"""On-disk cache for computed tables.

Cache entries are json files keyed by a group fingerprint and a kind.  The
fingerprint hashes the degree and the sorted element list, so two specs that
generate the same permutation group share entries.  Entries record the
toolkit version and are ignored (and rewritten) on any mismatch or decode
error; corruption is reported on stderr but never fatal.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys

from . import __version__
from .groups import Group

ENTRY_VERSION = "1"

KINDS = ("subgroup-table", "multiplier", "ext-table")


def group_fingerprint(G: Group) -> str:
    h = hashlib.sha256()
    h.update(f"{G.degree}:".encode())
    for x in G.elements:
        h.update(",".join(str(i) for i in x).encode())
        h.update(b";")
    return h.hexdigest()


class Cache:
    """A cache directory; None-safe wrapper functions live on the instance."""

    def __init__(self, root: str):
        self.root = root

    def _path(self, kind: str, fingerprint: str) -> str:
        return os.path.join(self.root, f"{fingerprint}-{kind}.json")

    def read(self, kind: str, fingerprint: str):
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        path = self._path(kind, fingerprint)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                entry = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
            print(f"ebr: ignoring corrupt cache entry {path}: {exc}", file=sys.stderr)
            return None
        if (
            not isinstance(entry, dict)
            or entry.get("entry_version") != ENTRY_VERSION
            or entry.get("toolkit") != __version__
            or entry.get("kind") != kind
            or entry.get("group") != fingerprint
            or "payload" not in entry
        ):
            return None
        return entry["payload"]

    def write(self, kind: str, fingerprint: str, payload) -> None:
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        os.makedirs(self.root, exist_ok=True)
        entry = {
            "entry_version": ENTRY_VERSION,
            "toolkit": __version__,
            "kind": kind,
            "group": fingerprint,
            "payload": payload,
        }
        path = self._path(kind, fingerprint)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(entry, fh, sort_keys=True, separators=(",", ":"))
            fh.write("\n")
        os.replace(tmp, path)


def resolve_cache(cache_dir: str | None, no_cache: bool) -> Cache | None:
    """--cache beats EBR_CACHE beats nothing; --no-cache beats everything."""
    if no_cache:
        return None
    if cache_dir:
        return Cache(cache_dir)
    env = os.environ.get("EBR_CACHE")
    if env:
        return Cache(env)
    return None
