"""On-disk cache of descent-class matrices, one JSON file per type."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from filelock import FileLock

from .coxeter import make_group, parse_type
from .spectra import (DescentClassMatrix, build_descent_class_matrix, cache_key,
                      dump_descent_class_matrix)

ENV_VAR = "GARSIDE_CACHE_DIR"


def cache_dir(override: str | os.PathLike | None = None) -> Path:
    if override:
        return Path(override)
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    return Path.home() / ".cache" / "garside"


class MatrixCache:
    def __init__(self, root: str | os.PathLike | None = None, enabled: bool = True,
                 allow_huge: bool = False):
        self.root = cache_dir(root)
        self.enabled = enabled
        self.allow_huge = allow_huge
        self.hits = 0
        self.misses = 0

    def _lock(self) -> FileLock:
        self.root.mkdir(parents=True, exist_ok=True)
        return FileLock(str(self.root / ".lock"))

    def path(self, tag: str, rank: int | None = None) -> Path:
        return self.root / cache_key(tag, rank)

    def get(self, tag: str, rank: int | None = None) -> DescentClassMatrix:
        family, n = parse_type(tag, rank)
        if not self.enabled:
            return build_descent_class_matrix(make_group(family, n, allow_huge=self.allow_huge))
        path = self.path(family, n)
        with self._lock():
            if path.exists():
                self.hits += 1
                return DescentClassMatrix.from_json(_read_json(path))
            self.misses += 1
            adjp = build_descent_class_matrix(make_group(family, n, allow_huge=self.allow_huge))
            _atomic_write(path, dump_descent_class_matrix(adjp))
            return adjp

    __call__ = get

    def entries(self) -> list[Path]:
        if not self.root.exists():
            return []
        return sorted(self.root.glob("adjp-*.json"))

    def clear(self) -> int:
        with self._lock():
            removed = 0
            for p in self.entries():
                p.unlink()
                removed += 1
            return removed


def _read_json(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)
