"""Corpus manifests: ingest, name-based dedup, project split, test-line filters."""

from __future__ import annotations

import json
import logging
import math
import os
import re
from collections import Counter
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set

from .frontend.structure import ParsedFile
from .seeding import rng_for

log = logging.getLogger(__name__)

TRAIN = "train"
TEST = "test"
UNSPLIT = "unsplit"
EXTENSION = ".java"
DEFAULT_DUP_THRESHOLD = 100
FILTER_SUBSTRINGS = ("hashCode", "other")

_WS = re.compile(r"\s+")


@dataclass(frozen=True)
class FileEntry:
    path: str
    project: str
    dedup_key: str
    split: str = UNSPLIT


@dataclass
class CorpusManifest:
    entries: List[FileEntry]
    split_seed: Optional[int] = None
    split_ratio: Optional[float] = None
    skipped: int = 0
    removed_duplicates: int = 0

    def by_split(self, split: str) -> List[FileEntry]:
        return [e for e in self.entries if e.split == split]

    @property
    def projects(self) -> List[str]:
        return sorted({e.project for e in self.entries})


def dedup_key(path) -> str:
    p = Path(path)
    return f"{p.parent.name}/{p.name}"


def ingest(roots: Sequence, extension: str = EXTENSION) -> CorpusManifest:
    """One entry per source file under each project root, sorted by path.

    Raises
    ------
    FileNotFoundError
        If a root is missing or not a directory.
    """
    entries = []
    skipped = 0
    for root in roots:
        root = Path(root)
        if not root.is_dir() or not os.access(root, os.R_OK):
            raise FileNotFoundError(f"corpus root not readable: {root}")
        for dirpath, dirnames, filenames in os.walk(root):
            dirnames.sort()
            for name in filenames:
                if not name.endswith(extension):
                    continue
                full = Path(dirpath) / name
                if not os.access(full, os.R_OK):
                    skipped += 1
                    continue
                entries.append(FileEntry(str(full), root.name, dedup_key(full)))
    if skipped:
        log.warning("skipped %d unreadable files", skipped)
    entries.sort(key=lambda e: e.path)
    return CorpusManifest(entries, skipped=skipped)


def dedup(manifest: CorpusManifest) -> CorpusManifest:
    """Keep the lexicographically first entry for every parentDir/fileName key."""
    seen: Set[str] = set()
    kept = []
    for e in sorted(manifest.entries, key=lambda e: e.path):
        if e.dedup_key in seen:
            continue
        seen.add(e.dedup_key)
        kept.append(e)
    removed = len(manifest.entries) - len(kept)
    return replace(manifest, entries=kept, removed_duplicates=manifest.removed_duplicates + removed)


def split_by_project(manifest: CorpusManifest, ratio: float = 0.7, seed: int = 0) -> CorpusManifest:
    """Seeded project-level split; the first ceil(ratio * P) shuffled projects train."""
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"split ratio must lie in (0, 1), got {ratio}")
    projects = manifest.projects
    if len(projects) < 2:
        raise ValueError("need at least two projects to split")
    rng = rng_for(seed, "split")
    order = list(projects)
    rng.shuffle(order)
    n_train = math.ceil(ratio * len(order))
    # guard against float noise such as 0.7 * 10 = 7.000000000000001
    if abs(ratio * len(order) - round(ratio * len(order))) < 1e-9:
        n_train = round(ratio * len(order))
    train = set(order[:n_train])
    entries = [replace(e, split=TRAIN if e.project in train else TEST) for e in manifest.entries]
    return replace(manifest, entries=entries, split_seed=seed, split_ratio=ratio)


# -- test-line filtering ---------------------------------------------------------

def normalize_line(text: str) -> str:
    return _WS.sub(" ", text.strip())


def line_counts(sources: Iterable[str]) -> Counter:
    """Occurrences of each normalized non-blank line across ``sources``."""
    counts: Counter = Counter()
    for src in sources:
        counts.update(n for n in (normalize_line(l) for l in src.splitlines()) if n)
    return counts


def filter_test_lines(
    source: str,
    global_line_counts: Dict[str, int],
    threshold: float = DEFAULT_DUP_THRESHOLD,
    substrings: Sequence[str] = FILTER_SUBSTRINGS,
) -> Set[int]:
    """1-based line numbers to exclude from transformation and scoring.

    A line is excluded when its normalized text occurs more than
    ``threshold`` times in ``global_line_counts`` or when the raw line
    contains one of ``substrings`` (case-sensitive).
    """
    excluded = set()
    for i, raw in enumerate(source.splitlines(), start=1):
        if any(s in raw for s in substrings):
            excluded.add(i)
            continue
        norm = normalize_line(raw)
        if norm and global_line_counts.get(norm, 0) > threshold:
            excluded.add(i)
    return excluded


def strip_equals_hashcode_methods(parsed: ParsedFile) -> Set[int]:
    """Header token indices of methods named exactly equals or hashCode.

    The shuffle generator never touches these (it applies the same exact-name
    rule); the returned set lets callers report or double-check exclusions.
    """
    return {m.header_start for m in parsed.methods if m.name in ("equals", "hashCode")}


# -- persistence -------------------------------------------------------------------

_FIELDS = ("path", "project", "dedup_key", "split")


def write_manifest(manifest: CorpusManifest, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        header = {
            "_meta": {
                "split_seed": manifest.split_seed,
                "split_ratio": manifest.split_ratio,
                "skipped": manifest.skipped,
                "removed_duplicates": manifest.removed_duplicates,
            }
        }
        fh.write(json.dumps(header) + "\n")
        for e in manifest.entries:
            d = asdict(e)
            fh.write(json.dumps({k: d[k] for k in _FIELDS}) + "\n")


def read_manifest(path) -> CorpusManifest:
    entries = []
    meta: dict = {}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if "_meta" in rec:
                meta = rec["_meta"]
                continue
            try:
                entries.append(FileEntry(*(rec[k] for k in _FIELDS)))
            except KeyError as exc:
                raise ValueError(f"{path}:{n}: manifest record lacks {exc}") from exc
    return CorpusManifest(
        entries,
        meta.get("split_seed"),
        meta.get("split_ratio"),
        meta.get("skipped", 0),
        meta.get("removed_duplicates", 0),
    )


def read_source(entry: FileEntry) -> str:
    return Path(entry.path).read_text(encoding="utf-8", errors="replace")
