"""The standard corpus of small rings."""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .ring import FiniteRing
from .ringspec import format_ring, parse_ring_text

L2F2 = "matrix lower 2 gf 2"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    constructor: str

    @property
    def filename(self) -> str:
        return f"{self.name}.ring"

    def build(self) -> FiniteRing:
        return parse_ring_text(self.constructor, f"<corpus {self.name}>")


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("z4", "cyclic 4"),
    CorpusEntry("z6", "cyclic 6"),
    CorpusEntry("z8", "cyclic 8"),
    CorpusEntry("z9", "cyclic 9"),
    CorpusEntry("z12", "cyclic 12"),
    CorpusEntry("f2", "gf 2"),
    CorpusEntry("f3", "gf 3"),
    CorpusEntry("f4", "gf 4"),
    CorpusEntry("f2xf2", "product gf 2 ; gf 2"),
    CorpusEntry("z2xz3", "product cyclic 2 ; cyclic 3"),
    CorpusEntry("m2_f2", "matrix full 2 gf 2"),
    CorpusEntry("l2_f2", L2F2),
    CorpusEntry("u2_f2", "matrix upper 2 gf 2"),
    CorpusEntry("l2_f3", "matrix lower 2 gf 3"),
    CorpusEntry("l2_f2xl2_f2", f"product {L2F2} ; {L2F2}"),
)

BY_NAME = {e.name: e for e in CORPUS}

_BUILT: dict[str, FiniteRing] = {}


def corpus_ring(name: str) -> FiniteRing:
    """Constructor-built corpus ring (structure attached); shared within the process."""
    if name not in _BUILT:
        _BUILT[name] = BY_NAME[name].build()
    return _BUILT[name]


def corpus_rings(max_size: int | None = None) -> list[tuple[str, FiniteRing]]:
    out = []
    for e in CORPUS:
        R = corpus_ring(e.name)
        if max_size is None or R.size <= max_size:
            out.append((e.name, R))
    return out


def build_corpus(directory: str | os.PathLike) -> list[tuple[CorpusEntry, FiniteRing, Path]]:
    """Write one table file per corpus ring; returns entries, rings and paths."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    out = []
    for e in CORPUS:
        R = corpus_ring(e.name)
        path = d / e.filename
        text = f"# {e.name}: {e.constructor}\n" + format_ring(R)
        if not path.exists() or path.read_text() != text:
            path.write_text(text)
        out.append((e, R, path))
    return out
