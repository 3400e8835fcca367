"""Generator text files and construction metadata sidecars.

Format: UTF-8 lines; each non-blank line that does not start with ``#`` is
one generator as whitespace-separated positive integers.  ``{}`` denotes
the empty set (legal as a generator; the closure absorbs it).
Constructions written with :func:`write_construction` get a JSON sidecar at
``<path>.meta.json`` recording what was built.
"""

from __future__ import annotations

import json
from pathlib import Path

from .constructions import ConstructionOutput
from .errors import ParseError
from .sets import FiniteSet


def parse_element(text: str, line: int = 1) -> FiniteSet:
    """One generator line -> FiniteSet, with strict token validation."""
    stripped = text.strip()
    if stripped == "{}":
        return FiniteSet()
    if not stripped:
        raise ParseError(line, "empty element")
    values: list[int] = []
    seen: set[int] = set()
    for token in stripped.split():
        try:
            value = int(token)
        except ValueError:
            raise ParseError(line, f"not an integer: {token!r}") from None
        if value < 1:
            raise ParseError(line, f"elements must be positive integers, got {value}")
        if value in seen:
            raise ParseError(line, f"duplicate element {value}")
        seen.add(value)
        values.append(value)
    return FiniteSet(values)


def parse_generators(text: str) -> list[FiniteSet]:
    """All generators of a file, file order preserved, duplicates dropped."""
    generators: list[FiniteSet] = []
    seen: set[FiniteSet] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        g = parse_element(stripped, lineno)
        if g not in seen:
            seen.add(g)
            generators.append(g)
    return generators


def read_generators(path: str | Path) -> list[FiniteSet]:
    return parse_generators(Path(path).read_text(encoding="utf-8"))


def generators_text(generators, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(str(g) for g in generators)
    return "\n".join(lines) + "\n"


def sidecar_path(path: str | Path) -> Path:
    return Path(str(path) + ".meta.json")


def write_construction(out: ConstructionOutput, path: str | Path) -> Path:
    """Write generator text to ``path`` and a JSON sidecar next to it."""
    path = Path(path)
    summary = ", ".join(f"{k}={v}" for k, v in sorted(out.params.items()))
    path.write_text(generators_text(out.generators, (f"{out.kind}: {summary}",)),
                    encoding="utf-8")
    meta = {
        "kind": out.kind,
        "params": out.params,
        "ground_size": out.ground_size,
        "generators": [
            {"set": str(g), "label": out.labels[i] if out.labels else None}
            for i, g in enumerate(out.generators)
        ],
    }
    side = sidecar_path(path)
    side.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    return side


def read_construction_meta(path: str | Path) -> dict:
    return json.loads(sidecar_path(path).read_text(encoding="utf-8"))
