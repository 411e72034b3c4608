"""JSON file formats for graphs, list assignments and colourings.

Documents are written with sorted keys, UTF-8 and a trailing newline so
identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping, Sequence

from .colouring import ListAssignment
from .embedding import RotationSystem
from .exceptions import DefcolorError

GRAPH_FORMAT = "defcolor-graph/1"
LISTS_FORMAT = "defcolor-lists/1"
COLOURING_FORMAT = "defcolor-colouring/1"


class FormatError(DefcolorError, ValueError):
    """A document does not match its schema; ``field`` names the offending key."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


def dumps(doc: Mapping) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n"


def _loads(text: str, source: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise FormatError(f"{source}: top level must be an object")
    return doc


def _expect_format(doc: dict, expected: str, source: str) -> None:
    if doc.get("format") != expected:
        raise FormatError(f"{source}: field 'format' must be {expected!r}, got {doc.get('format')!r}",
                          "format")


def _int_rows(value, name: str, source: str) -> list[list[int]]:
    if not isinstance(value, list):
        raise FormatError(f"{source}: field '{name}' must be a list of lists", name)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise FormatError(f"{source}: field '{name}[{i}]' must be a list of integers", f"{name}[{i}]")
        rows.append(row)
    return rows


# -- graphs ----------------------------------------------------------------

def graph_to_doc(rs: RotationSystem) -> dict:
    doc = {"format": GRAPH_FORMAT, "n": rs.n, "rotations": [list(r) for r in rs.rotation]}
    if rs.signs:
        doc["signs"] = {f"{u}-{v}": s for (u, v), s in rs.signs.items()}
    return doc


def graph_from_doc(doc: dict, source: str = "<graph>") -> RotationSystem:
    _expect_format(doc, GRAPH_FORMAT, source)
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError(f"{source}: field 'n' must be a nonnegative integer", "n")
    rotations = _int_rows(doc.get("rotations"), "rotations", source)
    if len(rotations) != n:
        raise FormatError(f"{source}: field 'rotations' has {len(rotations)} rows, n is {n}", "rotations")
    signs = {}
    raw = doc.get("signs", {})
    if not isinstance(raw, dict):
        raise FormatError(f"{source}: field 'signs' must be an object", "signs")
    for key, value in raw.items():
        try:
            u, v = (int(x) for x in key.split("-"))
        except ValueError:
            raise FormatError(f"{source}: field 'signs' has malformed key {key!r}", f"signs.{key}")
        if value not in (1, -1):
            raise FormatError(f"{source}: field 'signs.{key}' must be 1 or -1", f"signs.{key}")
        signs[(u, v)] = value
    try:
        return RotationSystem(rotations, signs)
    except DefcolorError as exc:
        raise FormatError(f"{source}: field 'rotations': {exc}", "rotations")


# -- lists -----------------------------------------------------------------

def lists_to_doc(lists: ListAssignment, t: int | None = None) -> dict:
    return {"format": LISTS_FORMAT, "t": lists.t if t is None else t,
            "lists": [sorted(lst) for lst in lists]}


def lists_from_doc(doc: dict, source: str = "<lists>") -> tuple[ListAssignment, int]:
    _expect_format(doc, LISTS_FORMAT, source)
    t = doc.get("t")
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise FormatError(f"{source}: field 't' must be a nonnegative integer", "t")
    rows = _int_rows(doc.get("lists"), "lists", source)
    return ListAssignment(rows), t


# -- colourings ------------------------------------------------------------

def colouring_to_doc(colouring: Mapping[int, int] | Sequence[int]) -> dict:
    if isinstance(colouring, Mapping):
        colouring = [colouring[v] for v in range(len(colouring))]
    return {"format": COLOURING_FORMAT, "colours": list(colouring)}


def colouring_from_doc(doc: dict, source: str = "<colouring>") -> dict[int, int]:
    _expect_format(doc, COLOURING_FORMAT, source)
    colours = doc.get("colours")
    if not isinstance(colours, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in colours):
        raise FormatError(f"{source}: field 'colours' must be a list of integers", "colours")
    return dict(enumerate(colours))


# -- files -----------------------------------------------------------------

def write(path, doc: Mapping) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def read_doc(path) -> dict:
    return _loads(Path(path).read_text(encoding="utf-8"), str(path))


def read_graph(path) -> RotationSystem:
    return graph_from_doc(read_doc(path), str(path))


def read_lists(path) -> tuple[ListAssignment, int]:
    return lists_from_doc(read_doc(path), str(path))


def read_colouring(path) -> dict[int, int]:
    return colouring_from_doc(read_doc(path), str(path))
