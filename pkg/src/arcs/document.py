"""JSON interchange for finished systems.

A vertex is ``[a, b]`` with canonical residues or the string ``"inf"``; a
cycle is a list of vertices and a class a list of cycles.  Output uses sorted
keys and no insignificant whitespace, so serialize -> parse -> serialize is
byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from arcs.core import INF, Point
from arcs.lemma import ArcsSystem

FORMAT_VERSION = 1
_KEYS = {"format_version", "k", "v", "half_parallel_class", "almost_parallel_classes"}


class DocumentError(ValueError):
    """Malformed JSON or a schema violation; ``path`` locates the first problem."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


def _vertex_out(x) -> Any:
    return "inf" if x is INF else [x.a, x.b]


def to_dict(system: ArcsSystem) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "k": system.k,
        "v": system.v,
        "half_parallel_class": [[_vertex_out(x) for x in c] for c in system.half_parallel_class],
        "almost_parallel_classes": [
            [[_vertex_out(x) for x in c] for c in cls] for cls in system.almost_parallel_classes
        ],
    }


def serialize(system: ArcsSystem) -> str:
    return json.dumps(to_dict(system), sort_keys=True, separators=(",", ":")) + "\n"


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _vertex_in(node: Any, k: int, path: str):
    if node == "inf":
        return INF
    if not isinstance(node, list) or len(node) != 2 or not all(_is_int(t) for t in node):
        raise DocumentError(path, 'vertex must be "inf" or a pair [a, b] of integers')
    a, b = node
    if not 0 <= a < k:
        raise DocumentError(path, f"residue a={a} not in [0, {k})")
    if not 0 <= b < 4:
        raise DocumentError(path, f"level b={b} not in [0, 4)")
    return Point(a, b)


def _class_in(node: Any, k: int, path: str) -> tuple:
    if not isinstance(node, list):
        raise DocumentError(path, "class must be a list of cycles")
    cycles = []
    for i, c in enumerate(node):
        cpath = f"{path}[{i}]"
        if not isinstance(c, list):
            raise DocumentError(cpath, "cycle must be a list of vertices")
        cycles.append(tuple(_vertex_in(x, k, f"{cpath}[{j}]") for j, x in enumerate(c)))
    return tuple(cycles)


def from_dict(doc: Any) -> ArcsSystem:
    """Schema-check a decoded document.  Structure only: no design properties."""
    if not isinstance(doc, dict):
        raise DocumentError("$", "document must be a JSON object")
    for key in sorted(_KEYS):
        if key not in doc:
            raise DocumentError("$", f"missing key {key!r}")
    extra = sorted(set(doc) - _KEYS)
    if extra:
        raise DocumentError(f"$.{extra[0]}", "unknown key")
    if doc["format_version"] != FORMAT_VERSION or not _is_int(doc["format_version"]):
        raise DocumentError("$.format_version", f"expected {FORMAT_VERSION}, got {doc['format_version']!r}")
    k = doc["k"]
    if not _is_int(k) or k < 1:
        raise DocumentError("$.k", f"expected a positive integer, got {k!r}")
    if doc["v"] != 4 * k + 1 or not _is_int(doc["v"]):
        raise DocumentError("$.v", f"expected 4k+1 = {4 * k + 1}, got {doc['v']!r}")
    half = _class_in(doc["half_parallel_class"], k, "$.half_parallel_class")
    almost_node = doc["almost_parallel_classes"]
    if not isinstance(almost_node, list):
        raise DocumentError("$.almost_parallel_classes", "must be a list of classes")
    almost = tuple(_class_in(c, k, f"$.almost_parallel_classes[{i}]") for i, c in enumerate(almost_node))
    return ArcsSystem(k, almost, half)


def parse(text: str) -> ArcsSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from exc
    return from_dict(doc)


def render_text(system: ArcsSystem) -> str:
    """Human-readable listing; presentation only, not parseable."""

    def cyc(c) -> str:
        return " ".join("inf" if x is INF else f"({x.a},{x.b})" for x in c)

    out = [f"k={system.k} v={system.v}", "half-parallel class:"]
    out.extend(f"  {cyc(c)}" for c in system.half_parallel_class)
    for i, cls in enumerate(system.almost_parallel_classes):
        out.append(f"almost parallel class {i}:")
        out.extend(f"  {cyc(c)}" for c in cls)
    return "\n".join(out) + "\n"
