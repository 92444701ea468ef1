"""JSON framework documents.

Format (UTF-8)::

    {"dim": 2,
     "vertices": [{"id": 1, "coords": ["0", "2"]}, ...],
     "edges": [[1, 2], ...],
     "base": [1, 4, 5]}          # optional

Coordinates are rational strings ("-21/20") or exact decimals ("0.25").
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import Configuration, Framework, Graph, format_rational, to_rational


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class FrameworkDocument:
    framework: Framework
    base: tuple | None = None

    def to_dict(self) -> dict:
        f = self.framework
        out = {
            "dim": f.dim,
            "vertices": [
                {"id": v, "coords": [format_rational(c) for c in f.config[v]]} for v in f.graph.vertex_ids
            ],
            "edges": [list(e) for e in f.graph.edges],
        }
        if self.base is not None:
            out["base"] = list(self.base)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def from_dict(cls, data) -> "FrameworkDocument":
        if not isinstance(data, dict):
            raise DocumentError("document must be a JSON object")
        try:
            dim = data["dim"]
            vertices = data["vertices"]
            edges = data.get("edges", [])
        except KeyError as exc:
            raise DocumentError(f"missing key {exc.args[0]!r}") from None
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise DocumentError("dim must be a positive integer")
        points = {}
        for entry in vertices:
            try:
                vid = entry["id"]
                coords = [_parse_coord(c) for c in entry["coords"]]
            except (KeyError, TypeError) as exc:
                raise DocumentError(f"malformed vertex entry {entry!r}") from exc
            if not isinstance(vid, int) or isinstance(vid, bool):
                raise DocumentError(f"vertex id must be an integer, got {vid!r}")
            if vid in points:
                raise DocumentError(f"duplicate vertex id {vid}")
            if len(coords) != dim:
                raise DocumentError(f"vertex {vid} has {len(coords)} coordinates, expected {dim}")
            points[vid] = coords
        try:
            pairs = [(int(a), int(b)) for a, b in edges]
            graph = Graph(points, pairs)
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"bad edge list: {exc}") from exc
        base = data.get("base")
        if base is not None:
            if not all(isinstance(v, int) and v in points for v in base):
                raise DocumentError("base must list existing vertex ids")
            base = tuple(base)
        return cls(Framework(graph, Configuration(dim, points)), base)

    @classmethod
    def loads(cls, text: str) -> "FrameworkDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def read(cls, path) -> "FrameworkDocument":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise DocumentError(f"cannot read {path}: {exc}") from exc
        return cls.loads(text)


def _parse_coord(value):
    if isinstance(value, float):
        # JSON numbers: take the decimal literal at face value
        value = repr(value)
    try:
        return to_rational(value)
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc)) from exc
