"""
graph/edgelist.py
-----------------
Lectura y escritura del formato de lista de aristas.

Formato:
    # comentario (cualquier línea que empiece con '#')
    n e
    u v        (e líneas, índices 0..n-1 separados por espacios)

Los errores indican el número de línea (empezando en 1).
"""

from __future__ import annotations

from pathlib import Path

from resolvedim.core.errors import (
    EdgeListFormatError,
    InvalidVertex,
    SelfLoopRejected,
    UsageError,
)
from resolvedim.graph.operations import build_graph
from resolvedim.models.models import Graph


def _ints(line: str, lineno: int, expected: int) -> list[int]:
    parts = line.split()
    if len(parts) != expected:
        raise EdgeListFormatError(
            f"línea {lineno}: se esperaban {expected} enteros, se encontró {line.strip()!r}"
        )
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise EdgeListFormatError(f"línea {lineno}: valor no entero en {line.strip()!r}")


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    last_lineno = 0

    for lineno, line in enumerate(text.splitlines(), start=1):
        last_lineno = lineno
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue

        if header is None:
            n, e = _ints(stripped, lineno, 2)
            if n < 0 or e < 0:
                raise EdgeListFormatError(f"línea {lineno}: cabecera con valores negativos")
            header = (n, e)
            continue

        u, v = _ints(stripped, lineno, 2)
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"línea {lineno}: arista ({u}, {v}) fuera de rango para n={n}")
        if u == v:
            raise SelfLoopRejected(f"línea {lineno}: lazo rechazado en el vértice {u}")
        edges.append((u, v))

    if header is None:
        raise EdgeListFormatError("línea 1: falta la cabecera 'n e'")
    if len(edges) != header[1]:
        raise EdgeListFormatError(
            f"línea {last_lineno}: la cabecera declara {header[1]} aristas pero hay {len(edges)}"
        )
    return build_graph(header[0], edges)


def read_edge_list(path: str | Path) -> Graph:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"No se pudo leer {path}: {exc.strerror or exc}")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        lineno = data.count(b"\n", 0, exc.start) + 1
        raise EdgeListFormatError(f"línea {lineno}: {path} no es texto UTF-8 válido")
    return parse_edge_list(text)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str | Path) -> None:
    try:
        Path(path).write_text(format_edge_list(g), encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"No se pudo escribir {path}: {exc.strerror or exc}")
