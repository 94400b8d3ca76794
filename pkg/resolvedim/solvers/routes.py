"""
solvers/routes.py
-----------------
Comando `dim`: calcula una invariante sobre una familia o un archivo.

Ejemplos:
    resolvedim dim jfg:3,2 --invariant beta
    resolvedim dim grafo.txt --invariant sdim --method mmd --csv out.csv
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path

from resolvedim.core.errors import UsageError
from resolvedim.families.schemas import FamilySpec
from resolvedim.graph.edgelist import read_edge_list
from resolvedim.models.models import Graph
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.solvers.schemas import DimensionReport
from resolvedim.solvers.search import solve


def load_input(source: str) -> Graph:
    """Un archivo existente se lee como lista de aristas; si no, se interpreta como familia."""
    path = Path(source)
    if path.is_file():
        return read_edge_list(path)
    if ":" in source:
        return FamilySpec.parse(source).build()
    raise UsageError(f"No existe el archivo {source!r} ni es una familia válida (ej: jfg:3,2)")


def _print_report(report: DimensionReport, g: Graph) -> None:
    kind = report.invariant
    print(f"📐 {report.source} ({report.n_vertices} vértices)")
    print(f"   {kind.symbol} = {report.value}   [{kind.label}]")
    print(f"   testigo: {{{', '.join(str(v) for v in report.witness)}}}")
    if g.labels:
        print(f"   etiquetas: {'  '.join(g.label(v) for v in report.witness)}")
    print(f"   método: {report.method.label}, {report.nodes_explored} nodos, {report.elapsed_ms:.1f} ms")


def cmd_dim(args: argparse.Namespace) -> int:
    try:
        kind = InvariantKind.parse(args.invariant)
    except ValueError as e:
        raise UsageError(str(e))
    g = load_input(args.input)
    result = solve(g, kind, args.method, workers=args.threads)
    report = DimensionReport.from_result(args.input, g.vertex_count, result)
    _print_report(report, g)

    if args.csv:
        row = report.csv_row()
        try:
            with open(args.csv, "w", newline="", encoding="utf-8") as f:
                writer = csv.DictWriter(f, fieldnames=list(row), lineterminator="\n")
                writer.writeheader()
                writer.writerow(row)
        except OSError as e:
            raise UsageError(f"No se pudo escribir {args.csv}: {e.strerror or e}")
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "dim",
        help="Calcula β, ψ, sdim o β̂ de un grafo",
        description="Invariantes: beta (β), psi (ψ), sdim, adjdim (β̂)",
    )
    parser.add_argument("input", help="Archivo de lista de aristas o familia (ej: cp:4)")
    parser.add_argument("--invariant", required=True, help="beta | psi | sdim | adjdim")
    parser.add_argument("--method", default="auto", choices=["auto", "brute", "pruned", "mmd"])
    parser.add_argument("--csv", help="Escribe el reporte como CSV con encabezado")
    parser.add_argument("--threads", type=int, default=None, help="Workers de la búsqueda")
    parser.set_defaults(handler=cmd_dim)
