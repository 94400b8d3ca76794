"""
families/routes.py
------------------
Comando `gen`: genera una familia y escribe su lista de aristas.

Ejemplos:
    resolvedim gen jfg:3,2 -o g.txt
    resolvedim gen cayley-zn:8,3          (a stdout)
"""

from __future__ import annotations

import argparse
import logging
import sys

from resolvedim.families.schemas import PARAM_NAMES, FamilySpec
from resolvedim.graph.edgelist import format_edge_list, write_edge_list

logger = logging.getLogger(__name__)


def cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec.parse(args.spec)
    g = spec.build()
    if args.out:
        write_edge_list(g, args.out)
        logger.info("📝 %s → %s (%d vértices, %d aristas)", spec.text, args.out, g.vertex_count, g.edge_count)
    else:
        sys.stdout.write(format_edge_list(g))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    families = ", ".join(f"{kind.value}:{','.join(names)}" for kind, names in PARAM_NAMES.items())
    parser = subparsers.add_parser(
        "gen",
        help="Genera una familia de grafos en formato lista de aristas",
        description=f"Familias disponibles: {families}",
    )
    parser.add_argument("spec", help="Familia y parámetros, ej: jfg:3,2")
    parser.add_argument("-o", "--out", help="Archivo de salida (por defecto stdout)")
    parser.set_defaults(handler=cmd_gen)
