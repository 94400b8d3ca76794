# resolvedim/main.py
"""
Punto de entrada de la CLI.

Este archivo se encarga de:
- Armar el parser de argumentos y configurar el logging.
- Registrar los comandos de cada módulo (gen, dim, sweep, verify).
- Traducir los errores del paquete a códigos de salida.
"""

from __future__ import annotations

import argparse
import sys

from resolvedim import __version__
from resolvedim.core.config import configure_logging
from resolvedim.core.errors import ResolveDimError
from resolvedim.families import routes as families_routes
from resolvedim.solvers import routes as solvers_routes
from resolvedim.sweep import routes as sweep_routes
from resolvedim.theorems import routes as theorems_routes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resolvedim",
        description="Invariantes de resolubilidad (β, ψ, sdim, β̂) sobre familias de grafos.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING... (por defecto RESOLVEDIM_LOG_LEVEL)")

    # 🔹 Registro de comandos: cada módulo aporta el suyo
    subparsers = parser.add_subparsers(dest="command", required=True)
    families_routes.register(subparsers)
    solvers_routes.register(subparsers)
    sweep_routes.register(subparsers)
    theorems_routes.register(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse sale con 2 ante uso incorrecto y con 0 en --help/--version
        return int(e.code or 0)

    try:
        configure_logging(args.log_level)
    except ValueError as e:
        print(f"❌ Nivel de log inválido: {e}", file=sys.stderr)
        return 2

    try:
        return args.handler(args)
    except ResolveDimError as e:
        print(f"❌ {e.detail}", file=sys.stderr)
        return e.exit_code
