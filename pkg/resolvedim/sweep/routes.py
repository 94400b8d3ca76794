"""
sweep/routes.py
---------------
Comando `sweep`: barre una grilla de parámetros y emite el CSV de filas.

Ejemplos:
    resolvedim sweep --family jfg --n 3..5 --m 2..3 --invariants beta,psi,sdim,adjdim
    resolvedim sweep --config grilla.yaml -o barrido.csv
"""

from __future__ import annotations

import argparse

from resolvedim.core.errors import UsageError
from resolvedim.sweep.runner import GRID_KEYS, build_grid, load_grid_config, run_sweep, write_csv


def cmd_sweep(args: argparse.Namespace) -> int:
    values = load_grid_config(args.config) if args.config else {}
    # los flags pisan lo que venga del archivo
    for key in GRID_KEYS:
        flag = getattr(args, key)
        if flag is not None:
            values[key] = flag

    grid = build_grid(values)
    rows = run_sweep(grid, workers=args.threads)
    if args.out:
        try:
            with open(args.out, "w", newline="", encoding="utf-8") as f:
                write_csv(rows, f)
        except OSError as e:
            raise UsageError(f"No se pudo escribir {args.out}: {e.strerror or e}")
    else:
        write_csv(rows)
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "sweep",
        help="Compara solver y fórmula cerrada sobre una grilla de parámetros",
        description="Rangos: a, a..b o a..b:step. La familia cp barre el orden n de Cay(Z_n, S_(n/2-1)) con --n, o CP(r) con --r.",
    )
    parser.add_argument("--config", help="Archivo YAML con family, n, m, k, r, invariants, method")
    parser.add_argument("--family", help="cycle | complete | jfg | cp | cayley-zn | cayley-d2n")
    parser.add_argument("--n")
    parser.add_argument("--m")
    parser.add_argument("--k")
    parser.add_argument("--r", help="Sólo cp: barre CP(r) en vez de la forma de Cayley")
    parser.add_argument("--invariants", help="Lista separada por comas, ej: beta,psi")
    parser.add_argument("--method", choices=["auto", "brute", "pruned", "mmd"])
    parser.add_argument("--threads", type=int, default=None, help="Instancias en paralelo")
    parser.add_argument("-o", "--out", help="CSV de salida (por defecto stdout)")
    parser.set_defaults(handler=cmd_sweep)
