"""
theorems/routes.py
------------------
Comando `verify`: ejecuta el registro de afirmaciones.

Sale con código 5 si alguna afirmación falla.
"""

from __future__ import annotations

import argparse
from collections import Counter

from resolvedim.core.errors import VerificationFailed
from resolvedim.theorems.registry import CLAIMS, run_registry
from resolvedim.theorems.schemas import ClaimStatus

_ICONS = {ClaimStatus.PASS: "✅", ClaimStatus.FAIL: "❌", ClaimStatus.OUTSIDE_GUARD: "⚪"}


def _list_claims() -> None:
    for claim in CLAIMS:
        defaults = " ".join(str(p) for p in claim.default_params)
        print(f"{claim.id:<12} {claim.statement}")
        print(f"{'':<12} hipótesis: {claim.hypothesis} | fórmula: {claim.formula_text}")
        print(f"{'':<12} parámetros ({','.join(claim.param_names)}): {defaults}")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        _list_claims()
        return 0

    outcomes = run_registry(args.claim)
    for outcome in outcomes:
        params = ",".join(str(p) for p in outcome.params)
        line = f"{_ICONS[outcome.status]} {outcome.status.value:<13} {outcome.claim_id}({params})"
        if outcome.detail:
            line += f"  {outcome.detail}"
        print(line)

    counts = Counter(outcome.status for outcome in outcomes)
    print(
        f"\n📋 {len(outcomes)} verificaciones: {counts[ClaimStatus.PASS]} PASS, "
        f"{counts[ClaimStatus.FAIL]} FAIL, {counts[ClaimStatus.OUTSIDE_GUARD]} OUTSIDE_GUARD"
    )
    if counts[ClaimStatus.FAIL]:
        raise VerificationFailed(f"{counts[ClaimStatus.FAIL]} verificación(es) fallaron")
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Verifica las fórmulas cerradas contra los solvers")
    parser.add_argument("--list", action="store_true", help="Lista las afirmaciones registradas")
    parser.add_argument(
        "--claim", action="append", help="Id de afirmación a verificar (repetible, ej: JFG-psi)"
    )
    parser.set_defaults(handler=cmd_verify)
