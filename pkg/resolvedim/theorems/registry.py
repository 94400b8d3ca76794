"""
theorems/registry.py
--------------------
Registro de afirmaciones verificables y su ejecución.

Cada afirmación se comprueba en sus parámetros por defecto:
- `value`: valor del solver == fórmula para cada invariante, el conjunto
  de la demostración pasa su predicado y los conjuntos positivos/negativos
  de las demostraciones dan el resultado esperado. Para sdim también se
  cruza la búsqueda con la vía MMD.
- `diameter`: diámetro de la instancia == fórmula.
- `isomorphism`: las dos realizaciones son isomorfas.
"""

from __future__ import annotations

import logging

from resolvedim.core.errors import GuardViolated, ResolveDimError, UsageError
from resolvedim.families.isomorphism import are_isomorphic
from resolvedim.families.schemas import FamilyKind, FamilySpec
from resolvedim.graph.operations import all_pairs_distances
from resolvedim.resolving.kernel import satisfies
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.solvers.search import solve
from resolvedim.theorems import closed_forms as cf
from resolvedim.theorems.schemas import (
    ClaimCheck,
    ClaimOutcome,
    ClaimStatus,
    TheoremClaim,
    WitnessCheck,
)

logger = logging.getLogger(__name__)


def _jfg(n: int, m: int) -> FamilySpec:
    return FamilySpec(kind=FamilyKind.JELLYFISH, params=(n, m))


def _cp_zn(n: int) -> FamilySpec:
    return FamilySpec(kind=FamilyKind.CAYLEY_ZN, params=(n, n // 2 - 1))


def _cp(r: int) -> FamilySpec:
    return FamilySpec(kind=FamilyKind.COCKTAIL_PARTY, params=(r,))


def _d2n(n: int) -> FamilySpec:
    return FamilySpec(kind=FamilyKind.CAYLEY_DIHEDRAL, params=(n,))


def _cp_iso_guard(n: int) -> str | None:
    if n < 4 or n % 2:
        return f"Cay(Z_n, S_(n/2-1)) ≅ CP(n/2) requiere n par y n >= 4 (n={n})"
    return None


def _cp_diameter_guard(r: int) -> str | None:
    return None if r >= 2 else f"CP(r) requiere r >= 2 (r={r})"


def _d2n_iso_guard(n: int) -> str | None:
    return None if n >= 2 else f"Cay(D_2n, Ω) requiere n >= 2 (n={n})"


_JFG_SMALL = ((3, 2), (4, 2), (3, 3))
_JFG_GUARD_TEXT = "n >= 3, m >= 2"
_CP_GUARD_TEXT = "n par, n >= 8, k = n/2 - 1"

# ==========================================================
# 📚 Registro
# ==========================================================

CLAIMS: tuple[TheoremClaim, ...] = (
    TheoremClaim(
        id="JFG-beta",
        statement="β(JFG(n, m)) = nm − n",
        hypothesis=_JFG_GUARD_TEXT,
        formula_text="nm - n",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.METRIC,),
        param_names=("n", "m"),
        default_params=tuple((n, m) for n in (3, 4, 5) for m in (2, 3)),
        guard=cf.jfg_guard,
        formula=cf.jfg_beta,
        instance=_jfg,
        witness_builder=cf.jfg_beta_witness,
    ),
    TheoremClaim(
        id="JFG-psi",
        statement="ψ(JFG(n, m)) = nm",
        hypothesis=_JFG_GUARD_TEXT,
        formula_text="nm",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.DOUBLY,),
        param_names=("n", "m"),
        default_params=_JFG_SMALL,
        guard=cf.jfg_guard,
        formula=cf.jfg_psi,
        instance=_jfg,
        witness_builder=cf.jfg_psi_witness,
    ),
    TheoremClaim(
        id="JFG-sdim",
        statement="sdim(JFG(n, m)) = nm − 1",
        hypothesis=_JFG_GUARD_TEXT,
        formula_text="nm - 1",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.STRONG,),
        param_names=("n", "m"),
        default_params=_JFG_SMALL,
        guard=cf.jfg_guard,
        formula=cf.jfg_sdim,
        instance=_jfg,
        witness_builder=cf.jfg_sdim_witness,
    ),
    TheoremClaim(
        id="JFG-adjdim",
        statement="β̂(JFG(n, m)) = nm − 1",
        hypothesis=_JFG_GUARD_TEXT,
        formula_text="nm - 1",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.ADJACENCY,),
        param_names=("n", "m"),
        default_params=_JFG_SMALL,
        guard=cf.jfg_guard,
        formula=cf.jfg_adjdim,
        instance=_jfg,
        witness_builder=cf.jfg_sdim_witness,
    ),
    TheoremClaim(
        id="JFG-diam",
        statement="diam(JFG(n, m)) = ⌊n/2⌋ + 2",
        hypothesis="n >= 3, m >= 1",
        formula_text="floor(n/2) + 2",
        check=ClaimCheck.DIAMETER,
        param_names=("n", "m"),
        default_params=tuple((n, m) for n in range(3, 9) for m in (1, 2, 3)),
        guard=cf.jfg_diameter_guard,
        formula=cf.jfg_diameter,
        instance=_jfg,
    ),
    TheoremClaim(
        id="CP-beta",
        statement="β(Cay(Z_n, S_(n/2-1))) = n/2",
        hypothesis=_CP_GUARD_TEXT,
        formula_text="k + 1 = n/2",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.METRIC,),
        param_names=("n",),
        default_params=((8,), (10,), (12,)),
        guard=cf.cp_guard,
        formula=cf.cp_dimensions,
        instance=_cp_zn,
        witness_builder=cf.cp_witness,
    ),
    TheoremClaim(
        id="CP-psi",
        statement="ψ(Cay(Z_n, S_(n/2-1))) = n/2",
        hypothesis=_CP_GUARD_TEXT,
        formula_text="k + 1 = n/2",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.DOUBLY,),
        param_names=("n",),
        default_params=((8,), (10,), (12,)),
        guard=cf.cp_guard,
        formula=cf.cp_dimensions,
        instance=_cp_zn,
        witness_builder=cf.cp_witness,
    ),
    TheoremClaim(
        id="CP-sdim",
        statement="sdim(Cay(Z_n, S_(n/2-1))) = n/2",
        hypothesis=_CP_GUARD_TEXT,
        formula_text="k + 1 = n/2",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.STRONG,),
        param_names=("n",),
        default_params=((8,), (10,), (12,)),
        guard=cf.cp_guard,
        formula=cf.cp_dimensions,
        instance=_cp_zn,
        witness_builder=cf.cp_witness,
    ),
    TheoremClaim(
        id="CP-adjdim",
        statement="β̂(Cay(Z_n, S_(n/2-1))) = n/2 (diámetro 2 ⇒ β̂ = β)",
        hypothesis=_CP_GUARD_TEXT,
        formula_text="k + 1 = n/2",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.ADJACENCY,),
        param_names=("n",),
        default_params=((8,), (10,), (12,)),
        guard=cf.cp_guard,
        formula=cf.cp_dimensions,
        instance=_cp_zn,
        witness_builder=cf.cp_witness,
    ),
    TheoremClaim(
        id="CP-diam",
        statement="diam(CP(r)) = 2",
        hypothesis="r >= 2",
        formula_text="2",
        check=ClaimCheck.DIAMETER,
        param_names=("r",),
        default_params=tuple((r,) for r in range(2, 9)),
        guard=_cp_diameter_guard,
        formula=lambda r: 2,
        instance=_cp,
    ),
    TheoremClaim(
        id="CP-iso-zn",
        statement="Cay(Z_n, S_(n/2-1)) ≅ CP(n/2)",
        hypothesis="n par, n >= 4",
        formula_text="isomorfos",
        check=ClaimCheck.ISOMORPHISM,
        param_names=("n",),
        default_params=tuple((n,) for n in range(8, 17, 2)),
        guard=_cp_iso_guard,
        formula=lambda n: 1,
        instance=_cp_zn,
        partner=lambda n: _cp(n // 2),
    ),
    TheoremClaim(
        id="CP-iso-d2n",
        statement="Cay(D_2n, Ω) ≅ CP(n)",
        hypothesis="n >= 2",
        formula_text="isomorfos",
        check=ClaimCheck.ISOMORPHISM,
        param_names=("n",),
        default_params=tuple((n,) for n in range(2, 9)),
        guard=_d2n_iso_guard,
        formula=lambda n: 1,
        instance=_d2n,
        partner=_cp,
    ),
    TheoremClaim(
        id="D2N-dims",
        statement="β = ψ = sdim de Cay(D_2n, Ω) valen n",
        hypothesis="n >= 4",
        formula_text="n",
        check=ClaimCheck.VALUE,
        kinds=(InvariantKind.METRIC, InvariantKind.DOUBLY, InvariantKind.STRONG),
        param_names=("n",),
        default_params=((4,), (5,), (6,)),
        guard=cf.d2n_guard,
        formula=cf.d2n_dimensions,
        instance=_d2n,
        witness_builder=cf.d2n_witness,
    ),
)

_BY_ID = {claim.id: claim for claim in CLAIMS}


def get_claim(claim_id: str) -> TheoremClaim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        valid = ", ".join(_BY_ID)
        raise UsageError(f"Afirmación desconocida {claim_id!r}; válidas: {valid}")


# ==========================================================
# ✅ Verificación
# ==========================================================

def _fixtures(spec: FamilySpec, kinds: tuple[InvariantKind, ...]) -> list[WitnessCheck]:
    if spec.kind not in (FamilyKind.JELLYFISH, FamilyKind.CAYLEY_ZN):
        return []
    checks = cf.positive_witnesses(spec) + cf.negative_witnesses(spec)
    return [check for check in checks if check.kind in kinds]


def _check_value(claim: TheoremClaim, params: tuple[int, ...]) -> tuple[int, list[str]]:
    spec = claim.instance(*params)
    g = spec.build()
    dm = all_pairs_distances(g)
    expected = claim.formula(*params)
    observed = expected
    problems: list[str] = []

    for kind in claim.kinds:
        result = solve(g, kind, "pruned", dm=dm)
        if result.value != expected:
            observed = result.value
            problems.append(f"{kind.symbol}: solver={result.value}, fórmula={expected}")
        if kind is InvariantKind.STRONG:
            via_mmd = solve(g, kind, "mmd", dm=dm)
            if via_mmd.value != result.value:
                problems.append(f"sdim: búsqueda={result.value}, cobertura MMD={via_mmd.value}")

        if claim.witness_builder is not None:
            witness = claim.witness_builder(*params)
            if not satisfies(kind, g, dm, witness):
                problems.append(f"el conjunto de la demostración {list(witness)} no pasa {kind.value}")

    for check in _fixtures(spec, claim.kinds):
        if satisfies(check.kind, g, dm, check.members) != check.expected:
            verb = "debería" if check.expected else "no debería"
            problems.append(f"{check.source}: {list(check.members)} {verb} pasar {check.kind.value}")

    return observed, problems


def verify_claim(claim: TheoremClaim, params: tuple[int, ...]) -> ClaimOutcome:
    """
    Verifica una afirmación en una instancia.

    Nunca lanza: los errores de dominio se registran como FAIL en el resultado.
    """
    params = tuple(params)
    message = claim.guard(*params)
    if message is not None:
        return ClaimOutcome(
            claim_id=claim.id, params=params, status=ClaimStatus.OUTSIDE_GUARD, detail=message
        )

    try:
        expected = claim.formula(*params)
        if claim.check is ClaimCheck.VALUE:
            observed, problems = _check_value(claim, params)
        elif claim.check is ClaimCheck.DIAMETER:
            observed = all_pairs_distances(claim.instance(*params).build()).diameter
            problems = [] if observed == expected else [f"diámetro={observed}, fórmula={expected}"]
        else:
            g1 = claim.instance(*params).build()
            g2 = claim.partner(*params).build()
            observed = int(are_isomorphic(g1, g2))
            problems = [] if observed else ["las dos realizaciones no son isomorfas"]
    except GuardViolated as e:
        return ClaimOutcome(
            claim_id=claim.id, params=params, status=ClaimStatus.OUTSIDE_GUARD, detail=e.detail
        )
    except ResolveDimError as e:
        logger.warning("❌ %s%s: %s", claim.id, params, e.detail)
        return ClaimOutcome(claim_id=claim.id, params=params, status=ClaimStatus.FAIL, detail=e.detail)

    if problems:
        detail = "; ".join(problems)
        logger.warning("❌ %s%s: %s", claim.id, params, detail)
        return ClaimOutcome(
            claim_id=claim.id,
            params=params,
            status=ClaimStatus.FAIL,
            expected=expected,
            observed=observed,
            detail=detail,
        )
    logger.info("✅ %s%s", claim.id, params)
    return ClaimOutcome(
        claim_id=claim.id, params=params, status=ClaimStatus.PASS, expected=expected, observed=observed
    )


def run_registry(claim_ids: list[str] | None = None) -> list[ClaimOutcome]:
    """Ejecuta las afirmaciones pedidas (todas si `claim_ids` es vacío) en sus parámetros por defecto."""
    claims = [get_claim(cid) for cid in claim_ids] if claim_ids else list(CLAIMS)
    return [verify_claim(claim, params) for claim in claims for params in claim.default_params]
