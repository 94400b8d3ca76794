"""
theorems/closed_forms.py
------------------------
Fórmulas cerradas con sus hipótesis y los conjuntos explícitos de las
demostraciones, traducidos al etiquetado 0-based del paquete.

Traducción de índices:
- Medusa: vértice del ciclo i (1-based) ↦ i−1; hoja v_{ij} ↦ jellyfish_leaf(n, m, i−1, j).
- Cay(Z_n, S_k): vértice i (1..n) ↦ i−1.
- Cay(D_2n, Ω): a^i ↦ i, a^i b ↦ n + i.
"""

from __future__ import annotations

from resolvedim.core.errors import GuardViolated
from resolvedim.families.generators import jellyfish_leaf
from resolvedim.families.schemas import FamilyKind, FamilySpec
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.theorems.schemas import WitnessCheck


def _require(message: str | None) -> None:
    if message is not None:
        raise GuardViolated(message)


# ==========================================================
# 🛡️ Hipótesis
# ==========================================================

def jfg_guard(n: int, m: int) -> str | None:
    if n < 3 or m < 2:
        return f"JFG(n, m) requiere n >= 3 y m >= 2 (n={n}, m={m})"
    return None


def jfg_diameter_guard(n: int, m: int) -> str | None:
    if n < 3 or m < 1:
        return f"el diámetro de JFG(n, m) requiere n >= 3 y m >= 1 (n={n}, m={m})"
    return None


def cp_guard(n: int) -> str | None:
    if n < 8 or n % 2:
        return f"Cay(Z_n, S_(n/2-1)) requiere n par y n >= 8 (n={n})"
    return None


def d2n_guard(n: int) -> str | None:
    # Cay(D_2n, Ω) ≅ CP(n) ≅ Cay(Z_2n, S_(n-1)), que cumple 2n >= 8
    return None if n >= 4 else f"Cay(D_2n, Ω) requiere n >= 4 (n={n})"


# ==========================================================
# 🪼 Medusa JFG(n, m)
# ==========================================================

def jfg_beta(n: int, m: int) -> int:
    _require(jfg_guard(n, m))
    return n * m - n


def jfg_psi(n: int, m: int) -> int:
    _require(jfg_guard(n, m))
    return n * m


def jfg_sdim(n: int, m: int) -> int:
    _require(jfg_guard(n, m))
    return n * m - 1


def jfg_adjdim(n: int, m: int) -> int:
    _require(jfg_guard(n, m))
    return n * m - 1


def jfg_diameter(n: int, m: int) -> int:
    _require(jfg_diameter_guard(n, m))
    return n // 2 + 2


def _leaves(n: int, m: int, skip: set[tuple[int, int]] = frozenset()) -> tuple[int, ...]:
    return tuple(
        jellyfish_leaf(n, m, i, j)
        for i in range(n)
        for j in range(1, m + 1)
        if (i, j) not in skip
    )


def jfg_beta_witness(n: int, m: int) -> tuple[int, ...]:
    """Todas las hojas menos la última de cada vértice del ciclo (tamaño nm − n)."""
    _require(jfg_guard(n, m))
    return _leaves(n, m, {(i, m) for i in range(n)})


def jfg_psi_witness(n: int, m: int) -> tuple[int, ...]:
    _require(jfg_guard(n, m))
    return _leaves(n, m)


def jfg_sdim_witness(n: int, m: int) -> tuple[int, ...]:
    """Todas las hojas menos v_{nm}; sirve también como testigo de adyacencia."""
    _require(jfg_guard(n, m))
    return _leaves(n, m, {(n - 1, m)})


# ==========================================================
# 🍸 Cocktail party
# ==========================================================

def cp_dimensions(n: int) -> int:
    _require(cp_guard(n))
    return n // 2


def cp_witness(n: int) -> tuple[int, ...]:
    """La clique {1, ..., k+1} de la demostración, es decir {0, ..., n/2 − 1}."""
    _require(cp_guard(n))
    return tuple(range(n // 2))


def d2n_dimensions(n: int) -> int:
    _require(d2n_guard(n))
    return n


def d2n_witness(n: int) -> tuple[int, ...]:
    # las rotaciones a^0..a^{n-1}: un vértice de cada par no adyacente {x, xb}
    _require(d2n_guard(n))
    return tuple(range(n))


# ==========================================================
# 🧾 Fixtures de testigos
# ==========================================================

def _jfg_positive(n: int, m: int) -> list[WitnessCheck]:
    beta_set = jfg_beta_witness(n, m)
    all_but_one = jfg_sdim_witness(n, m)
    all_leaves = jfg_psi_witness(n, m)
    return [
        WitnessCheck(members=beta_set, kind=InvariantKind.METRIC, expected=True, source="beta:base"),
        WitnessCheck(members=all_but_one, kind=InvariantKind.METRIC, expected=True, source="beta:todas-menos-una"),
        WitnessCheck(members=all_leaves, kind=InvariantKind.METRIC, expected=True, source="beta:todas-las-hojas"),
        WitnessCheck(members=all_leaves, kind=InvariantKind.DOUBLY, expected=True, source="psi:todas-las-hojas"),
        WitnessCheck(members=all_but_one, kind=InvariantKind.STRONG, expected=True, source="sdim:todas-menos-una"),
        WitnessCheck(members=all_but_one, kind=InvariantKind.ADJACENCY, expected=True, source="adjdim:todas-menos-una"),
    ]


def _jfg_negative(n: int, m: int) -> list[WitnessCheck]:
    _require(jfg_guard(n, m))
    beta_set = jfg_beta_witness(n, m)
    without_support_0 = _leaves(n, m, {(0, j) for j in range(1, m + 1)})
    without_two = _leaves(n, m, {(n - 1, 1), (n - 1, 2)})
    return [
        WitnessCheck(members=tuple(range(n)), kind=InvariantKind.METRIC, expected=False, source="beta:solo-ciclo"),
        WitnessCheck(members=without_support_0, kind=InvariantKind.METRIC, expected=False, source="beta:sin-hojas-de-0"),
        WitnessCheck(members=without_two, kind=InvariantKind.METRIC, expected=False, source="beta:faltan-dos-hojas"),
        WitnessCheck(members=beta_set, kind=InvariantKind.DOUBLY, expected=False, source="psi:base-beta"),
        WitnessCheck(
            members=jfg_sdim_witness(n, m), kind=InvariantKind.DOUBLY, expected=False, source="psi:base-sdim"
        ),
        WitnessCheck(members=beta_set, kind=InvariantKind.STRONG, expected=False, source="sdim:base-beta"),
        WitnessCheck(members=beta_set, kind=InvariantKind.ADJACENCY, expected=False, source="adjdim:base-beta"),
    ]


def _cp_positive(n: int) -> list[WitnessCheck]:
    clique = cp_witness(n)
    checks = [
        WitnessCheck(members=clique, kind=kind, expected=True, source=source)
        for kind, source in (
            (InvariantKind.METRIC, "beta:clique"),
            (InvariantKind.DOUBLY, "psi:clique"),
            (InvariantKind.STRONG, "sdim:clique"),
            (InvariantKind.ADJACENCY, "adjdim:clique"),
        )
    ]
    checks.append(
        WitnessCheck(
            members=clique + (n // 2,), kind=InvariantKind.METRIC, expected=True, source="beta:clique+opuesto"
        )
    )
    return checks


def _cp_negative(n: int) -> list[WitnessCheck]:
    _require(cp_guard(n))
    k = n // 2 - 1
    # k+1 es el único vértice a distancia 2 de 0
    return [
        WitnessCheck(members=tuple(range(k)), kind=InvariantKind.METRIC, expected=False, source="beta:clique-corta"),
        WitnessCheck(
            members=tuple(range(k)) + (k + 1,), kind=InvariantKind.METRIC, expected=False, source="beta:clique-corta+distancia-2"
        ),
    ]


def _cp_order(spec: FamilySpec) -> int:
    n, k = spec.params
    if k != n // 2 - 1:
        raise GuardViolated(f"{spec.text}: las fórmulas de CP requieren k = n/2 − 1")
    return n


def positive_witnesses(spec: FamilySpec) -> list[WitnessCheck]:
    if spec.kind is FamilyKind.JELLYFISH:
        return _jfg_positive(*spec.params)
    if spec.kind is FamilyKind.CAYLEY_ZN:
        return _cp_positive(_cp_order(spec))
    raise GuardViolated(f"{spec.text}: no hay conjuntos explícitos para esta familia")


def negative_witnesses(spec: FamilySpec) -> list[WitnessCheck]:
    """Conjuntos que las demostraciones construyen para mostrar que NO resuelven."""
    if spec.kind is FamilyKind.JELLYFISH:
        return _jfg_negative(*spec.params)
    if spec.kind is FamilyKind.CAYLEY_ZN:
        return _cp_negative(_cp_order(spec))
    raise GuardViolated(f"{spec.text}: no hay conjuntos explícitos para esta familia")


# ==========================================================
# 🧭 Valor cerrado por familia e invariante
# ==========================================================

_JFG_FORMULAS = {
    InvariantKind.METRIC: jfg_beta,
    InvariantKind.DOUBLY: jfg_psi,
    InvariantKind.STRONG: jfg_sdim,
    InvariantKind.ADJACENCY: jfg_adjdim,
}


def closed_form_value(spec: FamilySpec, kind: InvariantKind) -> int:
    """
    Valor que predice la teoría para `kind` sobre la instancia `spec`.

    Errores:
    - `GuardViolated` si la instancia no cumple las hipótesis o la familia
      no tiene fórmula.
    """
    if spec.kind is FamilyKind.JELLYFISH:
        return _JFG_FORMULAS[kind](*spec.params)
    if spec.kind is FamilyKind.CAYLEY_ZN:
        # β̂ = β en diámetro 2
        return cp_dimensions(_cp_order(spec))
    if spec.kind is FamilyKind.CAYLEY_DIHEDRAL:
        return d2n_dimensions(spec.param("n"))
    if spec.kind is FamilyKind.COCKTAIL_PARTY:
        return d2n_dimensions(spec.param("r"))
    raise GuardViolated(f"{spec.text}: no hay fórmula cerrada para esta familia")
