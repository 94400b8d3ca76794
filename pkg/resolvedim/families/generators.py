"""
families/generators.py
----------------------
Generadores de las familias de grafos con una convención de etiquetado fija.

Convenciones (índices 0-based):
- Ciclo C_n: arista {i, i+1 mod n}.
- Medusa JFG(n, m): vértice i del ciclo ↦ i; hoja v_{ij} ↦ n + i·m + (j−1),
  con i en 0..n-1 y j en 1..m.
- Cocktail party CP(r): compañeros 2t ↔ 2t+1 (única no-adyacencia).
- Cay(Z_n, S_k): x ~ y si (y − x) mod n ∈ {1..k} ∪ {n−k..n−1}.
- Cay(D_2n, Ω): a^i ↦ i, a^i b ↦ n + i; x ~ y si x⁻¹y ∈ Ω.
"""

from __future__ import annotations

from itertools import combinations

from resolvedim.core.errors import InvalidParam
from resolvedim.graph.operations import build_graph
from resolvedim.models.models import Graph


# ==========================================================
# 🛡️ Guardas de parámetros
# ==========================================================

def cycle_guard(n: int) -> str | None:
    return None if n >= 3 else f"el ciclo requiere n >= 3 (n={n})"


def complete_guard(n: int) -> str | None:
    return None if n >= 1 else f"el grafo completo requiere n >= 1 (n={n})"


def jellyfish_guard(n: int, m: int) -> str | None:
    if n < 3 or m < 1:
        return f"la medusa requiere n >= 3 y m >= 1 (n={n}, m={m})"
    return None


def cocktail_party_guard(r: int) -> str | None:
    return None if r >= 2 else f"el cocktail party requiere r >= 2 (r={r})"


def cayley_zn_guard(n: int, k: int) -> str | None:
    if n < 4 or not (1 <= k <= n // 2 - 1):
        return f"Cay(Z_n, S_k) requiere n >= 4 y 1 <= k <= {max(n // 2 - 1, 0)} (n={n}, k={k})"
    return None


def cayley_dihedral_guard(n: int) -> str | None:
    return None if n >= 2 else f"Cay(D_2n, Ω) requiere n >= 2 (n={n})"


def _check(message: str | None) -> None:
    if message is not None:
        raise InvalidParam(message)


# ==========================================================
# 🔁 Familias básicas
# ==========================================================

def gen_cycle(n: int) -> Graph:
    _check(cycle_guard(n))
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def gen_complete(n: int) -> Graph:
    _check(complete_guard(n))
    return build_graph(n, combinations(range(n), 2))


# ==========================================================
# 🪼 Medusa JFG(n, m)
# ==========================================================

def jellyfish_leaf(n: int, m: int, i: int, j: int) -> int:
    """Índice de la hoja v_{ij}: i es el vértice del ciclo (0-based), j va de 1 a m."""
    if not (0 <= i < n and 1 <= j <= m):
        raise InvalidParam(f"hoja v_(i={i}, j={j}) fuera de rango para JFG({n}, {m})")
    return n + i * m + (j - 1)


def gen_jellyfish(n: int, m: int) -> Graph:
    """
    Ciclo C_n con m hojas colgantes en cada vértice; n(m+1) vértices.

    Las etiquetas usan la numeración 1-based habitual: `1..n` para el
    ciclo y `v{i},{j}` para las hojas.
    """
    _check(jellyfish_guard(n, m))
    edges = [(i, (i + 1) % n) for i in range(n)]
    labels = [str(i + 1) for i in range(n)]
    for i in range(n):
        for j in range(1, m + 1):
            edges.append((i, jellyfish_leaf(n, m, i, j)))
            labels.append(f"v{i + 1},{j}")
    return build_graph(n * (m + 1), edges, labels)


# ==========================================================
# 🍸 Cocktail party y sus realizaciones de Cayley
# ==========================================================

def gen_cocktail_party(r: int) -> Graph:
    _check(cocktail_party_guard(r))
    return build_graph(
        2 * r,
        ((x, y) for x, y in combinations(range(2 * r), 2) if y != x ^ 1),
    )


def cayley_zn_connection_set(n: int, k: int) -> frozenset[int]:
    # S_k = S_{k-1} ∪ {k, n-k}
    return frozenset(range(1, k + 1)) | frozenset(range(n - k, n))


def gen_cayley_zn(n: int, k: int) -> Graph:
    _check(cayley_zn_guard(n, k))
    connection = cayley_zn_connection_set(n, k)
    return build_graph(
        n,
        ((x, y) for x, y in combinations(range(n), 2) if (y - x) % n in connection),
    )


def dihedral_multiply(n: int, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """
    Producto en D_2n con elementos (i, s) = a^i b^s.

    Usa b a = a^{n-1} b, es decir (a^i b^s)(a^j b^t) = a^{i + (-1)^s j} b^{s+t}.
    """
    i, s = x
    j, t = y
    return ((i + (j if s == 0 else -j)) % n, (s + t) % 2)


def dihedral_inverse(n: int, x: tuple[int, int]) -> tuple[int, int]:
    i, s = x
    # las reflexiones a^i b son involuciones
    return ((-i) % n, 0) if s == 0 else (i, 1)


def dihedral_connection_set(n: int) -> frozenset[tuple[int, int]]:
    # Ω = {a, ..., a^{n-1}, ab, ..., a^{n-1}b}
    return frozenset((i, s) for i in range(1, n) for s in (0, 1))


def gen_cayley_dihedral(n: int) -> Graph:
    _check(cayley_dihedral_guard(n))
    elements = [(i, 0) for i in range(n)] + [(i, 1) for i in range(n)]
    omega = dihedral_connection_set(n)
    edges = []
    for ix, iy in combinations(range(2 * n), 2):
        product = dihedral_multiply(n, dihedral_inverse(n, elements[ix]), elements[iy])
        if product in omega:
            edges.append((ix, iy))
    labels = [f"a^{i}" for i in range(n)] + [f"a^{i}b" for i in range(n)]
    return build_graph(2 * n, edges, labels)
