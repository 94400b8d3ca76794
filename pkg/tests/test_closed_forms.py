import pytest

from resolvedim.core.errors import GuardViolated
from resolvedim.families.schemas import FamilySpec
from resolvedim.graph.operations import all_pairs_distances
from resolvedim.resolving.kernel import satisfies
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.theorems.closed_forms import (
    closed_form_value,
    cp_dimensions,
    cp_witness,
    d2n_dimensions,
    jfg_adjdim,
    jfg_beta,
    jfg_beta_witness,
    jfg_diameter,
    jfg_psi,
    jfg_psi_witness,
    jfg_sdim,
    jfg_sdim_witness,
    negative_witnesses,
    positive_witnesses,
)

JFG_GRID = [(n, m) for n in (3, 4, 5) for m in (2, 3)]
CP_ORDERS = [8, 10, 12]


# ==========================================================
# 🧮 Fórmulas
# ==========================================================

@pytest.mark.parametrize(
    "formula, params, expected",
    [
        (jfg_beta, (3, 2), 3),
        (jfg_beta, (4, 3), 8),
        (jfg_beta, (5, 2), 5),
        (jfg_psi, (3, 2), 6),
        (jfg_psi, (4, 2), 8),
        (jfg_psi, (3, 3), 9),
        (jfg_sdim, (3, 2), 5),
        (jfg_sdim, (4, 2), 7),
        (jfg_sdim, (3, 3), 8),
        (jfg_adjdim, (3, 2), 5),
        (jfg_adjdim, (4, 2), 7),
        (jfg_adjdim, (5, 2), 9),
        (jfg_diameter, (3, 2), 3),
        (jfg_diameter, (4, 2), 4),
        (jfg_diameter, (8, 1), 6),
        (cp_dimensions, (8,), 4),
        (cp_dimensions, (10,), 5),
        (cp_dimensions, (12,), 6),
        (d2n_dimensions, (5,), 5),
    ],
)
def test_formula_values(formula, params, expected):
    assert formula(*params) == expected


@pytest.mark.parametrize(
    "formula, params",
    [
        (jfg_beta, (2, 2)),
        (jfg_beta, (3, 1)),
        (jfg_psi, (3, 1)),
        (jfg_diameter, (3, 0)),
        (cp_dimensions, (6,)),
        (cp_dimensions, (9,)),
        (d2n_dimensions, (3,)),
        (jfg_beta_witness, (3, 1)),
        (cp_witness, (7,)),
    ],
)
def test_guards(formula, params):
    with pytest.raises(GuardViolated):
        formula(*params)


# ==========================================================
# 🧾 Conjuntos de las demostraciones
# ==========================================================

def test_witness_sets():
    assert jfg_beta_witness(3, 2) == (3, 5, 7)
    assert jfg_beta_witness(3, 3) == (3, 4, 6, 7, 9, 10)
    assert jfg_psi_witness(3, 2) == tuple(range(3, 9))
    assert jfg_psi_witness(4, 2) == tuple(range(4, 12))
    assert jfg_sdim_witness(3, 2) == (3, 4, 5, 6, 7)
    assert jfg_sdim_witness(4, 2) == tuple(range(4, 11))
    assert cp_witness(8) == (0, 1, 2, 3)
    assert cp_witness(10) == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("n, m", JFG_GRID)
def test_witness_sizes(n, m):
    assert len(jfg_beta_witness(n, m)) == n * m - n
    assert len(jfg_psi_witness(n, m)) == n * m
    assert len(jfg_sdim_witness(n, m)) == n * m - 1


def _check_all(spec: FamilySpec) -> None:
    g = spec.build()
    dm = all_pairs_distances(g)
    for check in positive_witnesses(spec) + negative_witnesses(spec):
        assert satisfies(check.kind, g, dm, check.members) is check.expected, check.source


@pytest.mark.parametrize("n, m", JFG_GRID)
def test_jellyfish_witnesses_behave_as_proved(n, m):
    _check_all(FamilySpec.parse(f"jfg:{n},{m}"))


@pytest.mark.parametrize("n", CP_ORDERS)
def test_cayley_witnesses_behave_as_proved(n):
    _check_all(FamilySpec.parse(f"cayley-zn:{n},{n // 2 - 1}"))


def test_negative_witness_examples():
    checks = negative_witnesses(FamilySpec.parse("jfg:3,2"))
    by_source = {check.source: check for check in checks}
    assert by_source["beta:solo-ciclo"].members == (0, 1, 2)
    assert by_source["psi:base-beta"].members == (3, 5, 7)
    assert by_source["psi:base-beta"].kind is InvariantKind.DOUBLY
    assert all(not check.expected for check in checks)

    cp = negative_witnesses(FamilySpec.parse("cayley-zn:8,3"))
    assert cp[0].members == (0, 1, 2)
    assert cp[0].kind is InvariantKind.METRIC


def test_witnesses_need_a_family_with_proofs():
    with pytest.raises(GuardViolated):
        negative_witnesses(FamilySpec.parse("cycle:5"))
    with pytest.raises(GuardViolated):
        positive_witnesses(FamilySpec.parse("cayley-zn:8,2"))


# ==========================================================
# 🧭 Valor cerrado por familia
# ==========================================================

@pytest.mark.parametrize(
    "text, kind, expected",
    [
        ("jfg:3,2", InvariantKind.METRIC, 3),
        ("jfg:3,2", InvariantKind.ADJACENCY, 5),
        ("cayley-zn:8,3", InvariantKind.DOUBLY, 4),
        ("cayley-zn:8,3", InvariantKind.ADJACENCY, 4),
        ("cp:4", InvariantKind.DOUBLY, 4),
        ("cayley-d2n:5", InvariantKind.STRONG, 5),
    ],
)
def test_closed_form_value(text, kind, expected):
    assert closed_form_value(FamilySpec.parse(text), kind) == expected


@pytest.mark.parametrize("text", ["jfg:3,1", "cayley-zn:8,2", "cayley-zn:6,2", "cycle:5", "cp:3"])
def test_closed_form_value_outside_guard(text):
    with pytest.raises(GuardViolated):
        closed_form_value(FamilySpec.parse(text), InvariantKind.METRIC)


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_jellyfish_diameter(n, m):
    spec = FamilySpec.parse(f"jfg:{n},{m}")
    assert all_pairs_distances(spec.build()).diameter == jfg_diameter(n, m)
