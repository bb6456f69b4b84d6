import pytest
from numpy.testing import assert_allclose

from hypertype.errors import UsageError
from hypertype.families import Family, FamilyParams
from hypertype.series import SolutionKind, evaluate_expression, hyp2f1
from hypertype.symmetry import (
    enumerate_group, kummer_expressions, kummer_table, solution_residual, square_action, transform_solution,
    verify_conjugation, whipple_relations,
)

ORDERS = {
    Family.HYP2F1: 48,
    Family.HYP1F1: 4,
    Family.HYP2F0: 4,
    Family.HYP0F1: 2,
    Family.GEGENBAUER: 8,
    Family.HERMITE: 4,
}

SAMPLE_LIE = {
    Family.HYP2F1: (0.31, -0.27, 0.18),
    Family.HYP1F1: (0.42, 0.37),
    Family.HYP2F0: (0.35, 0.22),
    Family.HYP0F1: (0.33,),
    Family.GEGENBAUER: (0.29, 0.41),
    Family.HERMITE: (0.23,),
}


@pytest.mark.parametrize('family, order', ORDERS.items())
def test_group_order_closure_and_inverses(family, order):
    group = enumerate_group(family)
    assert group.order == order
    table = group.composition_table()
    assert all(index is not None for row in table for index in row)
    for row in table:
        assert sorted(row) == list(range(order))
    identity = group.identity()
    for element in group.elements:
        inverse = group.inverse(element)
        assert inverse is not None
        assert group.compose(element, inverse) is identity
        assert group.compose(inverse, element) is identity


@pytest.mark.parametrize('family', list(Family))
def test_every_element_conjugates_the_operator(family):
    params = FamilyParams.from_lie(family, *SAMPLE_LIE[family])
    for element in enumerate_group(family).elements:
        worst, factors = verify_conjugation(element, params)
        assert worst < 1e-10, str(element)
        assert len(factors) >= 1


@pytest.mark.parametrize('family', [Family.HYP2F1, Family.HYP1F1, Family.HYP0F1])
def test_transformed_solutions_solve_the_equation(family):
    params = FamilyParams.from_lie(family, *SAMPLE_LIE[family])
    z = {Family.HYP2F1: 0.3 + 0.2j, Family.HYP1F1: 0.8 - 0.4j, Family.HYP0F1: 0.7 + 0.5j}[family]
    checked = 0
    for element in enumerate_group(family).elements:
        if family is Family.HYP2F1 and abs(complex(element.point_map(z))) > 0.8:
            continue
        assert solution_residual(element, params, z) < 1e-8, str(element)
        checked += 1
    assert checked >= 2


def test_group_serializes():
    data = enumerate_group(Family.HYP1F1).to_dict()
    assert data['family'] == '1f1'
    assert data['order'] == 4
    assert {'label', 'point_map', 'prefactor', 'params'} <= set(data['elements'][0])


@pytest.mark.parametrize('kind', SolutionKind.for_family(Family.HYP2F1))
def test_kummer_table_rows_agree(kind):
    rows = kummer_table(kind)
    assert len(rows) == 4
    params = FamilyParams.from_lie(Family.HYP2F1, 0.31, -0.27, 0.18)
    z = {'At0': 0.2 + 0.15j, 'At1': 0.85 + 0.1j, 'AtI': -2.5 + 1.5j}[kind.label[:3]]
    values = [evaluate_expression(e, z).value for e in kummer_expressions(kind, params)]
    assert_allclose(values, [values[0]] * 4, rtol=1e-9, atol=1e-9)


def test_kummer_table_is_for_2f1_only():
    with pytest.raises(UsageError):
        kummer_table(SolutionKind.HYP1F1_AT0_INDEX0)


def test_gegenbauer_square_action_is_a_permutation():
    vertices = {'1', 'inf+', '-1', 'inf-'}
    for element in enumerate_group(Family.GEGENBAUER).elements:
        action = square_action(element)
        assert set(action) == vertices
        assert set(action.values()) == vertices
    with pytest.raises(UsageError):
        square_action(enumerate_group(Family.HERMITE).elements[0])


@pytest.mark.parametrize('lie', [(0.29, 0.41), (-0.37, 0.18), (0.52, -0.63)])
def test_whipple_relations_hold_on_solutions(lie):
    params = FamilyParams.from_lie(Family.GEGENBAUER, *lie)
    defects = whipple_relations(params)
    assert defects['tau_squared'] < 1e-10
    assert defects['tau_epsilon'] < 1e-10


def test_whipple_relations_need_gegenbauer_parameters():
    with pytest.raises(UsageError):
        whipple_relations(FamilyParams.from_lie(Family.HYP1F1, 0.42, 0.37))


def test_gegenbauer_point_map_sign_follows_the_parameter_signs():
    group = enumerate_group(Family.GEGENBAUER)
    z = 1.7
    for element in group.elements:
        signs = [sign for _, sign in element.param_map]
        w = complex(element.point_map(z))
        swapped = element.param_map[0][0] == 1
        expected = z / (z * z - 1) ** 0.5 if swapped else z
        assert_allclose(w, signs[0] * signs[1] * expected, rtol=1e-14)
    minus_z = group.find(((0, 1), (1, -1)))
    assert minus_z.label == 'w=-z'
    assert not minus_z.powers


def test_reflected_gegenbauer_solution_solves_the_equation():
    params = FamilyParams.from_lie(Family.GEGENBAUER, 0.29, 0.41)
    element = enumerate_group(Family.GEGENBAUER).find(((0, 1), (1, -1)))
    assert solution_residual(element, params, -1.3 + 0.2j) < 1e-10


def test_identity_transform_is_the_series_solution():
    params = FamilyParams.from_lie(Family.HYP2F1, 0.31, -0.27, 0.18)
    z = 0.3 + 0.2j
    expr = transform_solution(enumerate_group(Family.HYP2F1).identity(), params)
    assert_allclose(evaluate_expression(expr, z).value, hyp2f1(params, z).value, rtol=1e-12)
