import numpy as np
import pytest

from hypertype.connection import (
    CONNECTION_KINDS, alternative_basis_residuals, connection_coeffs, degenerate_generating_series, degenerate_value,
    verify_connection,
)
from hypertype.errors import DegenerateParameters, OutOfDomain, UsageError
from hypertype.families import Family, FamilyParams
from hypertype.series import SolutionKind
from hypertype.suites import connection_sample


def test_thirteen_connection_formulas():
    assert len(CONNECTION_KINDS) == 13


@pytest.mark.parametrize('kind', CONNECTION_KINDS, ids=str)
def test_connection_formula_holds(kind):
    rng = np.random.default_rng(11)
    for _ in range(4):
        params, z = connection_sample(rng, kind)
        check = verify_connection(kind, params, z)
        assert check.passed(1e-8), (str(params), z, check.to_dict())


def test_coefficients_serialize():
    params = FamilyParams.from_lie(Family.HYP0F1, 0.3)
    data = connection_coeffs(SolutionKind.HYP0F1_TILDE_AT_INF, params).to_dict()
    assert data['lhs'] == '0f1:TildeAtInf'
    assert data['basis'] == ['F_a(z)', 'z^{-a} F_{-a}(z)']
    assert len(data['coefficients']) == 2


def test_integer_alpha_is_degenerate():
    params = FamilyParams.from_lie(Family.HYP2F1, 2, 0.3, 0.1)
    with pytest.raises(DegenerateParameters):
        connection_coeffs(SolutionKind.HYP2F1_AT1_INDEX0, params)


def test_solutions_at_zero_have_no_connection_formula():
    with pytest.raises(UsageError):
        connection_coeffs(SolutionKind.HYP2F1_AT0_INDEX0, FamilyParams.from_lie(Family.HYP2F1, 0.2, 0.3, 0.1))
    with pytest.raises(UsageError):
        connection_coeffs(SolutionKind.HYP2F1_AT1_INDEX0, FamilyParams.from_lie(Family.HYP1F1, 0.2, 0.3))


@pytest.mark.parametrize('z', [6 * np.exp(0.7j), 6 * np.exp(2.1j)])
def test_tilde_0f1_alternative_bases(z):
    params = FamilyParams.from_lie(Family.HYP0F1, 0.37)
    residuals = alternative_basis_residuals(params, z)
    assert len(residuals) == 4
    assert max(residuals.values()) < 1e-8


@pytest.mark.parametrize('family, lie', [
    (Family.HYP2F1, (2, 0.3, 0.45)),
    (Family.HYP1F1, (0.4, 3)),
    (Family.HYP0F1, (-2,)),
])
def test_degenerate_series_identity(family, lie):
    params = FamilyParams.from_lie(family, *lie)
    check = degenerate_value(family, params, 0.35 + 0.2j)
    assert check.residual < 1e-10


def test_degenerate_needs_integer_index():
    with pytest.raises(UsageError):
        degenerate_value(Family.HYP0F1, FamilyParams.from_lie(Family.HYP0F1, 0.5), 0.3)


@pytest.mark.parametrize('family, exponents, t, z, terms', [
    (Family.HYP2F1, (0.3, 0.7), 0.6 + 0.1j, 0.15, 60),
    (Family.HYP1F1, (0.4,), 1.2, 0.3 - 0.2j, 40),
    (Family.HYP0F1, (), 0.8j, 0.5, 25),
])
def test_degenerate_generating_series(family, exponents, t, z, terms):
    assert abs(degenerate_generating_series(family, exponents, t, z, terms=terms)) < 1e-10


def test_generating_series_domain():
    with pytest.raises(OutOfDomain):
        degenerate_generating_series(Family.HYP2F1, (0.3, 0.7), 0.2, 0.5)
