import math

import numpy as np
import pytest

from hypertype import representations
from hypertype.errors import ParameterConstraintViolated, UsageError
from hypertype.numeric_core import SeriesResult, Status
from hypertype.representations import (
    GAMMA_REPRESENTATIONS, REPRESENTATIONS, gamma_identity_checks, list_representations, radius_independence,
    representation, representation_boundary_term, sample_representation, verify_representation,
)

EULER = '2f1-euler'
EULER_PARAMS = {'a': 0.5, 'b': 0.3, 'c': 1.6}


def by_id(reps):
    return pytest.mark.parametrize('rep', reps, ids=lambda r: r.id)


@by_id(REPRESENTATIONS)
def test_representation_at_its_default_point(rep):
    params, z = rep.default
    check = verify_representation(rep.id, params, z)
    assert check.passed(1e-7), check.to_dict()


@by_id(REPRESENTATIONS)
def test_representation_at_a_random_point(rep):
    params, z = sample_representation(rep, np.random.default_rng(5))
    assert verify_representation(rep.id, params, z).residual < 1e-7


@by_id([rep for rep in REPRESENTATIONS if '^' in rep.contour])
def test_loop_value_does_not_depend_on_the_radius(rep):
    params, z = rep.default
    assert radius_independence(rep.id, params, z) < 1e-9


@by_id([rep for rep in REPRESENTATIONS if rep.witness is not None])
def test_boundary_term_vanishes_on_the_contour(rep):
    params, z = rep.default
    assert abs(representation_boundary_term(rep.id, params, z)) < 1e-9


def test_gamma_identities():
    checks = gamma_identity_checks()
    assert len(checks) == len(GAMMA_REPRESENTATIONS)
    assert all(check.passed(1e-9) for check in checks)


def test_inadmissible_contour_breaks_the_identity():
    check = verify_representation(EULER, EULER_PARAMS, 0.4, contour='[1, 2]')
    assert check.residual > 1e-3
    assert check.contour == '[1, 2]'


def test_constraints_are_enforced():
    with pytest.raises(ParameterConstraintViolated):
        verify_representation(EULER, {'a': -0.5, 'b': 0.3, 'c': 1.6}, 0.4)


def test_parameter_names_are_checked():
    with pytest.raises(UsageError):
        verify_representation(EULER, {'a': 0.5, 'b': 0.3}, 0.4)
    with pytest.raises(UsageError):
        verify_representation(EULER, {**EULER_PARAMS, 'd': 1}, 0.4)
    with pytest.raises(UsageError):
        representation('2f1-nowhere')


def test_catalog_groups():
    groups = {rep.group for rep in REPRESENTATIONS}
    assert {'gamma', '2f1', '1f1', '2f0', '0f1', 'gegenbauer'} <= groups
    assert all(rep.group == '2f1' for rep in list_representations('2f1'))
    assert representation('hankel').to_dict()['contour'] == '[-inf, 0^+, -inf['


@pytest.mark.parametrize('rep_id, params, z, tol', [
    ('beta-b0', {'u': 0.411, 'v': 0.345}, 0, 1e-9),
    ('beta-b0', {'u': 0.31, 'v': 0.3}, 0, 1e-9),
    ('gegenbauer-ka1a', {'alpha': 0.384, 'lam': -0.275}, 0.4, 1e-8),
])
def test_strong_endpoint_singularities(rep_id, params, z, tol):
    check = verify_representation(rep_id, params, z)
    assert check.passed(tol), check.to_dict()


@pytest.mark.parametrize('u', [0.3, 0.2, 0.45])
def test_slowly_decaying_ray_tail(u):
    # the integrand decays like s^(2u-2) on [1, inf[
    check = verify_representation('sqrt-pi-2', {'u': u}, 0)
    assert check.passed(1e-9), check.to_dict()
    assert check.quad_error < 1e-8


def test_failed_quadrature_fails_the_check(monkeypatch):
    converged = representations.integrate

    def failing(f, gamma_, tol=None):
        result = converged(f, gamma_, tol)
        return SeriesResult(result.value, 1.0, result.terms_used, Status.FAILED)

    monkeypatch.setattr(representations, 'integrate', failing)
    check = verify_representation('beta-b0', {'u': 0.7, 'v': 1.4})
    assert check.residual < 1e-9
    assert check.status is Status.FAILED
    assert not check.passed(1e-6)
    assert check.checked_residual == math.inf
    assert check.to_dict()['status'] == 'Failed'
