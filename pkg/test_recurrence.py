import dataclasses

import pytest
from numpy.testing import assert_allclose

from hypertype.errors import UsageError
from hypertype.families import Family, FamilyParams
from hypertype.recurrence import (
    additional_recurrences, apply_ladder, convert_coefficient, inverse_ladder, ladder, ladder_function, ladders,
    round_trip, verify_ladder,
)
from hypertype.series import Normalization
from hypertype.suites import sample_point

CATALOG_SIZES = {
    Family.HYP2F1: 12,
    Family.HYP1F1: 6,
    Family.HYP2F0: 6,
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

LADDER_CASES = [(family, op.index) for family in Family for op in ladders(family)]


def test_catalog_sizes():
    for family, size in CATALOG_SIZES.items():
        catalog = ladders(family)
        assert len(catalog) == size
        assert [op.index for op in catalog] == list(range(1, size + 1))


@pytest.mark.parametrize('family, index', LADDER_CASES)
def test_ladder_identity(family, index):
    params = FamilyParams.from_lie(family, *SAMPLE_LIE[family])
    check = verify_ladder(ladder(family, index), params, sample_point(family))
    assert check.passed(1e-9), check.to_dict()


@pytest.mark.parametrize('family', [Family.HYP2F1, Family.HYP2F0])
def test_additional_recurrences(family):
    params = FamilyParams.from_lie(family, *SAMPLE_LIE[family])
    extra = additional_recurrences(family)
    assert len(extra) == 2
    for op in extra:
        assert verify_ladder(op, params, sample_point(family)).residual < 1e-9


def test_no_additional_recurrences_elsewhere():
    assert additional_recurrences(Family.HERMITE) == []


@pytest.mark.parametrize('family', [Family.HYP2F1, Family.HYP1F1, Family.HYP0F1])
def test_ladder_and_inverse_compose_to_a_multiple(family):
    params = FamilyParams.from_lie(family, *SAMPLE_LIE[family])
    op = ladder(family, 1)
    assert tuple(-s for s in inverse_ladder(op).shift) == tuple(op.shift)
    lhs, rhs = round_trip(op, params, sample_point(family))
    assert_allclose(lhs, rhs, rtol=1e-9, atol=1e-12)


@pytest.mark.parametrize('index', range(1, 7))
def test_coefficient_in_plain_normalization(index):
    params = FamilyParams.from_lie(Family.HYP1F1, *SAMPLE_LIE[Family.HYP1F1])
    op = ladder(Family.HYP1F1, index)
    plain = dataclasses.replace(
        op, norm=Normalization.PLAIN, coefficient=lambda p: convert_coefficient(op, p, Normalization.PLAIN))
    assert verify_ladder(plain, params, 0.6 + 0.4j).residual < 1e-9


def test_bad_index_and_foreign_params():
    with pytest.raises(UsageError):
        ladder(Family.HYP0F1, 3)
    with pytest.raises(UsageError):
        verify_ladder(ladder(Family.HYP1F1, 1), FamilyParams.from_lie(Family.HERMITE, 0.2), 0.5)


def test_ladder_serializes():
    data = ladder(Family.HYP2F1, 1).to_dict()
    assert data['family'] == '2f1'
    assert data['index'] == 1
    assert data['normalization'] == 'BoldI'
    assert len(data['shift']) == 3


def test_apply_ladder_gives_the_shifted_function():
    params = FamilyParams.from_lie(Family.HYP1F1, 0.42, 0.37)
    z = 0.6 + 0.4j
    for op in ladders(Family.HYP1F1):
        lhs = apply_ladder(op, params, z).value
        shifted = ladder_function(Family.HYP1F1, params.shifted(op.shift), z, op.norm).value
        assert_allclose(lhs, op.rhs_coefficient(params) * shifted, rtol=1e-9, atol=1e-12)
