import pytest

from solvlie.scalars import FieldSpec

Q = FieldSpec.rationals()
F2, F3, F5, F7 = (FieldSpec.prime(p) for p in (2, 3, 5, 7))
ALL_FIELDS = [Q, F2, F3, F5, F7]


@pytest.fixture(params=ALL_FIELDS, ids=str)
def field(request):
    return request.param
