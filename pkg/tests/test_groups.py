import pytest

from cliffpin.errors import GroupTooLarge
from cliffpin.gaussian import I
from cliffpin.groups import GroupId, classify_group, closure, quotient_group_id
from cliffpin.matrix import Matrix

# independent presentations of the five groups of order 8 and the two of order 4
ROT = Matrix([[0, -1], [1, 0]])
FLIP = Matrix([[1, 0], [0, -1]])
QI = Matrix([[I, 0], [0, -I]])
QJ = Matrix([[0, 1], [-1, 0]])


def _diag(*v):
    return Matrix([[v[i] if i == j else 0 for j in range(len(v))] for i in range(len(v))])


def _perm8():
    rows = [[1 if j == (i + 1) % 8 else 0 for j in range(8)] for i in range(8)]
    return Matrix(rows)


@pytest.mark.parametrize(
    "gens, want",
    [
        ([ROT, FLIP], GroupId.D4),
        ([QI, QJ], GroupId.Q4),
        ([_diag(I, 1), _diag(1, -1)], GroupId.Z4xZ2),
        ([_diag(-1, 1, 1), _diag(1, -1, 1), _diag(1, 1, -1)], GroupId.Z2xZ2xZ2),
        ([_perm8()], GroupId.Z8),
        ([ROT], GroupId.Z4),
        ([_diag(-1, 1), _diag(1, -1)], GroupId.Z2xZ2),
    ],
)
def test_classify_known_groups(gens, want):
    g = closure(gens)
    assert g.order == want.order
    assert g.is_closed()
    assert classify_group(g) is want


def test_quotients():
    assert quotient_group_id(closure([QI, QJ])) is GroupId.Z2xZ2
    assert quotient_group_id(closure([ROT, FLIP])) is GroupId.Z2xZ2
    assert quotient_group_id(closure([_diag(I, 1), _diag(-1, -1)])) is GroupId.Z4


def test_closure_cap():
    with pytest.raises(GroupTooLarge):
        closure([Matrix([[1, 1], [0, 1]])], cap=10)


def test_pretty_names():
    assert GroupId.Z4xZ2.pretty == "Z2⊗Z4"
    assert GroupId.Z2xZ2xZ2.pretty == "Z2⊗Z2⊗Z2"
