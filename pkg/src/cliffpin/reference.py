"""Literal reference data the computed results are compared against.

Nothing here feeds a computation; these are the expected outputs for the
canonical gamma matrices, the spacetime basis and the classical tables.
"""

from __future__ import annotations

from .groups import GroupId
from .matrix import Matrix

_i, _mi = "0+1*i", "0-1*i"

# canonical gamma basis: W = g1 g2 g3 g4, E = g1 g3, C = E W^T
DIRAC_W = Matrix([[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]])
DIRAC_E = Matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
DIRAC_C = Matrix([[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]])

# spacetime basis Gamma_0..Gamma_3
SPACETIME_E = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
SPACETIME_C = Matrix([[0, 0, 0, _mi], [0, 0, _i, 0], [0, _mi, 0, 0], [_i, 0, 0, 0]])

# (row, column) -> (sign, product) for the group {I, W, E, C} of the gamma basis
WEC_TABLE = {
    ("I", "I"): (1, "I"), ("I", "W"): (1, "W"), ("I", "E"): (1, "E"), ("I", "C"): (1, "C"),
    ("W", "I"): (1, "W"), ("W", "W"): (1, "I"), ("W", "E"): (1, "C"), ("W", "C"): (1, "E"),
    ("E", "I"): (1, "E"), ("E", "W"): (1, "C"), ("E", "E"): (-1, "I"), ("E", "C"): (-1, "W"),
    ("C", "I"): (1, "C"), ("C", "W"): (1, "E"), ("C", "E"): (-1, "W"), ("C", "C"): (-1, "I"),
}

# the same for {1, P, T, PT} with P = g4, T = g1 g3
PT_TABLE = {
    ("1", "1"): (1, "1"), ("1", "P"): (1, "P"), ("1", "T"): (1, "T"), ("1", "PT"): (1, "PT"),
    ("P", "1"): (1, "P"), ("P", "P"): (1, "1"), ("P", "T"): (1, "PT"), ("P", "PT"): (1, "T"),
    ("T", "1"): (1, "T"), ("T", "P"): (1, "PT"), ("T", "T"): (-1, "1"), ("T", "PT"): (-1, "P"),
    ("PT", "1"): (1, "PT"), ("PT", "P"): (1, "T"), ("PT", "T"): (-1, "P"), ("PT", "PT"): (-1, "1"),
}

# (a, b, c) -> double cover of the Klein group, and whether PT = -TP
ABC_TABLE = {
    (1, 1, 1): (GroupId.Z2xZ2xZ2, False),
    (1, -1, -1): (GroupId.Z4xZ2, False),
    (-1, 1, -1): (GroupId.Z4xZ2, False),
    (-1, -1, 1): (GroupId.Z4xZ2, False),
    (-1, -1, -1): (GroupId.Q4, True),
    (-1, 1, 1): (GroupId.D4, True),
    (1, -1, 1): (GroupId.D4, True),
    (1, 1, -1): (GroupId.D4, True),
}

# composition table of {Id, Star, Rev, RevStar}: (f, g) -> f o g
AUTO_TABLE = {
    ("Id", "Id"): "Id", ("Id", "Star"): "Star", ("Id", "Rev"): "Rev", ("Id", "RevStar"): "RevStar",
    ("Star", "Id"): "Star", ("Star", "Star"): "Id", ("Star", "Rev"): "RevStar", ("Star", "RevStar"): "Rev",
    ("Rev", "Id"): "Rev", ("Rev", "Star"): "RevStar", ("Rev", "Rev"): "Id", ("Rev", "RevStar"): "Star",
    ("RevStar", "Id"): "RevStar", ("RevStar", "Star"): "Rev", ("RevStar", "Rev"): "Star", ("RevStar", "RevStar"): "Id",
}


def claimed_transfers(n: int, complex_field: bool) -> dict[str, bool]:
    """Classical mod-8 statement of which automorphisms survive the map of an
    odd n-dimensional algebra onto its (n-1)-dimensional quotient.

    Complex: reversion always, conjugation iff n = 1, 5 (mod 8), grade
    involution never. Real (omega^2 = +1 classes): reversion only.
    """
    if n % 2 == 0:
        raise ValueError("transfer statements concern odd n")
    return {
        "Id": True,
        "Star": False,
        "Rev": True,
        "RevStar": complex_field and n % 8 in (1, 5),
    }


def claimed_quotient_kind(n: int, complex_field: bool) -> str:
    return "Pin_bc" if complex_field and n % 8 in (1, 5) else "Pin_b"
