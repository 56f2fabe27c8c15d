"""Faithful matrix representations of even-dimensional algebras and the
matrices W, E, C of the grade involution, reversion and conjugation.

The constructed basis acts on an auxiliary algebra C_m (all units square
to +1, basis indexed by subsets of {1..m}):

    Ecal_j     : L -> L eps_j
    Ecal_{m+j} : L -> -i eps_j L  (L odd),  +i eps_j L  (L even)

All 2m operators square to +I, the first m are symmetric and the last m
antisymmetric. Generator k is beta_k * Ecal_k with beta_k in {1, i}.
Dropping the factor i gives the real route, whose last m operators square
to -I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .algebra import COMPLEX, Multivector, Signature, _reorder_parity, blade_name
from .automorphisms import AutoKind, apply_auto
from .errors import DimensionError, FieldError, InvalidBasis, SignatureMismatch
from .gaussian import ONE, I, GaussianRational
from .matrix import Matrix, rank

CONSTRUCTED = "constructed"
USER_SUPPLIED = "user_supplied"


@dataclass(frozen=True, eq=False)
class RepBasis:
    sig: Signature
    gens: tuple[Matrix, ...]
    origin: str = USER_SUPPLIED
    name: str = ""
    _images: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        if self.sig.n % 2:
            raise DimensionError(f"matrix bases need even n, got {self.sig}")
        if len(self.gens) != self.sig.n:
            raise InvalidBasis(f"{self.sig} needs {self.sig.n} generators, got {len(self.gens)}")
        dims = {g.dim for g in self.gens}
        if len(dims) != 1:
            raise InvalidBasis(f"generators have mixed dimensions {sorted(dims)}")

    @property
    def m(self) -> int:
        return self.sig.n // 2

    @property
    def dim(self) -> int:
        return self.gens[0].dim

    def blade_image(self, mask: int) -> Matrix:
        """Ordered product of generator images for the blade ``mask``."""
        img = self._images.get(mask)
        if img is None:
            if mask == 0:
                img = Matrix.identity(self.dim)
            else:
                top = mask.bit_length() - 1
                img = self.blade_image(mask & ~(1 << top)) @ self.gens[top]
            self._images[mask] = img
        return img

    def subset_product(self, indices) -> Matrix:
        """Product of generators with the given 1-based indices, in ascending order."""
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        return self.blade_image(mask)


# construction ----------------------------------------------------------


def _aux_columns(m: int):
    """Signed-permutation data for right and left multiplication by eps_j in C_m."""
    size = 1 << m
    right, left = [], []
    for j in range(m):
        bit = 1 << j
        r_col, l_col = [], []
        for b in range(size):
            # b * eps_j and eps_j * b, every unit squaring to +1
            r_col.append((-1 if _reorder_parity(b, bit) else 1, b ^ bit))
            l_col.append((-1 if _reorder_parity(bit, b) else 1, b ^ bit))
        right.append(r_col)
        left.append(l_col)
    return right, left


def _operator(cols, coeff) -> Matrix:
    size = len(cols)
    re = np.zeros((size, size), dtype=object)
    im = np.zeros((size, size), dtype=object)
    for b, (sign, out) in enumerate(cols):
        c = coeff(b) * sign
        re[out, b] = int(c.re)
        im[out, b] = int(c.im)
    return Matrix._raw(re, im, 1)


def aux_operators(m: int, complexify: bool = True) -> list[Matrix]:
    """The 2m operators Ecal_1..Ecal_{2m} before the beta factors."""
    right, left = _aux_columns(m)
    ops = [_operator(right[j], lambda b: ONE) for j in range(m)]
    for j in range(m):
        if complexify:
            ops.append(_operator(left[j], lambda b: -I if b.bit_count() & 1 else I))
        else:
            ops.append(_operator(left[j], lambda b: GaussianRational(-1 if b.bit_count() & 1 else 1)))
    return ops


def build_rep(sig: Signature, complexify: bool = False) -> RepBasis:
    """Constructed basis of size 2^m for an even-dimensional signature.

    Complex signatures, or ``complexify=True``, use the operators with the
    factor i and beta_k = i wherever the generator must square to -1. The
    real route has no free choice: its squares are (+)^m (-)^m.
    """
    if sig.n % 2:
        raise DimensionError(f"build_rep needs even n, got {sig}")
    m = sig.n // 2
    if sig.is_complex or complexify:
        ops = aux_operators(m, complexify=True)
        gens = [op if s == 1 else op * I for op, s in zip(ops, sig.squares)]
    else:
        ops = aux_operators(m, complexify=False)
        natural = (1,) * m + (-1,) * m
        if sig.squares != natural:
            raise FieldError(f"{sig} needs the complexified route (real operators square to {natural})")
        gens = ops
    return RepBasis(sig, tuple(gens), CONSTRUCTED, "constructed")


def constructed_basis(sig: Signature) -> RepBasis:
    """Real route when it exists, otherwise the complexified operators."""
    if not sig.is_complex:
        try:
            return build_rep(sig)
        except FieldError:
            pass
    return build_rep(sig, complexify=True)


def _m(rows) -> Matrix:
    return Matrix(rows)


_i, _mi = "0+1*i", "0-1*i"

DIRAC_GAMMAS = (
    _m([[0, 0, 0, _mi], [0, 0, _mi, 0], [0, _i, 0, 0], [_i, 0, 0, 0]]),
    _m([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]),
    _m([[0, 0, _mi, 0], [0, 0, 0, _i], [_i, 0, 0, 0], [0, _mi, 0, 0]]),
    _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
)

_SIGMA = (
    ((0, 1), (1, 0)),
    ((0, _mi), (_i, 0)),
    ((1, 0), (0, -1)),
)


def _block(a, b, c, d) -> Matrix:
    rows = []
    for top, bottom in ((a, b), (c, d)):
        for r in range(2):
            rows.append(list(top[r]) + list(bottom[r]))
    return Matrix(rows)


def _neg2(s):
    return tuple(tuple(-GaussianRational.coerce(v) for v in row) for row in s)


_I2 = ((1, 0), (0, 1))
_Z2 = ((0, 0), (0, 0))

SPACETIME_GAMMAS = (
    _block(_I2, _Z2, _Z2, _neg2(_I2)),
    *(_block(_Z2, s, _neg2(s), _Z2) for s in _SIGMA),
)


def dirac_basis(field: str = "real") -> RepBasis:
    """The canonical gamma matrices. All four square to +I, so the real
    signature tag is (4,0); the matrices themselves are complex."""
    return RepBasis(Signature(4, 0, field), DIRAC_GAMMAS, USER_SUPPLIED, "dirac")


def spacetime_basis() -> RepBasis:
    """Gamma_0 = diag(I, -I), Gamma_k = [[0, s_k], [-s_k, 0]] for Cl(1,3)."""
    return RepBasis(Signature(1, 3), SPACETIME_GAMMAS, USER_SUPPLIED, "spacetime")


# validation ------------------------------------------------------------


@dataclass(frozen=True)
class RepReport:
    ok: bool
    failures: tuple[str, ...]
    rank: int | None
    expected_rank: int


def validate_rep(basis: RepBasis, check_rank: bool = True) -> RepReport:
    """Clifford relations plus faithfulness (exact rank of all blade images)."""
    failures = []
    d = basis.dim
    m = basis.m
    if d & (d - 1):
        failures.append(f"dimension {d} is not a power of two")
    ident = Matrix.identity(d)
    for i, g in enumerate(basis.gens, start=1):
        want = basis.sig.square(i)
        if g @ g != ident * want:
            failures.append(f"square of generator {i} is not {want:+d}*I")
    for i in range(len(basis.gens)):
        for j in range(i + 1, len(basis.gens)):
            a, b = basis.gens[i], basis.gens[j]
            if not (a @ b + b @ a).is_zero():
                failures.append(f"generators {i + 1} and {j + 1} do not anticommute")
    r = None
    if check_rank:
        vectors = [basis.blade_image(mask).flat() for mask in range(basis.sig.dim)]
        r = rank(vectors)
        if r != 4**m:
            failures.append(f"blade images have rank {r}, expected {4**m}")
    return RepReport(not failures, tuple(failures), r, 4**m)


def rep_of(x: Multivector, basis: RepBasis) -> Matrix:
    """Linear extension of the blade images."""
    a, b = x.sig, basis.sig
    if (a.p, a.q, a.sign_rule) != (b.p, b.q, b.sign_rule):
        raise SignatureMismatch(f"element of {a} cannot be represented in a basis for {b}")
    out = Matrix.zeros(basis.dim)
    for mask, c in x.terms.items():
        out = out + basis.blade_image(mask) * c
    return out


# automorphism matrices -------------------------------------------------


class WMatrices(NamedTuple):
    W: Matrix
    W_prime: Matrix | None
    a: int
    epsilon: GaussianRational


class AutoMatrix(NamedTuple):
    matrix: Matrix
    square: int
    factors: tuple[int, ...]

    @property
    def label(self) -> str:
        return "*".join(f"g{i}" for i in self.factors) or "I"


def _square_sign(mat: Matrix) -> int:
    s = (mat @ mat).scalar_value()
    if s is None or s not in (ONE, -ONE):
        raise InvalidBasis("automorphism matrix does not square to +-I")
    return 1 if s == ONE else -1


def matrix_W(basis: RepBasis, require_prime: bool = True) -> WMatrices:
    """W = product of all generators, a = W^2, W' = epsilon*W with W'^2 = I.

    Over the reals epsilon = i is unavailable; with ``require_prime`` that
    raises, otherwise W' is reported as None.
    """
    W = basis.blade_image(basis.sig.dim - 1)
    a = _square_sign(W)
    eps = ONE if a == 1 else I
    if eps == I and not basis.sig.is_complex:
        if require_prime:
            raise FieldError(f"W^2 = -I for {basis.sig}: epsilon = i is not available over the reals")
        return WMatrices(W, None, a, eps)
    return WMatrices(W, W * eps, a, eps)


def _transposes(basis: RepBasis) -> list[Matrix]:
    return [g.T for g in basis.gens]


def _satisfies(cand: Matrix, basis: RepBasis, gts: list[Matrix], sign: int) -> bool:
    # cand g^T cand^{-1} = sign*g  <=>  cand g^T = sign * g cand
    for g, gt in zip(basis.gens, gts):
        lhs = cand @ gt
        rhs = g @ cand
        if lhs != (rhs if sign == 1 else -rhs):
            return False
    return True


def _subsets(n: int):
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)


def transpose_solutions(basis: RepBasis, sign: int) -> list[tuple[int, ...]]:
    """Every generator subset whose product X obeys X g^T X^{-1} = sign*g."""
    gts = _transposes(basis)
    return [s for s in _subsets(basis.sig.n) if _satisfies(basis.subset_product(s), basis, gts, sign)]


def _search(basis: RepBasis, sign: int) -> AutoMatrix:
    gts = _transposes(basis)
    for s in _subsets(basis.sig.n):
        cand = basis.subset_product(s)
        if _satisfies(cand, basis, gts, sign):
            return AutoMatrix(cand, _square_sign(cand), s)
    what = "E (g^T -> g)" if sign == 1 else "C (g^T -> -g)"
    raise InvalidBasis(f"no generator-subset product realizes {what} for this basis")


def matrix_E(basis: RepBasis) -> AutoMatrix:
    """First subset product (by size, then lexicographic) with E g^T E^{-1} = g."""
    return _search(basis, 1)


def matrix_C(basis: RepBasis) -> AutoMatrix:
    """First subset product with C g^T C^{-1} = -g, cross-checked against E W^T."""
    found = _search(basis, -1)
    E = matrix_E(basis).matrix
    W = matrix_W(basis, require_prime=False).W
    if found.matrix.ratio_to(E @ W.T) is None:
        raise InvalidBasis("C is not proportional to E W^T")
    return found


@dataclass(frozen=True)
class AutoMatrixReport:
    ok: bool
    failures: tuple[str, ...]
    checked: int


def automorphism_matrix_report(basis: RepBasis) -> AutoMatrixReport:
    """Check on every blade x:
    E rep(x)^T E^-1 = rep(Rev x), C rep(x)^T C^-1 = rep(RevStar x),
    W rep(x) W^-1 = rep(Star x)."""
    E = matrix_E(basis).matrix
    C = matrix_C(basis).matrix
    W = matrix_W(basis, require_prime=False).W
    Ei, Ci, Wi = E.inverse(), C.inverse(), W.inverse()
    failures = []
    sig = basis.sig
    for mask in range(sig.dim):
        x = Multivector.blade(sig, mask)
        X = basis.blade_image(mask)
        checks = (
            ("E", E @ X.T @ Ei, AutoKind.REV),
            ("C", C @ X.T @ Ci, AutoKind.REVSTAR),
            ("W", W @ X @ Wi, AutoKind.STAR),
        )
        for name, got, kind in checks:
            if got != rep_of(apply_auto(kind, x), basis):
                failures.append(f"{name} fails to realize {kind.value} on {blade_name(mask)}")
    return AutoMatrixReport(not failures, tuple(failures), sig.dim)


def complexified(basis: RepBasis) -> RepBasis:
    """The same matrices read as a basis of the complex algebra."""
    sig = basis.sig.with_field(COMPLEX)
    return RepBasis(sig, basis.gens, basis.origin, basis.name)
