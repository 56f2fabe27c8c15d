"""Dense exact matrices over Q(i) and exact linear algebra.

A matrix is stored as two numpy object arrays of Python ints (real and
imaginary numerators) over one positive common denominator, so matrix
products run in numpy's loops while staying exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .gaussian import ONE, ZERO, GaussianRational, format_exact


def _int_array(rows) -> np.ndarray:
    arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            arr[i, j] = v
    return arr


class Matrix:
    __slots__ = ("re", "im", "den", "_key")

    def __init__(self, rows):
        rows = [[GaussianRational.coerce(v) for v in row] for row in rows]
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("Matrix expects a non-empty square array")
        den = 1
        for row in rows:
            for v in row:
                den = lcm(den, v.re.denominator, v.im.denominator)
        re = _int_array([[int(v.re * den) for v in row] for row in rows])
        im = _int_array([[int(v.im * den) for v in row] for row in rows])
        self._set(re, im, den)

    def _set(self, re, im, den):
        if den != 1:
            g = den
            for v in re.flat:
                if g == 1:
                    break
                g = gcd(g, v)
            for v in im.flat:
                if g == 1:
                    break
                g = gcd(g, v)
            if g > 1:
                re = re // g
                im = im // g
                den //= g
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, re, im, den=1) -> Matrix:
        obj = object.__new__(cls)
        obj._set(re, im, den)
        return obj

    @classmethod
    def identity(cls, d: int) -> Matrix:
        re = np.zeros((d, d), dtype=object)
        for i in range(d):
            re[i, i] = 1
        return cls._raw(re, np.zeros((d, d), dtype=object), 1)

    @classmethod
    def zeros(cls, d: int) -> Matrix:
        z = np.zeros((d, d), dtype=object)
        return cls._raw(z, z.copy(), 1)

    @classmethod
    def scalar(cls, d: int, c) -> Matrix:
        return cls.identity(d) * c

    # views ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return GaussianRational(Fraction(int(self.re[i, j]), self.den), Fraction(int(self.im[i, j]), self.den))

    def rows(self) -> list[list[GaussianRational]]:
        d = self.dim
        return [[self[i, j] for j in range(d)] for i in range(d)]

    def to_strings(self) -> list[list[str]]:
        return [[format_exact(v) for v in row] for row in self.rows()]

    @property
    def is_real(self) -> bool:
        return not any(self.im.flat)

    def key(self):
        if self._key is None:
            object.__setattr__(self, "_key", (self.den, tuple(self.re.flat), tuple(self.im.flat)))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Matrix(" + repr(self.to_strings()) + ")"

    # arithmetic -------------------------------------------------------

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        a_real = self.is_real
        b_real = other.is_real
        if a_real and b_real:
            re = self.re.dot(other.re)
            im = np.zeros_like(re)
        elif a_real:
            re = self.re.dot(other.re)
            im = self.re.dot(other.im)
        elif b_real:
            re = self.re.dot(other.re)
            im = self.im.dot(other.re)
        else:
            re = self.re.dot(other.re) - self.im.dot(other.im)
            im = self.re.dot(other.im) + self.im.dot(other.re)
        return Matrix._raw(re, im, self.den * other.den)

    def _aligned(self, other: Matrix):
        d = lcm(self.den, other.den)
        fa, fb = d // self.den, d // other.den
        return self.re * fa, self.im * fa, other.re * fb, other.im * fb, d

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        ar, ai, br, bi, d = self._aligned(other)
        return Matrix._raw(ar + br, ai + bi, d)

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        ar, ai, br, bi, d = self._aligned(other)
        return Matrix._raw(ar - br, ai - bi, d)

    def __neg__(self) -> Matrix:
        return Matrix._raw(-self.re, -self.im, self.den)

    def __mul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            return NotImplemented
        c = GaussianRational.coerce(c)
        l = lcm(c.re.denominator, c.im.denominator)
        cr = int(c.re * l)
        ci = int(c.im * l)
        re = self.re * cr - self.im * ci
        im = self.re * ci + self.im * cr
        return Matrix._raw(re, im, self.den * l)

    __rmul__ = __mul__

    @property
    def T(self) -> Matrix:
        return Matrix._raw(self.re.T.copy(), self.im.T.copy(), self.den)

    def conj(self) -> Matrix:
        return Matrix._raw(self.re.copy(), -self.im, self.den)

    @property
    def H(self) -> Matrix:
        return self.conj().T

    def is_zero(self) -> bool:
        return not any(self.re.flat) and not any(self.im.flat)

    def scalar_value(self) -> GaussianRational | None:
        """c if self == c*I, else None."""
        d = self.dim
        c = self[0, 0]
        for i in range(d):
            for j in range(d):
                if i == j:
                    if self.re[i, j] != self.re[0, 0] or self.im[i, j] != self.im[0, 0]:
                        return None
                elif self.re[i, j] or self.im[i, j]:
                    return None
        return c

    def ratio_to(self, other: Matrix) -> GaussianRational | None:
        """c with self == c*other (other nonzero), else None."""
        d = self.dim
        for i in range(d):
            for j in range(d):
                if other.re[i, j] or other.im[i, j]:
                    c = self[i, j] / other[i, j]
                    return c if self == other * c else None
        return None

    def inverse(self) -> Matrix:
        inv = invert(self.rows())
        if inv is None:
            raise ZeroDivisionError("singular matrix")
        return Matrix(inv)

    def flat(self) -> list[GaussianRational]:
        return [v for row in self.rows() for v in row]


def commute_sign(a: Matrix, b: Matrix) -> int:
    """+1 if ab = ba, -1 if ab = -ba, 0 otherwise."""
    ab = a @ b
    ba = b @ a
    if ab == ba:
        return 1
    if ab == -ba:
        return -1
    return 0


def _eliminate(rows: list[list[GaussianRational]], ncols: int):
    """In-place forward elimination; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv if v else ZERO for v in rows[r]]
        pr = rows[r]
        nz = [k for k, v in enumerate(pr) if v]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                row = rows[i]
                for k in nz:
                    row[k] = row[k] - f * pr[k]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


# prime p = 1 (mod 4), so -1 has a square root mod p and i can be mapped
_PRIME = 4611686018427388073
_SQRT_M1 = pow(3, (_PRIME - 1) // 4, _PRIME)


def _rank_mod_p(rows: list[list[GaussianRational]]) -> int:
    p = _PRIME
    work = []
    for row in rows:
        den = 1
        for v in row:
            den = lcm(den, v.re.denominator, v.im.denominator)
        work.append([(int(v.re * den) + _SQRT_M1 * int(v.im * den)) % p for v in row])
    r = 0
    ncols = len(work[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], p - 2, p)
        pr = [v * inv % p for v in work[r]]
        work[r] = pr
        for i in range(r + 1, len(work)):
            f = work[i][c]
            if f:
                work[i] = [(a - f * b) % p for a, b in zip(work[i], pr)]
        r += 1
        if r == len(work):
            break
    return r


def rank(vectors: list[list]) -> int:
    """Exact rank over Q(i) of a list of equal-length vectors.

    A full rank modulo a prime p = 1 (mod 4) certifies full rank over Q(i)
    (some maximal minor is nonzero mod p, hence nonzero); anything short of
    that falls back to exact elimination over the rationals.
    """
    if not vectors:
        return 0
    rows = [[GaussianRational.coerce(v) for v in vec] for vec in vectors]
    full = min(len(rows), len(rows[0]))
    if _rank_mod_p(rows) == full:
        return full
    return len(_eliminate(rows, len(rows[0])))


def solve(mat: list[list], rhs: list) -> list[GaussianRational] | None:
    """Solve a square system exactly; None if singular or inconsistent."""
    n = len(mat)
    rows = [[GaussianRational.coerce(v) for v in row] + [GaussianRational.coerce(b)] for row, b in zip(mat, rhs)]
    pivots = _eliminate(rows, n)
    if len(pivots) < n:
        return None
    return [rows[i][n] for i in range(n)]


def invert(mat: list[list]) -> list[list[GaussianRational]] | None:
    n = len(mat)
    rows = [
        [GaussianRational.coerce(v) for v in row] + [ONE if i == j else ZERO for j in range(n)]
        for i, row in enumerate(mat)
    ]
    pivots = _eliminate(rows, n)
    if len(pivots) < n:
        return None
    return [row[n:] for row in rows]
