"""Blade-level arithmetic for Cl(p,q) and its complexification.

Blades are bitmasks: bit ``i-1`` set means the generator ``e_i`` is present,
mask 0 is the unit. Products are computed from transposition counts and the
generator squares, never from mod-8 lookup tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

from .errors import FieldError, SignatureMismatch
from .gaussian import ONE, ZERO, GaussianRational, I

REAL = "real"
COMPLEX = "complex"
PLUS_FIRST = "plus_first"
MINUS_FIRST = "minus_first"


@dataclass(frozen=True)
class Signature:
    """Generator counts plus coefficient field and ordering convention.

    ``plus_first``: e_1..e_p square to +1, e_{p+1}..e_n to -1.
    ``minus_first``: e_1..e_p square to -1, the remaining q to +1. This is
    the ordering under which the classical odd-n mod-8 tables for the
    volume element and center hold verbatim.
    """

    p: int
    q: int
    field: str = REAL
    sign_rule: str = PLUS_FIRST

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ValueError(f"invalid signature ({self.p},{self.q})")
        if self.field not in (REAL, COMPLEX):
            raise ValueError(f"unknown field {self.field!r}")
        if self.sign_rule not in (PLUS_FIRST, MINUS_FIRST):
            raise ValueError(f"unknown sign rule {self.sign_rule!r}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def is_complex(self) -> bool:
        return self.field == COMPLEX

    @property
    def neg_mask(self) -> int:
        """Bitmask of generators squaring to -1."""
        if self.sign_rule == PLUS_FIRST:
            return ((1 << self.q) - 1) << self.p
        return (1 << self.p) - 1

    def square(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"generator e_{i} out of range 1..{self.n}")
        return -1 if (self.neg_mask >> (i - 1)) & 1 else 1

    @property
    def squares(self) -> tuple[int, ...]:
        return tuple(self.square(i) for i in range(1, self.n + 1))

    @property
    def dim(self) -> int:
        return 1 << self.n

    def with_field(self, field: str) -> Signature:
        return Signature(self.p, self.q, field, self.sign_rule)

    def drop_last(self) -> Signature:
        """Signature of the subalgebra generated by e_1..e_{n-1}."""
        if self.n < 2:
            raise ValueError("no generators left after dropping e_n")
        if self.q > 0:
            return Signature(self.p, self.q - 1, self.field, self.sign_rule)
        return Signature(self.p - 1, self.q, self.field, self.sign_rule)

    def label(self) -> str:
        if self.is_complex:
            return f"C_{self.n}[{self.p},{self.q}]"
        return f"Cl({self.p},{self.q})"

    def __str__(self):
        return self.label()


def _reorder_parity(a: int, b: int) -> int:
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return swaps & 1


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of two basis blades: returns ``(sign, mask)`` with sign in {+1, -1}."""
    limit = 1 << sig.n
    if not (0 <= a < limit and 0 <= b < limit):
        raise IndexError(f"blade mask out of range for n={sig.n}")
    parity = _reorder_parity(a, b) + (a & b & sig.neg_mask).bit_count()
    return (-1 if parity & 1 else 1), a ^ b


def blade_grade(mask: int) -> int:
    return mask.bit_count()


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    idx = [str(i + 1) for i in range(mask.bit_length()) if (mask >> i) & 1]
    sep = "," if any(len(s) > 1 for s in idx) else ""
    return "e" + sep.join(idx)


def mask_of(*indices: int) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


class Multivector:
    """Sparse element of Cl(p,q) or C_n with exact coefficients.

    Values are immutable; arithmetic returns new objects.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms: Mapping[int, object] | Iterable | None = None):
        clean: dict[int, GaussianRational] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            limit = 1 << sig.n
            for mask, c in items:
                if not 0 <= mask < limit:
                    raise IndexError(f"blade mask {mask} out of range for n={sig.n}")
                c = GaussianRational.coerce(c)
                if not c:
                    continue
                if c.im and not sig.is_complex:
                    raise FieldError(f"imaginary coefficient in real algebra {sig}")
                clean[mask] = clean.get(mask, ZERO) + c
                if not clean[mask]:
                    del clean[mask]
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def _raw(cls, sig: Signature, terms: dict) -> Multivector:
        # trusted constructor: terms already clean
        obj = object.__new__(cls)
        object.__setattr__(obj, "sig", sig)
        object.__setattr__(obj, "_terms", terms)
        return obj

    # constructors -----------------------------------------------------

    @classmethod
    def scalar(cls, sig: Signature, c=1) -> Multivector:
        return cls(sig, {0: c})

    @classmethod
    def zero(cls, sig: Signature) -> Multivector:
        return cls._raw(sig, {})

    @classmethod
    def blade(cls, sig: Signature, mask: int, c=1) -> Multivector:
        return cls(sig, {mask: c})

    @classmethod
    def e(cls, sig: Signature, *indices: int) -> Multivector:
        """Ordered product e_{i1} e_{i2} ... of generators (any order, repeats allowed)."""
        sign, mask = 1, 0
        for i in indices:
            if not 1 <= i <= sig.n:
                raise IndexError(f"generator e_{i} out of range 1..{sig.n}")
            s, mask = blade_product(mask, 1 << (i - 1), sig)
            sign *= s
        return cls._raw(sig, {mask: GaussianRational(sign)})

    # views ------------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, GaussianRational]:
        return MappingProxyType(self._terms)

    def coefficient(self, mask: int) -> GaussianRational:
        return self._terms.get(mask, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self._terms)

    def scalar_part(self) -> GaussianRational:
        return self._terms.get(0, ZERO)

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self._terms}

    def grade(self, k: int) -> Multivector:
        return Multivector._raw(self.sig, {m: c for m, c in self._terms.items() if m.bit_count() == k})

    def parity(self) -> str | None:
        """'even', 'odd', or None for mixed parity or zero."""
        par = {m.bit_count() & 1 for m in self._terms}
        if par == {0}:
            return "even"
        if par == {1}:
            return "odd"
        return None

    # arithmetic -------------------------------------------------------

    def _check(self, other: Multivector):
        a, b = self.sig, other.sig
        if (a.p, a.q, a.sign_rule) != (b.p, b.q, b.sign_rule):
            raise SignatureMismatch(f"{a} vs {b}")

    def _join_sig(self, other: Multivector) -> Signature:
        self._check(other)
        return self.sig if self.sig.is_complex or not other.sig.is_complex else other.sig

    def __add__(self, other):
        if not isinstance(other, Multivector):
            if _is_scalar(other):
                other = Multivector.scalar(self.sig, other)
            else:
                return NotImplemented
        sig = self._join_sig(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Multivector._raw(sig, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Multivector._raw(self.sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            if _is_scalar(other):
                other = Multivector.scalar(self.sig, other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, lam) -> Multivector:
        lam = GaussianRational.coerce(lam)
        if lam.im and not self.sig.is_complex:
            raise FieldError(f"imaginary scalar in real algebra {self.sig}")
        if not lam:
            return Multivector.zero(self.sig)
        return Multivector._raw(self.sig, {m: c * lam for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            sig = self._join_sig(other)
            neg = sig.neg_mask
            out: dict[int, GaussianRational] = {}
            for a, ca in self._terms.items():
                for b, cb in other._terms.items():
                    par = _reorder_parity(a, b) + (a & b & neg).bit_count()
                    c = ca * cb
                    if par & 1:
                        c = -c
                    k = a ^ b
                    v = out.get(k)
                    out[k] = c if v is None else v + c
            return Multivector._raw(sig, {k: v for k, v in out.items() if v})
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Multivector):
            a, b = self.sig, other.sig
            return (a.p, a.q, a.sign_rule) == (b.p, b.q, b.sign_rule) and self._terms == other._terms
        if _is_scalar(other):
            o = GaussianRational.coerce(other)
            if not o:
                return not self._terms
            return self._terms == {0: o}
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Multivector({self.sig}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for m in sorted(self._terms, key=lambda k: (k.bit_count(), k)):
            c = self._terms[m]
            sign = "+"
            if not c.im and c.re < 0:
                sign, c = "-", -c
            cs = f"({c})" if c.im else str(c)
            term = cs if m == 0 else f"{cs}*{blade_name(m)}"
            if not out:
                out = term if sign == "+" else "-" + term
            else:
                out += f" {sign} {term}"
        return out


def _is_scalar(x) -> bool:
    return isinstance(x, (int, GaussianRational)) or (
        hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float)
    )


def mv_arith(x: Multivector, y: Multivector | None, op: str, lam=None) -> Multivector:
    """Dispatch form of the multivector operators: op in {'add', 'mul', 'scale'}."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "scale":
        return x.scale(lam)
    raise ValueError(f"unknown op {op!r}")


class GradeParts(NamedTuple):
    odd: Multivector
    even: Multivector
    by_grade: list


def grade_parts(x: Multivector) -> GradeParts:
    by_grade: list[dict] = [dict() for _ in range(x.sig.n + 1)]
    for m, c in x.terms.items():
        by_grade[m.bit_count()][m] = c
    parts = [Multivector._raw(x.sig, d) for d in by_grade]
    odd = {m: c for m, c in x.terms.items() if m.bit_count() & 1}
    even = {m: c for m, c in x.terms.items() if not m.bit_count() & 1}
    return GradeParts(Multivector._raw(x.sig, odd), Multivector._raw(x.sig, even), parts)


class VolumeElement(NamedTuple):
    omega: Multivector
    omega_sq: int
    epsilon: GaussianRational


def volume_element(sig: Signature) -> VolumeElement:
    """omega = e_1...e_n, its square by direct multiplication, and the scalar
    epsilon in {1, i} with (epsilon*omega)^2 = +1."""
    omega = Multivector.blade(sig, (1 << sig.n) - 1)
    sq = omega * omega
    assert sq.is_scalar()
    omega_sq = int(sq.scalar_part().re)
    eps = ONE if omega_sq == 1 else I
    return VolumeElement(omega, omega_sq, eps)


def epsilon_omega(sig: Signature) -> Multivector:
    """The element epsilon*omega squaring to +1; needs C when omega^2 = -1."""
    vol = volume_element(sig)
    if vol.epsilon != ONE and not sig.is_complex:
        raise FieldError(f"epsilon = i is not available over the reals ({sig} has omega^2 = -1)")
    return vol.omega.scale(vol.epsilon)


def commutes(a: int, b: int, sig: Signature) -> bool:
    s1, _ = blade_product(a, b, sig)
    s2, _ = blade_product(b, a, sig)
    return s1 == s2


def center_basis(sig: Signature) -> list[Multivector]:
    """Blades commuting with every generator (brute force over all 2^n blades)."""
    gens = [1 << i for i in range(sig.n)]
    return [
        Multivector.blade(sig, m)
        for m in range(sig.dim)
        if all(commutes(m, g, sig) for g in gens)
    ]


def all_blades(sig: Signature) -> list[Multivector]:
    return [Multivector.blade(sig, m) for m in range(sig.dim)]


def signatures(n: int, field: str = REAL, sign_rule: str = PLUS_FIRST) -> list[Signature]:
    """All (p,q) with p+q = n, p descending."""
    return [Signature(p, n - p, field, sign_rule) for p in range(n, -1, -1)]
