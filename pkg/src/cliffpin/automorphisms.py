"""The four fundamental (anti)automorphisms, the norm N(x) = x x~, and
membership tests for the Lipschitz, Pin, Spin and Spin+ groups."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .algebra import Multivector, Signature, all_blades, volume_element
from .errors import DimensionError
from .gaussian import GaussianRational
from .matrix import solve


class AutoKind(Enum):
    ID = "Id"
    STAR = "Star"
    REV = "Rev"
    REVSTAR = "RevStar"

    @property
    def bits(self) -> tuple[int, int]:
        # (grade involution, reversion) components of the Klein four-group
        return _BITS[self]

    @property
    def is_anti(self) -> bool:
        return bool(self.bits[1])

    @property
    def discrete(self) -> str:
        """Discrete transformation it stands for: 1, P, T, PT."""
        return {AutoKind.ID: "1", AutoKind.STAR: "P", AutoKind.REV: "T", AutoKind.REVSTAR: "PT"}[self]

    def compose(self, other: AutoKind) -> AutoKind:
        """Klein-group product by bit xor (see auto_composition_table for the
        point-wise verified version)."""
        a, b = self.bits, other.bits
        return _FROM_BITS[(a[0] ^ b[0], a[1] ^ b[1])]


_BITS = {AutoKind.ID: (0, 0), AutoKind.STAR: (1, 0), AutoKind.REV: (0, 1), AutoKind.REVSTAR: (1, 1)}
_FROM_BITS = {v: k for k, v in _BITS.items()}


def grade_sign(kind: AutoKind, k: int) -> int:
    if kind is AutoKind.ID:
        return 1
    if kind is AutoKind.STAR:
        return -1 if k & 1 else 1
    if kind is AutoKind.REV:
        return -1 if (k * (k - 1) // 2) & 1 else 1
    return -1 if (k * (k + 1) // 2) & 1 else 1


def apply_auto(kind: AutoKind, x: Multivector) -> Multivector:
    if kind is AutoKind.ID:
        return x
    terms = {}
    for m, c in x.terms.items():
        terms[m] = c if grade_sign(kind, m.bit_count()) == 1 else -c
    return Multivector._raw(x.sig, terms)


def star(x: Multivector) -> Multivector:
    return apply_auto(AutoKind.STAR, x)


def rev(x: Multivector) -> Multivector:
    return apply_auto(AutoKind.REV, x)


def revstar(x: Multivector) -> Multivector:
    return apply_auto(AutoKind.REVSTAR, x)


def star_via_omega(x: Multivector) -> Multivector:
    """Grade involution as conjugation by the volume element (even n only)."""
    if x.sig.n % 2:
        raise DimensionError(f"omega is central for odd n = {x.sig.n}; conjugation by omega is the identity")
    vol = volume_element(x.sig)
    omega_inv = vol.omega.scale(vol.omega_sq)
    return vol.omega * x * omega_inv


def norm(x: Multivector) -> Multivector:
    """N(x) = x * reversion(x)."""
    return x * rev(x)


def inverse(x: Multivector) -> Multivector | None:
    """Solve x*t = 1 exactly over the 2^n-dimensional coefficient space."""
    sig = x.sig
    dim = sig.dim
    # column b of left-multiplication matrix = coefficients of x * e_b
    cols = []
    for b in range(dim):
        prod = x * Multivector.blade(sig, b)
        cols.append([prod.coefficient(a) for a in range(dim)])
    mat = [[cols[b][a] for b in range(dim)] for a in range(dim)]
    rhs = [GaussianRational(1 if a == 0 else 0) for a in range(dim)]
    sol = solve(mat, rhs)
    if sol is None:
        return None
    t = Multivector(sig, {b: c for b, c in enumerate(sol)})
    return t if (x * t) == 1 else None


@dataclass(frozen=True)
class GroupMembership:
    in_lipschitz: bool
    in_pin: bool
    in_spin: bool
    in_spin_plus: bool
    norm_value: GaussianRational | None


def membership(s: Multivector) -> GroupMembership:
    sig = s.sig
    nv = norm(s)
    norm_value = nv.scalar_part() if nv.is_scalar() else None
    parity = s.parity()
    lipschitz = False
    if parity is not None:
        s_inv = inverse(s)
        if s_inv is not None:
            lipschitz = all(
                (s * Multivector.e(sig, i) * s_inv).grades() <= {1} for i in range(1, sig.n + 1)
            )
    in_pin = lipschitz and norm_value is not None and norm_value in (GaussianRational(1), GaussianRational(-1))
    in_spin = in_pin and parity == "even"
    in_spin_plus = in_spin and norm_value == 1
    return GroupMembership(lipschitz, in_pin, in_spin, in_spin_plus, norm_value)


def auto_composition_table(sig: Signature | None = None) -> dict[tuple[AutoKind, AutoKind], AutoKind]:
    """Composition table identified point-wise on every blade of ``sig``.

    Entry (f, g) is the kind h with f(g(x)) = h(x) for every basis blade x.
    """
    sig = sig or Signature(2, 1)
    blades = all_blades(sig)
    table = {}
    for f in AutoKind:
        for g in AutoKind:
            images = [apply_auto(f, apply_auto(g, x)) for x in blades]
            match = [h for h in AutoKind if all(apply_auto(h, x) == y for x, y in zip(blades, images))]
            if len(match) != 1:
                raise AssertionError(f"composition {f.value}o{g.value} not identified on {sig}: {match}")
            table[(f, g)] = match[0]
    return table
