"""Even elements of the spacetime algebra as 4x4 matrices, and three
independent ways of computing their conjugate under RevStar."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Multivector, mask_of
from .automorphisms import rev, revstar
from .gaussian import GaussianRational, I
from .matrix import Matrix
from .rep import matrix_C, rep_of, spacetime_basis

# Gamma_0..Gamma_3 are e1..e4 of Cl(1,3)
PARAM_NAMES = ("a0", "a01", "a02", "a03", "a12", "a13", "a23", "a0123")
_MASKS = (
    0,
    mask_of(1, 2),
    mask_of(1, 3),
    mask_of(1, 4),
    mask_of(2, 3),
    mask_of(2, 4),
    mask_of(3, 4),
    mask_of(1, 2, 3, 4),
)


def spinor(params) -> Multivector:
    basis = spacetime_basis()
    values = [GaussianRational.coerce(v) for v in params]
    if len(values) != 8 or any(v.im for v in values):
        raise ValueError("expected 8 rational parameters")
    return Multivector(basis.sig, dict(zip(_MASKS, values)))


def components(params, literal: bool = False):
    """phi_1..phi_4. ``literal`` uses +a13 in phi_2, the form that does not
    match the actual matrix; the default -a13 does."""
    a0, a01, a02, a03, a12, a13, a23, a0123 = (GaussianRational.coerce(v) for v in params)
    phi1 = a0 - I * a12
    phi2 = (a13 if literal else -a13) - I * a23
    phi3 = a03 - I * a0123
    phi4 = a01 + I * a02
    return phi1, phi2, phi3, phi4


def block_pattern(p1, p2, p3, p4) -> Matrix:
    c = GaussianRational.conjugate
    return Matrix([
        [p1, -c(p2), p3, c(p4)],
        [p2, c(p1), p4, -c(p3)],
        [p3, c(p4), p1, -c(p2)],
        [p4, -c(p3), p2, c(p1)],
    ])


def conjugate_pattern(p1, p2, p3, p4) -> Matrix:
    c = GaussianRational.conjugate
    return Matrix([
        [c(p1), c(p2), -c(p3), -c(p4)],
        [-p2, p1, -p4, p3],
        [-c(p3), -c(p4), c(p1), c(p2)],
        [-p4, p3, -p2, p1],
    ])


def _mismatches(got: Matrix, want: Matrix) -> list[str]:
    out = []
    for i in range(got.dim):
        for j in range(got.dim):
            if got[i, j] != want[i, j]:
                out.append(f"({i},{j}): got {got[i, j]}, pattern {want[i, j]}")
    return out


@dataclass(frozen=True)
class SpinorReport:
    pattern_ok: bool
    pattern_mismatches: tuple[str, ...]
    literal_pattern_ok: bool
    transpose_path_ok: bool
    dagger_path_ok: bool
    algebra_path_ok: bool
    rev_equals_revstar: bool

    @property
    def ok(self) -> bool:
        return (
            self.pattern_ok
            and self.transpose_path_ok
            and self.dagger_path_ok
            and self.algebra_path_ok
            and self.rev_equals_revstar
        )


def dirac_hestenes_check(params) -> SpinorReport:
    basis = spacetime_basis()
    x = spinor(params)
    phi = rep_of(x, basis)
    comps = components(params)
    want = block_pattern(*comps)
    mism = _mismatches(phi, want)
    literal = phi == block_pattern(*components(params, literal=True))

    C = matrix_C(basis).matrix
    g0 = basis.gens[0]
    target = conjugate_pattern(*comps)
    via_transpose = C @ phi.T @ C.inverse()
    via_dagger = g0 @ phi.H @ g0
    via_algebra = rep_of(revstar(x), basis)
    return SpinorReport(
        pattern_ok=not mism,
        pattern_mismatches=tuple(mism),
        literal_pattern_ok=literal,
        transpose_path_ok=via_transpose == target,
        dagger_path_ok=via_dagger == target,
        algebra_path_ok=via_algebra == target,
        rev_equals_revstar=rev(x) == revstar(x),
    )
