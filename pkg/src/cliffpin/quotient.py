"""Odd-dimensional algebras: the homomorphism onto the even quotient,
its kernel, which automorphisms survive it, and the idempotent splitting.

For odd N = n + 1 the element eps*omega is central with square +1, so
every x decomposes as A1 + eps*omega*A2 with A1, A2 free of e_N, and
x -> A1 + A2 is an algebra homomorphism onto the subalgebra on e_1..e_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Multivector, Signature, blade_product, epsilon_omega, volume_element
from .automorphisms import AutoKind, apply_auto, auto_composition_table, membership
from .errors import DimensionError, FieldError
from .gaussian import ONE, GaussianRational
from .groups import GroupId, classify_group, closure
from .matrix import Matrix, rank
from .rep import constructed_basis, matrix_C, matrix_E


def _require_odd(sig: Signature):
    if sig.n % 2 == 0:
        raise DimensionError(f"{sig} has even n; the quotient map needs odd n")
    if sig.n < 3:
        raise DimensionError("the quotient map needs n >= 3 (n = 1 has no generators left)")


def _eps(sig: Signature) -> GaussianRational:
    vol = volume_element(sig)
    if vol.epsilon != ONE and not sig.is_complex:
        raise FieldError(f"omega^2 = -1 in {sig}: use the complexification")
    return vol.epsilon


def quotient_signature(sig: Signature) -> Signature:
    _require_odd(sig)
    return sig.drop_last()


def epsilon_blade(mask: int, sig: Signature, sign: int = 1) -> tuple[GaussianRational, int]:
    """Image of one blade as (coefficient, mask in the quotient).

    A blade B containing e_N equals eps*omega * (eps*omega*B), and
    eps*omega*B no longer contains e_N. ``sign = -1`` sends eps*omega to -1
    instead of +1 (the map adapted to the other idempotent).
    """
    top = 1 << (sig.n - 1)
    if not mask & top:
        return ONE, mask
    eps = _eps(sig)
    s, out = blade_product(sig.dim - 1, mask, sig)
    return eps * s * sign, out


def epsilon_map(x: Multivector, sign: int = 1) -> Multivector:
    sig = x.sig
    _require_odd(sig)
    _eps(sig)
    qsig = sig.drop_last()
    terms: dict[int, GaussianRational] = {}
    for mask, c in x.terms.items():
        k, out = epsilon_blade(mask, sig, sign)
        terms[out] = terms.get(out, GaussianRational(0)) + k * c
    return Multivector(qsig, terms)


def is_multiplicative(sig: Signature, sign: int = 1) -> bool:
    """eps(ab) = eps(a) eps(b) for every pair of blades, at blade level."""
    qsig = sig.drop_last()
    images = [epsilon_blade(m, sig, sign) for m in range(sig.dim)]
    for a in range(sig.dim):
        ka, ma = images[a]
        for b in range(sig.dim):
            kb, mb = images[b]
            s, ab = blade_product(a, b, sig)
            kab, mab = images[ab]
            s2, m2 = blade_product(ma, mb, qsig)
            if mab != m2 or kab * s != ka * kb * s2:
                return False
    return True


def kernel_basis(sig: Signature) -> list[Multivector]:
    """B - eps*omega*B over the blades B free of e_N."""
    _require_odd(sig)
    eo = epsilon_omega(sig)
    half = 1 << (sig.n - 1)
    return [Multivector.blade(sig, b) - eo * Multivector.blade(sig, b) for b in range(half)]


@dataclass(frozen=True)
class KernelReport:
    maps_to_zero: bool
    two_sided_ideal: bool
    kernel_rank: int
    quotient_rank: int
    expected: int

    @property
    def ok(self) -> bool:
        return (
            self.maps_to_zero
            and self.two_sided_ideal
            and self.kernel_rank == self.expected
            and self.quotient_rank == self.expected
        )


def _coeffs(x: Multivector, dim: int) -> list[GaussianRational]:
    return [x.coefficient(m) for m in range(dim)]


def kernel_report(sig: Signature) -> KernelReport:
    ker = kernel_basis(sig)
    qdim = 1 << (sig.n - 1)
    zero = all(epsilon_map(k).is_zero() for k in ker)
    gens = [Multivector.e(sig, i) for i in range(1, sig.n + 1)]
    ideal = all(
        epsilon_map(g * k).is_zero() and epsilon_map(k * g).is_zero()
        for g in gens
        for k in ker
    )
    krank = rank([_coeffs(k, sig.dim) for k in ker])
    images = [epsilon_map(Multivector.blade(sig, m)) for m in range(sig.dim)]
    qrank = rank([_coeffs(y, qdim) for y in images])
    return KernelReport(zero, ideal, krank, qrank, qdim)


@dataclass(frozen=True)
class TransferResult:
    kind: AutoKind
    intrinsic: bool
    kernel_preserved: bool

    @property
    def agree(self) -> bool:
        return self.intrinsic == self.kernel_preserved

    @property
    def transfers(self) -> bool:
        return self.intrinsic


def transfer_test(kind: AutoKind, sig: Signature) -> TransferResult:
    """Fixed-point test on eps*omega, and the brute-force test that the
    automorphism maps every kernel basis element back into the kernel."""
    _require_odd(sig)
    eo = epsilon_omega(sig)
    intrinsic = apply_auto(kind, eo) == eo
    preserved = all(epsilon_map(apply_auto(kind, k)).is_zero() for k in kernel_basis(sig))
    return TransferResult(kind, intrinsic, preserved)


def transfers(kind: AutoKind, sig: Signature) -> bool:
    res = transfer_test(kind, sig)
    if not res.agree:
        raise AssertionError(f"transfer tests disagree for {kind.value} on {sig}")
    return res.transfers


def predicted_transfer(kind: AutoKind, n: int) -> bool:
    """Closed form: Rev(omega) = (-1)^{n(n-1)/2} omega and eps is a scalar,
    so Rev survives iff n = 1 (mod 4), RevStar iff n = 3 (mod 4)."""
    if kind is AutoKind.ID:
        return True
    if kind is AutoKind.STAR:
        return False
    if kind is AutoKind.REV:
        return n % 4 == 1
    return n % 4 == 3


def closed_under_composition(kinds) -> bool:
    table = auto_composition_table()
    s = set(kinds)
    return all(table[(f, g)] in s for f in s for g in s)


@dataclass(frozen=True, eq=False)
class QuotientReport:
    sig: Signature
    quotient_sig: Signature
    epsilon: GaussianRational
    transfers: dict
    tests_agree: bool
    discrete_set: tuple[str, ...]
    forms_group: bool
    quotient_kind: str
    b: int | None
    c: int | None
    b_raw: int | None
    c_raw: int | None
    double_cover: GroupId | None
    kernel: KernelReport

    @property
    def label(self) -> str:
        q = self.quotient_sig
        sym = {"Pin_b": "b", "Pin_c": "c", "Pin_bc": "b,c"}[self.quotient_kind]
        base = f"{q.n},C" if q.is_complex else f"{q.p},{q.q}"
        text = f"Pin^{sym}({base})"
        if self.double_cover is not None:
            text += f" ≅ (Spin₀({base})⊙{self.double_cover.pretty})/Z2"
        return text


def _sq(x: Matrix) -> int:
    s = (x @ x).scalar_value()
    return 1 if s == ONE else -1


def classify_odd(sig: Signature) -> QuotientReport:
    _require_odd(sig)
    eps = _eps(sig)
    results = {kind: transfer_test(kind, sig) for kind in AutoKind}
    flags = {kind: r.transfers for kind, r in results.items()}
    agree = all(r.agree for r in results.values())
    discrete = ["1"]
    if flags[AutoKind.REV]:
        discrete.append("T")
    if flags[AutoKind.REVSTAR]:
        discrete.append("PT")
    kept = [k for k in AutoKind if flags[k]]
    forms_group = closed_under_composition(kept)
    rev, rs = flags[AutoKind.REV], flags[AutoKind.REVSTAR]
    if rev and rs:
        kind = "Pin_bc"
    elif rs:
        kind = "Pin_c"
    else:
        kind = "Pin_b"

    qsig = sig.drop_last()
    basis = constructed_basis(qsig)
    E = matrix_E(basis).matrix
    C = matrix_C(basis).matrix
    b_raw, c_raw = _sq(E), _sq(C)
    if sig.is_complex:
        # over C a lone matrix can always be rescaled to square +I
        E = E if b_raw == 1 else E * GaussianRational(0, 1)
        C = C if c_raw == 1 else C * GaussianRational(0, 1)
    b = _sq(E) if rev else None
    c = _sq(C) if rs else None
    cover = None
    if forms_group:
        minus = -Matrix.identity(basis.dim)
        gens = [minus] + ([E] if rev else []) + ([C] if rs else [])
        cover = classify_group(closure(gens))
    return QuotientReport(
        sig=sig,
        quotient_sig=qsig,
        epsilon=eps,
        transfers={k.value: v for k, v in flags.items()},
        tests_agree=agree,
        discrete_set=tuple(discrete),
        forms_group=forms_group,
        quotient_kind=kind,
        b=b,
        c=c,
        b_raw=b_raw if rev else None,
        c_raw=c_raw if rs else None,
        double_cover=cover,
        kernel=kernel_report(sig),
    )


# idempotent splitting --------------------------------------------------


@dataclass(frozen=True)
class SummandReport:
    sign: int
    dim: int
    image_rank: int
    unit_image_is_one: bool


@dataclass(frozen=True, eq=False)
class Decomposition:
    proj_plus: Multivector
    proj_minus: Multivector
    idempotent: bool
    annihilating: bool
    complete: bool
    central: bool
    summands: tuple[SummandReport, SummandReport]

    @property
    def ok(self) -> bool:
        half = 1 << (self.proj_plus.sig.n - 1)
        return (
            self.idempotent
            and self.annihilating
            and self.complete
            and self.central
            and all(s.dim == half and s.image_rank == half and s.unit_image_is_one for s in self.summands)
        )


def decompose_odd(sig: Signature) -> Decomposition:
    """lambda_+- = (1 +- eps*omega)/2 and the two ideals they cut out."""
    _require_odd(sig)
    eo = epsilon_omega(sig)
    half_c = GaussianRational(Fraction(1, 2))
    one = Multivector.scalar(sig, 1)
    lp = (one + eo).scale(half_c)
    lm = (one - eo).scale(half_c)
    idem = lp * lp == lp and lm * lm == lm
    annih = (lp * lm).is_zero() and (lm * lp).is_zero()
    complete = lp + lm == 1
    gens = [Multivector.e(sig, i) for i in range(1, sig.n + 1)]
    cent = all(g * lp == lp * g and g * lm == lm * g for g in gens)
    summands = []
    qdim = 1 << (sig.n - 1)
    for sign, lam in ((1, lp), (-1, lm)):
        ideal = [lam * Multivector.blade(sig, m) for m in range(sig.dim)]
        dim = rank([_coeffs(x, sig.dim) for x in ideal])
        # the map sending eps*omega to sign restricts to an isomorphism on this ideal
        images = [epsilon_map(x, sign) for x in ideal]
        img_rank = rank([_coeffs(y, qdim) for y in images])
        summands.append(SummandReport(sign, dim, img_rank, epsilon_map(lam, sign) == 1))
    return Decomposition(lp, lm, idem, annih, complete, cent, tuple(summands))


# descriptive statements ------------------------------------------------


def coset_check(sig: Signature) -> bool:
    """omega * (even Pin element) is an odd Pin element of the same norm up
    to sign, on every even blade."""
    omega = volume_element(sig).omega
    for m in range(sig.dim):
        if m.bit_count() % 2:
            continue
        s = Multivector.blade(sig, m)
        ms = membership(s)
        if not ms.in_spin:
            return False
        t = omega * s
        mt = membership(t)
        if not mt.in_pin or t.parity() != "odd":
            return False
        if mt.norm_value not in (ms.norm_value, -ms.norm_value):
            return False
    return True


def structure_label(sig: Signature) -> str:
    """Direct-sum or complex-structure description of an odd algebra,
    decided by the computed square of omega."""
    _require_odd(sig)
    q = sig.drop_last()
    if sig.is_complex:
        return f"C_{sig.n} ≅ C_{sig.n - 1} ⊕ C_{sig.n - 1}"
    vol = volume_element(sig)
    if vol.omega_sq == 1:
        return f"Cl({sig.p},{sig.q}) ≅ Cl({q.p},{q.q}) ⊕ Cl({q.p},{q.q})"
    return f"Cl({sig.p},{sig.q}) ≅ C_{sig.n - 1}"


_LOW_DIM = {
    (3, 0): ("SU(2) ∪ iSU(2)", -1),
    (0, 3): ("SU(2) ∪ eSU(2)", 1),
    (5, 0): ("Sp(2) ∪ eSp(2)", 1),
    (0, 5): ("Sp(2) ∪ iSp(2)", -1),
}


def low_dim_pin_annotation(sig: Signature) -> tuple[str, bool] | None:
    """Unitary-group name for Pin(3,0), Pin(0,3), Pin(5,0), Pin(0,5).

    The flag says whether the computed omega^2 under the active sign rule
    agrees with the one the name presumes (i for -1, the double unit e for +1).
    """
    entry = _LOW_DIM.get((sig.p, sig.q))
    if entry is None or sig.is_complex:
        return None
    name, presumed = entry
    return f"Pin({sig.p},{sig.q}) ≅ {name}", volume_element(sig).omega_sq == presumed
