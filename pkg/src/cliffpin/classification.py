"""Classification of the double coverings Pin^{a,b,c} for even n.

(a, b, c) are the squares of the matrices W, E, C realizing the grade
involution, reversion and conjugation in a concrete basis. They are read
off the basis, never looked up, and then checked against the admissible
sets for the signature class.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import COMPLEX, REAL, Signature
from .errors import ClassificationError, DimensionError
from .gaussian import ONE, I
from .groups import FiniteMatrixGroup, GroupId, central, classify_group, closure, quotient_group_id, sign_quotient
from .matrix import Matrix, commute_sign
from .reference import ABC_TABLE
from .rep import RepBasis, constructed_basis, matrix_C, matrix_E, matrix_W

SIGN = {1: "+", -1: "-"}

# A = {I, W, E, C} up to sign, in the classical naming
A_LABEL = {
    (1, 1, 1): "Z2xZ2",
    (1, -1, -1): "Z4",
    (-1, 1, -1): "Z4",
    (-1, -1, 1): "Z4",
    (-1, -1, -1): "Q4/Z2",
    (-1, 1, 1): "D4/Z2",
    (1, -1, 1): "D4/Z2",
    (1, 1, -1): "D4/Z2",
}


def abc_str(abc) -> str:
    return ",".join(SIGN[s] for s in abc)


@dataclass(frozen=True)
class Admissible:
    abc: tuple[int, int, int]
    group_A: str
    group_C: GroupId


def admissible_signatures(sig: Signature, field: str | None = None) -> list[Admissible]:
    """Admissible (a,b,c) for the class of (p - q mod 8, m mod 2)."""
    if sig.n % 2:
        raise DimensionError(f"admissible signatures are defined for even n, got {sig}")
    field = field or sig.field
    m = sig.n // 2
    if field == COMPLEX:
        triples = [(1, 1, 1)] if m % 2 == 0 else [(-1, -1, -1)]
    else:
        r = (sig.p - sig.q) % 8
        zero_four = r in (0, 4)
        if m % 2 == 0:
            triples = [(1, 1, 1), (1, -1, -1)] if zero_four else [(-1, 1, -1), (-1, -1, 1)]
        else:
            triples = [(1, -1, 1), (1, 1, -1)] if zero_four else [(-1, -1, -1), (-1, 1, 1)]
    return [Admissible(t, A_LABEL[t], ABC_TABLE[t][0]) for t in triples]


@dataclass(frozen=True, eq=False)
class PinClassification:
    sig: Signature
    field: str
    abc: tuple[int, int, int]
    cliffordian: bool
    group_A: str
    group_A_quotient: GroupId
    group_C_abc: GroupId
    label: str
    admissible: tuple[Admissible, ...]
    basis_name: str
    E_factors: tuple[int, ...]
    C_factors: tuple[int, ...]
    W: Matrix = dc_field(repr=False)
    E: Matrix = dc_field(repr=False)
    C: Matrix = dc_field(repr=False)
    group: FiniteMatrixGroup = dc_field(repr=False)

    @property
    def abc_text(self) -> str:
        return abc_str(self.abc)

    @property
    def commutation(self) -> str:
        return "PT=-TP" if self.cliffordian else "PT=TP"


def _square(x: Matrix) -> int:
    s = (x @ x).scalar_value()
    if s == ONE:
        return 1
    if s == -ONE:
        return -1
    raise ClassificationError("automorphism matrix does not square to +-I")


def _normalize(x: Matrix, target: int) -> Matrix:
    """Scale by 1 or i so that the square becomes target*I."""
    return x if _square(x) == target else x * I


def pin_label(sig: Signature, abc, group: GroupId, field: str) -> str:
    if field == COMPLEX:
        return f"Pin^{{{abc_str(abc)}}}({sig.n},C) ≅ (Spin₀({sig.n},C)⊙{group.pretty})/Z2"
    return f"Pin^{{{abc_str(abc)}}}({sig.p},{sig.q}) ≅ (Spin₀({sig.p},{sig.q})⊙{group.pretty})/Z2"


def classify_even(basis: RepBasis | None = None, sig: Signature | None = None, field: str | None = None) -> PinClassification:
    """Compute (a,b,c), the Cliffordian flag and C^{a,b,c} from a basis.

    Over C the matrices are first rescaled by 1 or i, which is the only
    freedom left: all squares +I for m even, all -I for m odd.
    """
    if basis is None:
        if sig is None:
            raise ValueError("classify_even needs a basis or a signature")
        basis = constructed_basis(sig)
    sig = basis.sig
    if sig.n % 2:
        raise DimensionError(f"classify_even needs even n, got {sig}")
    field = field or sig.field
    W = matrix_W(basis, require_prime=False).W
    e_res = matrix_E(basis)
    c_res = matrix_C(basis)
    E, C = e_res.matrix, c_res.matrix
    if field == COMPLEX:
        target = 1 if basis.m % 2 == 0 else -1
        W, E, C = (_normalize(x, target) for x in (W, E, C))
    abc = (_square(W), _square(E), _square(C))
    ec = commute_sign(E, C)
    if ec == 0:
        raise ClassificationError("E and C neither commute nor anticommute")
    cliffordian = ec == -1
    ident = Matrix.identity(basis.dim)
    group = closure([-ident, W, E, C])
    gid = classify_group(group)
    admissible = tuple(admissible_signatures(sig, field))
    if abc not in [a.abc for a in admissible]:
        raise ClassificationError(f"{sig}: realized (a,b,c) = ({abc_str(abc)}) is not admissible")
    want_group, want_cliff = ABC_TABLE[abc]
    if gid is not want_group or cliffordian != want_cliff:
        raise ClassificationError(f"{sig}: group {gid.value} / Cliffordian={cliffordian} contradicts the table row ({abc_str(abc)})")
    return PinClassification(
        sig=sig,
        field=field,
        abc=abc,
        cliffordian=cliffordian,
        group_A=A_LABEL[abc],
        group_A_quotient=quotient_group_id(group),
        group_C_abc=gid,
        label=pin_label(sig, abc, gid, field),
        admissible=admissible,
        basis_name=basis.name or basis.origin,
        E_factors=e_res.factors,
        C_factors=c_res.factors,
        W=W,
        E=E,
        C=C,
        group=group,
    )


# checks on the constructed basis ---------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def square_law(factor_squares, m: int) -> int:
    """Predicted square of a product of m anticommuting factors.

    ``neg`` counts factors squaring to -I and ``pos`` those squaring to +I;
    for m odd the square is +I iff neg - pos = 3 (mod 4), for m even iff
    neg - pos = 0 (mod 4).
    """
    neg = sum(1 for s in factor_squares if s == -1)
    pos = sum(1 for s in factor_squares if s == 1)
    d = (neg - pos) % 4
    if m % 2:
        return 1 if d == 3 else -1
    return 1 if d == 0 else -1


def even_structure_checks(sig: Signature) -> list[Check]:
    """Every structural claim about W, E, C for the constructed basis of ``sig``."""
    basis = constructed_basis(sig)
    m = basis.m
    checks: list[Check] = []
    W = matrix_W(basis, require_prime=False)
    e_res = matrix_E(basis)
    c_res = matrix_C(basis)
    E, C = e_res.matrix, c_res.matrix
    first = tuple(range(1, m + 1))
    last = tuple(range(m + 1, 2 * m + 1))
    want_e, want_c = (first, last) if m % 2 else (last, first)
    checks.append(Check("E factors", e_res.factors == want_e, f"{e_res.factors}"))
    checks.append(Check("C factors", c_res.factors == want_c, f"{c_res.factors}"))
    parity = 1 if m % 2 == 0 else -1
    for name, x, y in (("E,W", E, W.W), ("C,W", C, W.W), ("E,C", E, C)):
        s = commute_sign(x, y)
        checks.append(Check(f"parity {name}", s == parity, f"commute sign {s}, m={m}"))
    prod = E @ C if m % 2 else C @ E
    checks.append(Check("W proportional to EC/CE", W.W.ratio_to(prod) is not None))
    for name, res in (("E", e_res), ("C", c_res)):
        squares = [sig.square(i) for i in res.factors]
        pred = square_law(squares, m)
        checks.append(Check(f"square law {name}", pred == res.square, f"predicted {pred:+d}, direct {res.square:+d}"))
    omega_class = (sig.p - sig.q) % 8
    want_a = 1 if omega_class in (0, 4) else -1
    checks.append(Check("W^2 by p-q class", W.a == want_a, f"p-q={omega_class} (mod 8), W^2={W.a:+d}"))
    try:
        cl = classify_even(basis)
        checks.append(Check("admissible and table row", True, f"({cl.abc_text}) {cl.group_C_abc.value}"))
        checks.append(Check("abelian iff m even", cl.group.is_abelian() == (m % 2 == 0)))
        checks.append(Check("Cliffordian iff m odd", cl.cliffordian == (m % 2 == 1)))
        checks.append(Check("group A label", cl.group_A in {a.group_A for a in cl.admissible}, cl.group_A))
        minus = -Matrix.identity(basis.dim)
        ok = central(cl.group, minus) and len(sign_quotient(cl.group)) == 4
        checks.append(Check("-I central, quotient order 4", ok))
    except ClassificationError as exc:
        checks.append(Check("admissible and table row", False, str(exc)))
    cc = classify_even(basis, field=COMPLEX)
    want = (1, 1, 1) if m % 2 == 0 else (-1, -1, -1)
    checks.append(Check("complex normalization", cc.abc == want, f"({cc.abc_text}) {cc.group_C_abc.value}"))
    return checks


def sweep_even(max_n: int = 8, field: str = REAL, sign_rule: str = "plus_first") -> list[PinClassification]:
    out = []
    for n in range(2, max_n + 1, 2):
        for p in range(n, -1, -1):
            out.append(classify_even(sig=Signature(p, n - p, field, sign_rule)))
    return out


# the gamma-matrix example ----------------------------------------------


def product_table(named: dict[str, Matrix]) -> dict[tuple[str, str], tuple[int, str]]:
    """Products x*y written as +-(element of the named set)."""
    table = {}
    for a, x in named.items():
        for b, y in named.items():
            prod = x @ y
            hit = None
            for c, z in named.items():
                if prod == z:
                    hit = (1, c)
                elif prod == -z:
                    hit = (-1, c)
                if hit:
                    break
            if hit is None:
                raise ClassificationError(f"{a}*{b} leaves the set up to sign")
            table[(a, b)] = hit
    return table


def tables_isomorphic(t1, t2, mapping: dict[str, str]) -> bool:
    return all(t2[(mapping[a], mapping[b])] == (s, mapping[c]) for (a, b), (s, c) in t1.items())
