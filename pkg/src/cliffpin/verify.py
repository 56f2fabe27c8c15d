"""Verification suites behind ``cliffpin verify``.

Each suite returns a SuiteResult; a failing check keeps its message so the
report says exactly what broke. Suites whose name starts with ``claim:``
compare computed facts against classical mod-8 statements and record the
sign rule they used.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import (
    COMPLEX,
    MINUS_FIRST,
    PLUS_FIRST,
    REAL,
    Multivector,
    Signature,
    blade_product,
    center_basis,
    signatures,
    volume_element,
)
from .automorphisms import AutoKind, apply_auto, auto_composition_table, rev, star, star_via_omega
from .classification import (
    classify_even,
    even_structure_checks,
    product_table,
    tables_isomorphic,
)
from .dirac_hestenes import dirac_hestenes_check
from .groups import GroupId, classify_group, closure
from .matrix import Matrix
from .quotient import (
    classify_odd,
    coset_check,
    decompose_odd,
    is_multiplicative,
    kernel_report,
    low_dim_pin_annotation,
    predicted_transfer,
    transfer_test,
)
from .reference import (
    ABC_TABLE,
    AUTO_TABLE,
    DIRAC_C,
    DIRAC_E,
    DIRAC_W,
    PT_TABLE,
    SPACETIME_C,
    SPACETIME_E,
    WEC_TABLE,
    claimed_quotient_kind,
    claimed_transfers,
)
from .rep import (
    automorphism_matrix_report,
    constructed_basis,
    dirac_basis,
    matrix_C,
    matrix_E,
    matrix_W,
    spacetime_basis,
    transpose_solutions,
    validate_rep,
)


@dataclass
class VerifyConfig:
    max_n: int = 6
    exhaustive_cap: int = 6  # blade-triple and blade-pair suites stop here
    even_cap: int = 8  # largest even n for matrix suites
    rank_max_m: int = 3
    spinor_trials: int = 100
    seed: int = 0


@dataclass
class SuiteResult:
    name: str
    convention: str = PLUS_FIRST
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, msg: str):
        self.checks += 1
        if not ok:
            self.failures.append(msg)


def _real_sigs(lo: int, hi: int, sign_rule: str = PLUS_FIRST):
    for n in range(lo, hi + 1):
        yield from signatures(n, REAL, sign_rule)


# algebra ---------------------------------------------------------------


def suite_algebra(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("algebra-core")
    for sig in _real_sigs(1, min(cfg.max_n, cfg.exhaustive_cap)):
        dim = sig.dim
        table = [[blade_product(a, b, sig) for b in range(dim)] for a in range(dim)]
        ok = True
        for a in range(dim):
            for b in range(dim):
                s1, ab = table[a][b]
                for c in range(dim):
                    s2, abc1 = table[ab][c]
                    s3, bc = table[b][c]
                    s4, abc2 = table[a][bc]
                    if s1 * s2 != s3 * s4:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        res.check(ok, f"associativity fails in {sig}")
        for i in range(sig.n):
            for j in range(sig.n):
                if i != j:
                    s1, _ = table[1 << i][1 << j]
                    s2, _ = table[1 << j][1 << i]
                    res.check(s1 == -s2, f"e{i + 1}, e{j + 1} commute in {sig}")
    for rule in (PLUS_FIRST, MINUS_FIRST):
        for sig in _real_sigs(1, max(cfg.max_n, 9), rule):
            vol = volume_element(sig)
            n = sig.n
            neg = sig.squares.count(-1)
            closed = (-1) ** (n * (n - 1) // 2 + neg)
            res.check(vol.omega_sq == closed, f"omega^2 closed form fails in {sig} ({rule})")
            center = center_basis(sig)
            want = [0] if n % 2 == 0 else [0, sig.dim - 1]
            res.check(sorted(next(iter(c.terms)) for c in center) == want, f"center of {sig} ({rule})")
            if n % 2 == 0:
                table_value = -1 if (sig.p - sig.q) % 8 in (2, 6) else 1
                res.check(vol.omega_sq == table_value, f"even-n omega^2 table fails in {sig}")
    return res


def suite_omega_table_odd(cfg: VerifyConfig) -> SuiteResult:
    """Odd-n omega^2 mod-8 table, as classically stated, under minus_first."""
    res = SuiteResult("claim: odd-n omega^2 table", MINUS_FIRST)
    for sig in _real_sigs(1, max(cfg.max_n, 9), MINUS_FIRST):
        if sig.n % 2 == 0:
            continue
        want = -1 if (sig.p - sig.q) % 8 in (1, 2, 5, 6) else 1
        res.check(volume_element(sig).omega_sq == want, f"omega^2 table fails for {sig} (minus_first)")
    return res


# automorphisms ---------------------------------------------------------


def _reversed_blade(mask: int, sig: Signature) -> Multivector:
    # e_{ik} ... e_{i1} by explicit multiplication, independent of grade formulas
    out = Multivector.scalar(sig, 1)
    for i in reversed([i + 1 for i in range(sig.n) if (mask >> i) & 1]):
        out = out * Multivector.e(sig, i)
    return out


def suite_automorphisms(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("automorphisms")
    table = auto_composition_table()
    for (f, g), h in table.items():
        res.check(AUTO_TABLE[(f.value, g.value)] == h.value, f"composition {f.value}o{g.value} = {h.value}")
    kinds = list(AutoKind)
    res.check(all(table[(k, k)] is AutoKind.ID for k in kinds), "some automorphism is not an involution")
    res.check(all(table[(f, g)] is table[(g, f)] for f in kinds for g in kinds), "composition not abelian")
    for sig in _real_sigs(1, min(cfg.max_n, cfg.exhaustive_cap)):
        blades = [Multivector.blade(sig, m) for m in range(sig.dim)]
        for m, x in enumerate(blades):
            res.check(rev(x) == _reversed_blade(m, sig), f"Rev sign law on blade {m} of {sig}")
            k = m.bit_count()
            neg = Multivector.scalar(sig, 1)
            for i in range(sig.n):
                if (m >> i) & 1:
                    neg = neg * (-Multivector.e(sig, i + 1))
            res.check(star(x) == neg, f"Star sign law on blade {m} of {sig}")
            res.check(apply_auto(AutoKind.REVSTAR, x) == rev(star(x)) == star(rev(x)), f"RevStar law on {m} of {sig}")
            res.check(rev(rev(x)) == x and star(star(x)) == x, f"involution law on {m} of {sig}")
            if k % 2 == 0:
                res.check(rev(x) == apply_auto(AutoKind.REVSTAR, x), f"Rev != RevStar on even blade {m} of {sig}")
            if k == 1:
                res.check(x * rev(x) == x * x, f"norm of vector {m} in {sig}")
            if sig.n % 2 == 0:
                res.check(star_via_omega(x) == star(x), f"Star via omega fails on {m} of {sig}")
        for a in blades:
            for b in blades:
                ab = a * b
                if rev(ab) != rev(b) * rev(a) or star(ab) != star(a) * star(b):
                    res.check(False, f"(anti)homomorphism law fails in {sig}")
                    break
            else:
                continue
            break
        else:
            res.check(True, "")
    return res


# matrices --------------------------------------------------------------


def suite_matrix_rep(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("matrix-rep")
    top = min(cfg.max_n, cfg.exhaustive_cap)
    for n in range(2, top + 1, 2):
        for sig in signatures(n):
            basis = constructed_basis(sig)
            rep = validate_rep(basis, check_rank=basis.m <= cfg.rank_max_m)
            res.check(rep.ok, f"{sig}: {'; '.join(rep.failures)}")
            sym = [g.T == g or g.T == -g for g in basis.gens]
            res.check(all(sym), f"{sig}: a generator is neither symmetric nor antisymmetric")
            auto = automorphism_matrix_report(basis)
            res.check(auto.ok, f"{sig}: {'; '.join(auto.failures[:3])}")
            if n <= 4:
                res.check(len(transpose_solutions(basis, 1)) == 1, f"{sig}: E not unique up to scalar")
                res.check(len(transpose_solutions(basis, -1)) == 1, f"{sig}: C not unique up to scalar")
    for m in range(1, cfg.rank_max_m + 1):
        for sig in signatures(2 * m):
            r = validate_rep(constructed_basis(sig))
            res.check(r.rank == 4**m, f"faithfulness: {sig} rank {r.rank} != {4**m}")
    return res


def suite_even_classification(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("classification: even n")
    realized = set()
    top = min(max(cfg.max_n, 2), cfg.even_cap)
    for n in range(2, top + 1, 2):
        for sig in signatures(n):
            try:
                cl = classify_even(sig=sig)
            except Exception as exc:  # noqa: BLE001 - reported as a failure
                res.check(False, f"{sig}: {exc}")
                continue
            realized.add(cl.abc)
            want_group, want_cliff = ABC_TABLE[cl.abc]
            res.check(cl.group_C_abc is want_group, f"{sig}: group {cl.group_C_abc.value}")
            res.check(cl.cliffordian == want_cliff, f"{sig}: Cliffordian flag")
            for c in even_structure_checks(sig):
                res.check(c.passed, f"{sig}: {c.name} ({c.detail})")
    if top >= 8:
        res.check(realized == set(ABC_TABLE), f"rows realized: {len(realized)} of 8")
    return res


def suite_dirac_example(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("gamma-matrix example")
    basis = dirac_basis()
    res.check(validate_rep(basis).ok, "gamma basis invalid")
    W = matrix_W(basis).W
    E = matrix_E(basis)
    C = matrix_C(basis)
    res.check(W == DIRAC_W, "W differs from the reference matrix")
    res.check(W.T == W, "W is not symmetric")
    res.check(E.matrix == DIRAC_E and E.factors == (1, 3), "E differs from g1 g3")
    res.check(C.matrix == DIRAC_C and C.matrix == E.matrix @ W.T, "C differs from E W^T")
    named = {"I": Matrix.identity(4), "W": W, "E": E.matrix, "C": C.matrix}
    t30 = product_table(named)
    res.check(t30 == WEC_TABLE, "multiplication table of {I, W, E, C}")
    g = basis.gens
    pt = {"1": Matrix.identity(4), "P": g[3], "T": g[0] @ g[2], "PT": g[3] @ g[0] @ g[2]}
    t31 = product_table(pt)
    res.check(t31 == PT_TABLE, "multiplication table of {1, P, T, PT}")
    res.check(tables_isomorphic(t30, t31, {"I": "1", "W": "P", "E": "T", "C": "PT"}), "tables not isomorphic")
    minus = -Matrix.identity(4)
    res.check(classify_group(closure([minus, W, E.matrix, C.matrix])) is GroupId.Z4xZ2, "group of W, E, C")
    res.check(classify_group(closure([minus, *pt.values()])) is GroupId.Z4xZ2, "group of P, T, PT")
    cl = classify_even(basis)
    res.check(cl.abc == (1, -1, -1) and cl.group_C_abc is GroupId.Z4xZ2, f"classification ({cl.abc_text})")
    return res


def suite_spacetime_example(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("spacetime example")
    basis = spacetime_basis()
    res.check(validate_rep(basis).ok, "spacetime basis invalid")
    cl = classify_even(basis)
    res.check(cl.abc == (-1, -1, 1), f"abc = ({cl.abc_text})")
    res.check(cl.group_C_abc is GroupId.Z4xZ2 and not cl.cliffordian, "group / Cliffordian flag")
    res.check(cl.label.startswith("Pin^{-,-,+}(1,3)"), cl.label)
    res.check(matrix_E(basis).matrix == SPACETIME_E, "E differs from the reference matrix")
    res.check(matrix_C(basis).matrix == SPACETIME_C, "C differs from the reference matrix")
    rng = random.Random(cfg.seed)
    for t in range(cfg.spinor_trials):
        params = [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(8)]
        rep = dirac_hestenes_check(params)
        res.check(rep.ok, f"spinor trial {t}: {rep}")
    return res


# odd n -----------------------------------------------------------------


def _odd_sigs(cfg: VerifyConfig, sign_rule: str = PLUS_FIRST):
    top = max(cfg.max_n + 1, 3)
    for n in range(3, top + 1, 2):
        yield Signature(n, 0, COMPLEX, sign_rule)
        for sig in signatures(n, REAL, sign_rule):
            if volume_element(sig).omega_sq == 1:
                yield sig


def suite_odd(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("classification: odd n")
    for sig in _odd_sigs(cfg):
        if sig.n <= 7:
            res.check(is_multiplicative(sig), f"{sig}: eps not multiplicative")
            res.check(is_multiplicative(sig, -1), f"{sig}: conjugate eps not multiplicative")
        kr = kernel_report(sig)
        res.check(kr.ok, f"{sig}: kernel {kr}")
        for kind in AutoKind:
            t = transfer_test(kind, sig)
            res.check(t.agree, f"{sig}: transfer tests disagree for {kind.value}")
            res.check(t.transfers == predicted_transfer(kind, sig.n), f"{sig}: {kind.value} closed form")
        res.check(not transfer_test(AutoKind.STAR, sig).transfers, f"{sig}: Star transfers")
        dec = decompose_odd(sig)
        res.check(dec.ok, f"{sig}: projector decomposition {dec}")
        if sig.n <= 5:
            res.check(coset_check(sig), f"{sig}: omega coset property")
        rep = classify_odd(sig)
        res.check(rep.tests_agree, f"{sig}: transfer tests disagree")
        res.check(rep.quotient_kind != "Pin_bc" or not rep.forms_group, f"{sig}: Pin_bc yet closed")
    table = auto_composition_table()
    res.check(table[(AutoKind.REV, AutoKind.REVSTAR)] is AutoKind.STAR, "Rev o RevStar != Star")
    return res


def suite_transfer_claims(cfg: VerifyConfig) -> SuiteResult:
    """Classical mod-8 statement on which automorphisms transfer."""
    res = SuiteResult("claim: transfer table", MINUS_FIRST)
    for sig in _odd_sigs(cfg, MINUS_FIRST):
        claims = claimed_transfers(sig.n, sig.is_complex)
        if not sig.is_complex and (sig.p - sig.q) % 8 not in (3, 7):
            continue
        for kind in AutoKind:
            got = transfer_test(kind, sig).transfers
            res.check(got == claims[kind.value], f"{sig} (minus_first): {kind.value} transfers={got}, claimed {claims[kind.value]}")
    return res


def suite_quotient_claims(cfg: VerifyConfig) -> SuiteResult:
    """Classical statement: Pin_bc (no group) iff complex n = 1, 5 (mod 8),
    otherwise Pin_b with double cover Z2xZ2."""
    res = SuiteResult("claim: quotient groups", MINUS_FIRST)
    for sig in _odd_sigs(cfg, MINUS_FIRST):
        if not sig.is_complex:
            continue
        rep = classify_odd(sig)
        want = claimed_quotient_kind(sig.n, True)
        res.check(rep.quotient_kind == want, f"{sig}: computed {rep.quotient_kind}, claimed {want}")
        if want == "Pin_bc":
            res.check(not rep.forms_group, f"{sig}: discrete set closes under composition")
        else:
            res.check(rep.double_cover is GroupId.Z2xZ2, f"{sig}: double cover {rep.double_cover}")
    return res


def suite_low_dim_names(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("low-dimensional Pin names")
    for p, q in ((3, 0), (0, 3), (5, 0), (0, 5)):
        name, consistent = low_dim_pin_annotation(Signature(p, q))
        res.check(consistent, f"{name}: omega^2 under plus_first disagrees with the name")
    return res


SUITES = (
    suite_algebra,
    suite_omega_table_odd,
    suite_automorphisms,
    suite_matrix_rep,
    suite_even_classification,
    suite_dirac_example,
    suite_spacetime_example,
    suite_odd,
    suite_transfer_claims,
    suite_quotient_claims,
    suite_low_dim_names,
)


def run_all(cfg: VerifyConfig | None = None) -> list[SuiteResult]:
    cfg = cfg or VerifyConfig()
    return [suite(cfg) for suite in SUITES]
