"""Command-line entry point: classify, table, rep, quotient and verify."""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import COMPLEX, MINUS_FIRST, PLUS_FIRST, REAL, Signature, signatures, volume_element
from .automorphisms import AutoKind
from .classification import PinClassification, abc_str, classify_even
from .errors import ClassificationError, CliffordError, DimensionError, FieldError, InvalidBasis, SignatureMismatch
from .gaussian import format_exact
from .matrix import Matrix
from .quotient import (
    QuotientReport,
    classify_odd,
    decompose_odd,
    low_dim_pin_annotation,
    structure_label,
    transfer_test,
)
from .rep import RepBasis, constructed_basis, dirac_basis, matrix_C, matrix_E, matrix_W, spacetime_basis
from .verify import VerifyConfig, run_all

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def render(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _mat(x: Matrix | None):
    return None if x is None else x.to_strings()


def _sig(sig: Signature) -> dict:
    return {"p": sig.p, "q": sig.q, "n": sig.n, "field": sig.field, "sign_rule": sig.sign_rule, "label": sig.label()}


def _signature(args) -> Signature:
    p, q = args.p, args.q
    if p < 0 or q < 0 or p + q == 0:
        raise UsageError("need p, q >= 0 with p + q >= 1")
    if args.field == COMPLEX:
        return Signature(p + q, 0, COMPLEX, args.sign_rule)
    return Signature(p, q, REAL, args.sign_rule)


def _basis(args) -> RepBasis:
    name = getattr(args, "basis", "constructed")
    if name == "dirac":
        if (args.p, args.q) not in ((4, 0), (4, 1)):
            raise UsageError("the dirac basis exists for --p 4 --q 0 (or 4 1)")
        return dirac_basis(args.field)
    if name == "spacetime":
        if (args.p, args.q) != (1, 3):
            raise UsageError("the spacetime basis exists for --p 1 --q 3 only")
        return spacetime_basis()
    return constructed_basis(_signature(args))


# payloads ---------------------------------------------------------------


def classification_payload(cl: PinClassification) -> dict:
    return {
        "kind": "even",
        "signature": _sig(cl.sig),
        "field": cl.field,
        "basis": cl.basis_name,
        "abc": list(cl.abc),
        "abc_text": cl.abc_text,
        "cliffordian": cl.cliffordian,
        "commutation": cl.commutation,
        "group_A": cl.group_A,
        "group_A_quotient": cl.group_A_quotient.value,
        "group_C_abc": cl.group_C_abc.value,
        "group_C_abc_pretty": cl.group_C_abc.pretty,
        "label": cl.label,
        "admissible": [{"abc": abc_str(a.abc), "group_A": a.group_A, "group_C_abc": a.group_C.value} for a in cl.admissible],
        "E_factors": list(cl.E_factors),
        "C_factors": list(cl.C_factors),
        "W": _mat(cl.W),
        "E": _mat(cl.E),
        "C": _mat(cl.C),
    }


def quotient_payload(rep: QuotientReport, with_decomposition: bool = False) -> dict:
    out = {
        "kind": "odd",
        "signature": _sig(rep.sig),
        "quotient_signature": _sig(rep.quotient_sig),
        "epsilon": format_exact(rep.epsilon),
        "transfers": {
            kind.value: {"intrinsic": t.intrinsic, "kernel_preserved": t.kernel_preserved, "transfers": t.transfers}
            for kind, t in ((kind, transfer_test(kind, rep.sig)) for kind in AutoKind)
        },
        "tests_agree": rep.tests_agree,
        "discrete_set": list(rep.discrete_set),
        "forms_group": rep.forms_group,
        "quotient_kind": rep.quotient_kind,
        "b": rep.b,
        "c": rep.c,
        "double_cover": rep.double_cover.value if rep.double_cover else None,
        "label": rep.label,
        "structure": structure_label(rep.sig),
        "kernel": {
            "dimension": rep.kernel.kernel_rank,
            "quotient_dimension": rep.kernel.quotient_rank,
            "two_sided_ideal": rep.kernel.two_sided_ideal,
            "ok": rep.kernel.ok,
        },
    }
    ann = low_dim_pin_annotation(rep.sig)
    if ann is not None:
        out["annotation"] = {"name": ann[0], "consistent_with_sign_rule": ann[1]}
    if with_decomposition:
        dec = decompose_odd(rep.sig)
        out["decomposition"] = {
            "idempotent": dec.idempotent,
            "annihilating": dec.annihilating,
            "complete": dec.complete,
            "central": dec.central,
            "summands": [
                {"sign": s.sign, "dim": s.dim, "image_rank": s.image_rank, "unit_image_is_one": s.unit_image_is_one}
                for s in dec.summands
            ],
            "ok": dec.ok,
        }
    return out


def table_rows(max_n: int, field: str, sign_rule: str) -> list[dict]:
    rows = []
    for n in range(1, max_n + 1):
        sigs = [Signature(n, 0, COMPLEX, sign_rule)] if field == COMPLEX else signatures(n, REAL, sign_rule)
        for sig in sigs:
            row = {"p": sig.p, "q": sig.q, "n": n, "p_minus_q_mod_8": (sig.p - sig.q) % 8, "omega_sq": volume_element(sig).omega_sq}
            if n % 2 == 0:
                cl = classify_even(sig=sig)
                row.update(abc=cl.abc_text, group_C_abc=cl.group_C_abc.value, pretty=cl.group_C_abc.pretty,
                           cliffordian=cl.cliffordian, commutation=cl.commutation)
            else:
                row.update(abc=None, group_C_abc=None, pretty=None, cliffordian=None, commutation=None,
                           structure=structure_label(sig) if n >= 3 else None)
            rows.append(row)
    return rows


def rep_payload(basis: RepBasis) -> dict:
    w = matrix_W(basis, require_prime=False)
    e, c = matrix_E(basis), matrix_C(basis)
    return {
        "signature": _sig(basis.sig),
        "basis": basis.name or basis.origin,
        "generators": [g.to_strings() for g in basis.gens],
        "W": _mat(w.W),
        "W_prime": _mat(w.W_prime),
        "a": w.a,
        "E": _mat(e.matrix),
        "E_factors": list(e.factors),
        "b": e.square,
        "C": _mat(c.matrix),
        "C_factors": list(c.factors),
        "c": c.square,
    }


def verify_payload(max_n: int) -> dict:
    results = run_all(VerifyConfig(max_n=max_n))
    return {
        "max_n": max_n,
        "passed": all(r.passed for r in results),
        "suites": [
            {"name": r.name, "convention": r.convention, "passed": r.passed, "checks": r.checks, "failures": r.failures}
            for r in results
        ],
    }


# text rendering ---------------------------------------------------------


def _text_matrix(name: str, rows) -> list[str]:
    if rows is None:
        return [f"{name}: unavailable"]
    width = max(len(v) for row in rows for v in row)
    return [f"{name} ="] + ["  [" + "  ".join(v.rjust(width) for v in row) + "]" for row in rows]


def _text(command: str, payload: dict) -> str:
    lines: list[str] = []
    if command == "table":
        lines.append(f"{'p':>2} {'q':>2}  p-q mod 8  {'a b c':<6}  {'C^{a,b,c}':<10}  PT=±TP")
        for r in payload["rows"]:
            if r["abc"] is None:
                lines.append(f"{r['p']:>2} {r['q']:>2}  {r['p_minus_q_mod_8']:>9}  {'odd':<6}  {'-':<10}  -")
            else:
                abc = r["abc"].replace(",", " ")
                sign = "PT=-TP" if r["cliffordian"] else "PT=TP"
                lines.append(f"{r['p']:>2} {r['q']:>2}  {r['p_minus_q_mod_8']:>9}  {abc:<6}  {r['pretty']:<10}  {sign}")
    elif command == "verify":
        for s in payload["suites"]:
            lines.append(f"{'PASS' if s['passed'] else 'FAIL'}  {s['name']}  [{s['convention']}]  {s['checks']} checks")
            lines.extend(f"      {f}" for f in s["failures"])
        lines.append("all suites passed" if payload["passed"] else "some suites failed")
    elif command == "rep":
        lines.append(f"{payload['signature']['label']}  basis={payload['basis']}")
        for i, g in enumerate(payload["generators"], 1):
            lines += _text_matrix(f"g{i}", g)
        lines += _text_matrix(f"W (W^2 = {payload['a']:+d}I)", payload["W"])
        lines += _text_matrix("W'", payload["W_prime"])
        lines += _text_matrix(f"E (E^2 = {payload['b']:+d}I)", payload["E"])
        lines += _text_matrix(f"C (C^2 = {payload['c']:+d}I)", payload["C"])
    elif payload.get("kind") == "even":
        lines.append(payload["label"])
        lines.append(f"a b c = {payload['abc_text'].replace(',', ' ')}   C^{{a,b,c}} = {payload['group_C_abc_pretty']}   {payload['commutation']}")
        lines.append(f"basis = {payload['basis']}   E = {payload['E_factors']}   C = {payload['C_factors']}")
        lines += _text_matrix("W", payload["W"]) + _text_matrix("E", payload["E"]) + _text_matrix("C", payload["C"])
    else:
        lines.append(payload["label"])
        lines.append(payload["structure"])
        flags = "  ".join(f"{k}={'yes' if v['transfers'] else 'no'}" for k, v in sorted(payload["transfers"].items()))
        lines.append(f"transfers: {flags}   tests agree: {payload['tests_agree']}")
        k = payload["kernel"]
        lines.append(f"kernel dim {k['dimension']}, quotient dim {k['quotient_dimension']}, kind {payload['quotient_kind']}")
        if "decomposition" in payload:
            d = payload["decomposition"]
            lines.append(f"projectors: idempotent={d['idempotent']} annihilating={d['annihilating']} "
                         f"complete={d['complete']} central={d['central']}")
        if "annotation" in payload:
            a = payload["annotation"]
            flag = "" if a["consistent_with_sign_rule"] else "  (omega^2 under this sign rule disagrees)"
            lines.append(a["name"] + flag)
    return "\n".join(lines)


# argument handling ------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffpin", description="Pin group classification via exact Clifford algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, sig=True, basis=False):
        if sig:
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--field", choices=(REAL, COMPLEX), default=REAL)
        sp.add_argument("--sign-rule", choices=(PLUS_FIRST, MINUS_FIRST), default=PLUS_FIRST)
        if basis:
            sp.add_argument("--basis", choices=("constructed", "dirac", "spacetime"), default="constructed")
        sp.add_argument("--json", action="store_true")

    common(sub.add_parser("classify", help="classify Pin(p,q)"), basis=True)
    tb = sub.add_parser("table", help="one row per signature with p+q <= N")
    tb.add_argument("--max-n", type=int, default=8)
    common(tb, sig=False)
    common(sub.add_parser("rep", help="generator matrices with W, E, C"), basis=True)
    common(sub.add_parser("quotient", help="odd-n quotient and transferred automorphisms"))
    vf = sub.add_parser("verify", help="run every verification suite")
    vf.add_argument("--max-n", type=int, default=6)
    vf.add_argument("--json", action="store_true")
    return parser


def execute(args) -> tuple[int, dict]:
    cmd = args.command
    status = EXIT_OK
    if cmd == "classify":
        basis_name = args.basis
        if basis_name == "constructed" and (args.p + args.q) % 2:
            payload = quotient_payload(classify_odd(_signature(args)))
        else:
            payload = classification_payload(classify_even(_basis(args), field=args.field))
    elif cmd == "table":
        if args.max_n < 1:
            raise UsageError("--max-n must be positive")
        payload = {"field": args.field, "sign_rule": args.sign_rule, "rows": table_rows(args.max_n, args.field, args.sign_rule)}
    elif cmd == "rep":
        payload = rep_payload(_basis(args))
    elif cmd == "quotient":
        payload = quotient_payload(classify_odd(_signature(args)), with_decomposition=True)
    else:
        if args.max_n < 2:
            raise UsageError("--max-n must be at least 2")
        payload = verify_payload(args.max_n)
        status = EXIT_OK if payload["passed"] else EXIT_FAIL
    return status, {"schema_version": SCHEMA_VERSION, "command": cmd, "payload": payload}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        status, doc = execute(args)
    except (UsageError, FieldError, DimensionError, SignatureMismatch, InvalidBasis) as exc:
        print(f"cliffpin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ClassificationError, CliffordError) as exc:
        print(f"cliffpin: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(render(doc) if args.json else _text(doc["command"], doc["payload"]))
    return status


if __name__ == "__main__":
    sys.exit(main())
