"""Computed transfer flags for odd n against the classical mod-8 statement."""

import argparse

from cliffpin.algebra import Signature, signatures, volume_element
from cliffpin.automorphisms import AutoKind
from cliffpin.quotient import classify_odd, transfer_test
from cliffpin.reference import claimed_quotient_kind, claimed_transfers


def rows(max_n: int, sign_rule: str):
    for n in range(3, max_n + 1, 2):
        yield Signature(n, 0, "complex", sign_rule)
        yield from (s for s in signatures(n, "real", sign_rule) if volume_element(s).omega_sq == 1)


def main(max_n: int, sign_rule: str):
    kinds = [k for k in AutoKind if k is not AutoKind.ID]
    print(f"{'algebra':<10} " + " ".join(f"{k.value:>8}" for k in kinds) + "   quotient      stated")
    for sig in rows(max_n, sign_rule):
        claims = claimed_transfers(sig.n, sig.is_complex)
        cells = []
        for k in kinds:
            got = transfer_test(k, sig).transfers
            mark = "" if got == claims[k.value] else "!"
            cells.append(f"{('yes' if got else 'no') + mark:>8}")
        rep = classify_odd(sig)
        cover = rep.double_cover.value if rep.double_cover else "-"
        print(f"{sig.label():<10} " + " ".join(cells) + f"   {rep.quotient_kind:<6} {cover:<6} {claimed_quotient_kind(sig.n, sig.is_complex)}")
    print("\n! marks a flag that differs from the mod-8 statement")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--sign-rule", default="minus_first")
    a = ap.parse_args()
    main(a.max_n, a.sign_rule)
