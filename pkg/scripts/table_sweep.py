"""Print (a,b,c), C^{a,b,c} and the commutation column for every even signature."""

import argparse
import time
from dataclasses import dataclass

from cliffpin.algebra import PLUS_FIRST
from cliffpin.classification import sweep_even
from cliffpin.reference import ABC_TABLE


@dataclass
class SweepConfig:
    max_n: int = 8
    field: str = "real"
    sign_rule: str = PLUS_FIRST


def main(cfg: SweepConfig):
    t0 = time.perf_counter()
    rows = sweep_even(cfg.max_n, cfg.field, cfg.sign_rule)
    print(f"{'(p,q)':>7}  p-q mod 8  a b c   C^{{a,b,c}}   commutation")
    for cl in rows:
        print(f"{f'({cl.sig.p},{cl.sig.q})':>7}  {(cl.sig.p - cl.sig.q) % 8:>9}  {cl.abc_text.replace(',', ' '):<6}  "
              f"{cl.group_C_abc.pretty:<10}  {cl.commutation}")
    seen = {cl.abc for cl in rows}
    print(f"\n{len(seen)} of {len(ABC_TABLE)} rows realized in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--field", default="real", choices=("real", "complex"))
    ap.add_argument("--sign-rule", default=PLUS_FIRST)
    a = ap.parse_args()
    main(SweepConfig(a.max_n, a.field, a.sign_rule))
