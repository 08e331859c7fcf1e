"""Count pairs with mu_tilde = 1 at rank 6, split by length difference.

With --oracle the brute-force KL computation is run alongside for pairs
x <= y with l(y) <= --max-len and the two counts are compared.
"""

import argparse
from collections import Counter

from tlmarkov.coxeter import build_graph
from tlmarkov.kl import KLOracle, OracleLimits
from tlmarkov.suites import fc_elements
from tlmarkov.traces import mu_tilde


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--oracle", action="store_true")
    args = ap.parse_args()

    g = build_graph(6)
    els = fc_elements(6, args.max_len)
    oracle = KLOracle(g, OracleLimits(max_length=max(args.max_len, 1))) if args.oracle else None
    by_gap = Counter()
    disagreements = 0
    for i, x in enumerate(els):
        for y in els[i:]:
            m = mu_tilde(g, x, y)
            if m:
                by_gap[abs(y.length - x.length)] += 1
            if oracle is not None:
                disagreements += oracle.mu_tilde(x, y) != m
    print(f"{len(els)} FC elements of length <= {args.max_len}")
    print("length gap  pairs with mu_tilde = 1")
    for gap, c in sorted(by_gap.items()):
        print(f"  {gap:8d}  {c}")
    if oracle is not None:
        print(f"oracle disagreements: {disagreements}")


if __name__ == "__main__":
    main()
