"""Distribution of Markov trace exponents over all FC elements, ranks 6 to 8.

For each rank prints a table of (a-value, trace exponent) -> count, and
confirms the diagram trace agrees with the algebraic one element by element.
"""

import argparse
from collections import Counter

from tlmarkov.algebra import a_value
from tlmarkov.coxeter import build_graph, inverse
from tlmarkov.diagrams import rho, tau_bullet
from tlmarkov.suites import fc_elements
from tlmarkov.traces import tr_exponent


def survey(n):
    g = build_graph(n)
    table = Counter()
    involutions = 0
    mismatches = 0
    for w in fc_elements(n):
        e = tr_exponent(g, w)
        table[(a_value(g, w), e)] += 1
        involutions += inverse(g, w) == w
        mismatches += tau_bullet(rho(w.word, n)) != n + e
    return table, involutions, mismatches


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ranks", type=int, nargs="+", default=[6, 7, 8])
    args = ap.parse_args()
    for n in args.ranks:
        table, invol, bad = survey(n)
        total = sum(table.values())
        print(f"E{n}: {total} elements, {invol} involutions, diagram mismatches: {bad}")
        print("   a   exp  count")
        for (a, e), c in sorted(table.items()):
            print(f"  {a:2d}  {e:4d}  {c:5d}")


if __name__ == "__main__":
    main()
