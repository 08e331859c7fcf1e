"""Command-line front end.

Exit codes: 0 success, 1 a verified property failed, 2 usage error.
Words are space-separated generator indices; the empty string is the identity.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import a_value, p_classes, p_prime, product
from .config import RunConfig
from .coxeter import (
    WordError, build_graph, enumerate_fc, format_word, inverse, normalize,
)
from .diagrams import (
    close, compose, content, render_ascii, rho, tau_bullet, to_json,
)
from .kl import OracleLimits
from .suites import SUITES, run_suite
from .traces import coeff_v_minus1, gram_exponent, mu_tilde, trace_reduce, tr_exponent
from .laurent import delta_power_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _graph(n):
    try:
        return build_graph(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _element(g, text, what):
    try:
        return normalize(g, text)
    except (ValueError, WordError) as exc:
        raise UsageError(f"{what}: {exc}") from exc


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_mu(args) -> int:
    g = _graph(args.n)
    x = _element(g, args.x, "--x")
    y = _element(g, args.y, "--y")
    report = {"n": g.n, "x": format_word(x.word), "y": format_word(y.word)}
    lines = []
    mus = []
    if args.method in ("algebra", "both"):
        e = gram_exponent(g, x, y)
        m = mu_tilde(g, x, y)
        mus.append(m)
        report.update(trace_exponent=e)
        lines.append(f"algebra: tr(b_x b_y^-1) = delta^{e}")
    if args.method in ("diagram", "both"):
        # closed as stacked, without reducing the composite first
        d = compose(rho(x.word, g.n), rho(inverse(g, y).word, g.n))
        c = content(close(d.diagram))
        t = d.delta_exp + c
        m = int(t == g.n - 1)
        mus.append(m)
        report.update(delta_exponent=d.delta_exp, content=c, tau_bullet=t)
        lines.append(f"diagram: delta^{d.delta_exp}, content {c}, tau = delta^{t}")
    report["mu"] = mus[0]
    lines.append(f"mu={mus[0]}")
    agree = len(set(mus)) == 1
    if not agree:
        report["disagreement"] = mus
        lines.append(f"METHODS DISAGREE: {mus}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if agree else EXIT_FAIL


def cmd_trace(args) -> int:
    g = _graph(args.n)
    w = _element(g, args.word, "--word")
    e = tr_exponent(g, w)
    k, A = trace_reduce(g, w)
    series = delta_power_series(e, args.terms)
    report = {
        "n": g.n,
        "word": format_word(w.word),
        "delta_exponent": e,
        "a_value": a_value(g, w),
        "reduction": {"k": k, "A": sorted(A)},
        "series": {str(p): c for p, c in sorted(series.items(), reverse=True)},
        "coeff_v_minus1": coeff_v_minus1(e),
    }
    human = (f"tr(b[{format_word(w.word) or '1'}]) = delta^{e}\n"
             f"a-value {report['a_value']}, reduces to delta^{k} tr(i({sorted(A)}))")
    _emit(args, report, human)
    return EXIT_OK


def cmd_mult(args) -> int:
    g = _graph(args.n)
    x = _element(g, args.x, "--x")
    y = _element(g, args.y, "--y")
    p = product(g, x, y)
    report = {"n": g.n, "delta_exponent": p.exp, "word": format_word(p.elt.word),
              "layers": [list(layer) for layer in p.elt.layers]}
    _emit(args, report, str(p))
    return EXIT_OK


def cmd_enum(args) -> int:
    if args.n > 8 and args.max_len is None:
        raise UsageError("E_n for n >= 9 has infinitely many fully commutative elements; pass --max-len")
    g = _graph(args.n)
    count = 0
    for w in sorted(enumerate_fc(g, args.max_len), key=lambda w: (w.length, w.word)):
        count += 1
        if args.count:
            continue
        if args.json:
            print(json.dumps({"length": w.length, "word": format_word(w.word)}))
        else:
            print(f"{w.length:3d}  {format_word(w.word) or '1'}")
    if args.count:
        _emit(args, {"n": g.n, "count": count}, str(count))
    return EXIT_OK


def cmd_diagram(args) -> int:
    g = _graph(args.n)
    w = _element(g, args.word, "--word")
    d = rho(w.word, g.n)
    if args.json:
        print(json.dumps(to_json(d), sort_keys=True))
    else:
        print(render_ascii(d))
        print(f"  tau_bullet:      delta^{tau_bullet(d)}")
    return EXIT_OK


def cmd_pclasses(args) -> int:
    g = _graph(args.n)
    part = p_classes(g)
    primes = set(p_prime(g))
    ok = all(sum(A in cls for A in primes) == 1 for cls in part.classes)
    classes = []
    for rep, cls in zip(part.representatives, part.classes):
        classes.append({"representative": sorted(rep),
                        "members": sorted(sorted(A) for A in cls)})
    if args.json:
        print(json.dumps({"n": g.n, "classes": classes, "one_rep_per_class": ok}, sort_keys=True))
    else:
        print(f"{len(classes)} classes")
        for c in classes:
            print(f"  rep {c['representative']}: {len(c['members'])} member(s) {c['members']}")
        print("P' meets every class exactly once" if ok else "P' does NOT meet every class exactly once")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    try:
        cfg = RunConfig(
            n=args.n, seed=args.seed, samples=args.samples,
            limits=OracleLimits(args.max_len, args.max_interval),
            output="json" if args.json else "human",
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = run_suite(args.suite, cfg)
    if args.json:
        print(json.dumps(res.to_json(), sort_keys=True))
    else:
        for desc, ok in res.checks:
            print(f"  [{'pass' if ok else 'FAIL'}] {desc}")
        print(f"{res.name}: {'pass' if res.passed else 'FAIL'} ({res.seconds:.2f}s)")
    return EXIT_OK if res.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=6, help="rank (default 6)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="tlmarkov", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mu", parents=[common], help="mu-tilde(x, y) from the trace")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--method", choices=("algebra", "diagram", "both"), default="both")
    s.set_defaults(func=cmd_mu)

    s = sub.add_parser("trace", parents=[common], help="Markov trace of a basis element")
    s.add_argument("--word", required=True)
    s.add_argument("--terms", type=int, default=6, help="series terms to print")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("mult", parents=[common], help="product b_x b_y")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_mult)

    s = sub.add_parser("enum", parents=[common], help="list fully commutative elements")
    s.add_argument("--max-len", type=int, default=None)
    s.add_argument("--count", action="store_true", help="print only the count")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("diagram", parents=[common], help="pillar diagram of b_w")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("pclasses", parents=[common], help="classes of commuting sets")
    s.set_defaults(func=cmd_pclasses)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help=", ".join(SUITES))
    s.add_argument("--seed", type=int, default=RunConfig.seed)
    s.add_argument("--samples", type=int, default=RunConfig.samples)
    s.add_argument("--max-len", type=int, default=OracleLimits.max_length)
    s.add_argument("--max-interval", type=int, default=OracleLimits.max_interval)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
