"""Command-line workbench.

Exit codes: 0 on success, 1 on domain, structure or format errors (and on a
failed ``verify`` or demo check), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from . import colorings as col
from .decoders import (
    decodable_limit,
    decode_delta2,
    decode_range_membership,
    decode_range_table,
    replay_verdict,
)
from .errors import DomainError, HindmanError
from .formats import (
    format_int_set,
    parse_enumerated_function,
    parse_int_set,
    parse_interval,
    parse_limit_approximation,
    read_text,
)
from .numerals import decompose
from .solver import (
    fs_bounded,
    is_chain,
    is_monochromatic,
    search_monochromatic,
    synthesize_delta2_solution,
    synthesize_power_solution,
    thin_chain,
    thin_first_digit,
)
from .stages import (
    EnumeratedFunction,
    InstrumentedFunction,
    LimitApproximation,
    is_fresh,
    range_oracle,
    sg,
)

SCHEMES = ("delta2", "four", "three", "parity", "const")

# Built-in inputs for the demo commands when no file is given.
DEMO_FUNCTION = EnumeratedFunction({1: 4, 2: 6, 3: 8, 4: 2}, tail_offset=6, threshold=4)
DEMO_APPROXIMATION = LimitApproximation(
    {
        0: [(0, 0), (4, 1), (9, 0), (20, 1)],
        1: [(0, 1), (3, 0), (7, 1)],
        2: [(0, 0), (2, 1), (30, 0)],
        3: [(0, 1), (5, 0), (11, 1)],
        4: [(0, 0), (6, 1), (13, 0)],
        5: [(0, 1), (8, 0), (50, 1)],
    },
    default=0,
    horizon=5,
)


def _bool(v: bool) -> str:
    return "true" if v else "false"


class _Output:
    def __init__(self, path):
        self.path = path
        self.chunks: list[str] = []

    def __call__(self, line: str = "") -> None:
        self.chunks.append(line + "\n")

    def flush(self) -> None:
        text = "".join(self.chunks)
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


@contextmanager
def _output(args):
    out = _Output(getattr(args, "out", None))
    yield out
    out.flush()


def _load_function(args) -> EnumeratedFunction:
    if not args.enum:
        raise DomainError("this command needs --enum PATH")
    return parse_enumerated_function(read_text(args.enum))


def _load_approximation(args) -> LimitApproximation:
    if not args.approx:
        raise DomainError("this command needs --approx PATH")
    return parse_limit_approximation(read_text(args.approx))


def _load_set(args) -> tuple[int, ...]:
    if not args.set:
        raise DomainError("this command needs --set PATH")
    return parse_int_set(read_text(args.set))


def _coloring(args) -> col.Coloring:
    scheme = args.scheme
    if scheme == "parity":
        return col.parity_coloring()
    if scheme == "const":
        return col.constant_coloring()
    if scheme == "delta2":
        return col.delta2_coloring(_load_approximation(args))
    if scheme == "four":
        return col.four_coloring(_load_function(args))
    return col.three_coloring(_load_function(args))


def cmd_decompose(args) -> int:
    d = decompose(args.n, args.base)
    with _output(args) as out:
        out(f"n={d.value} base={d.base}")
        out("terms=" + " ".join(f"({p},{i})" for p, i in d.terms))
        out(f"lambda={d.lam} mu={d.mu} i={d.first_digit}")
        out("gaps=" + " ".join(f"({a},{b})" for a, b in d.gaps))
    return 0


def cmd_color(args) -> int:
    c = _coloring(args)
    lo, hi = parse_interval(args.range)
    with _output(args) as out:
        out(f"# scheme={c.descriptor}")
        for n in range(lo, hi + 1):
            out(f"{n},{c(n)}")
    return 0


def cmd_search(args) -> int:
    c = _coloring(args)
    found = search_monochromatic(c, args.N, args.sum_len, args.size, jobs=args.jobs)
    params = f"scheme={args.scheme} N={args.N} sum-len={args.sum_len} size={args.size}"
    with _output(args) as out:
        if found is None:
            out(f"# no monochromatic set: {params}")
        else:
            out(format_int_set(found.elements, f"search {params}").rstrip("\n"))
    return 0


def cmd_verify(args) -> int:
    c = _coloring(args)
    X = _load_set(args)
    cert = is_monochromatic(c, X, args.sum_len)
    with _output(args) as out:
        if cert.verdict:
            out(f"monochromatic color={col.color_label(c, cert.color)}")
        else:
            a, b = cert.violation
            out(
                "not monochromatic: "
                f"{{{','.join(map(str, a))}}}->{col.color_label(c, c(sum(a)))} "
                f"{{{','.join(map(str, b))}}}->{col.color_label(c, c(sum(b)))}"
            )
    return 0 if cert.verdict else 1


def cmd_thin(args) -> int:
    X = _load_set(args)
    if args.mode in ("digit", "both"):
        X = thin_first_digit(X, args.base)
    if args.mode in ("chain", "both"):
        X = thin_chain(X, args.base)
    with _output(args) as out:
        out(format_int_set(X, f"thin mode={args.mode} base={args.base}").rstrip("\n"))
    return 0


def cmd_synth(args) -> int:
    if args.scheme == "delta2":
        a = _load_approximation(args)
        W = synthesize_delta2_solution(a, args.size)
        note = "synth scheme=delta2 sum-len=2 (uses the schedules' stabilization stages)"
    elif args.scheme in ("four", "three"):
        base = 3 if args.scheme == "four" else 7
        W = synthesize_power_solution(_load_function(args), base, args.size, args.sum_len)
        note = f"synth scheme={args.scheme} base={base} sum-len={args.sum_len} (uses privileged range knowledge)"
    else:
        raise DomainError("synth supports --scheme delta2, four or three")
    with _output(args) as out:
        out(format_int_set(W.elements, note).rstrip("\n"))
    return 0


def cmd_decode_range(args) -> int:
    f = _load_function(args)
    X = _load_set(args)
    verdicts = decode_range_table(X, f, args.base)
    with _output(args) as out:
        out(f"# decode-range enum={args.enum} set={args.set} base={args.base} certified=false")
        out("y,member,n,m,bound")
        for v in verdicts:
            out(f"{v.y},{_bool(v.member)},{v.n},{v.m},{v.bound}")
    return 0


def cmd_decode_delta2(args) -> int:
    a = _load_approximation(args)
    W = _load_set(args)
    K = a.horizon if args.N is None else args.N
    bs = decode_delta2(W, col.delta2_coloring(a), K)
    with _output(args) as out:
        out(f"# decode-delta2 approx={args.approx} set={args.set} K={K}")
        out("B0=" + ",".join(map(str, sorted(bs.B0))))
        out("B1=" + ",".join(map(str, sorted(bs.B1))))
        out("element,k,i,color,verdict")
        for ev in bs.evidence:
            out(f"{ev.element},{ev.level},{ev.digit},{ev.color},{ev.verdict}")
    return 0


def cmd_range_oracle(args) -> int:
    f = _load_function(args)
    if args.range:
        lo, hi = parse_interval(args.range)
    elif args.set:
        lo, hi = 1, decodable_limit(_load_set(args), args.base)
    else:
        raise DomainError("range-oracle needs --range A..B or --set PATH")
    with _output(args) as out:
        out(f"# PRIVILEGED range oracle (ground truth, not a decoder) enum={args.enum}")
        out("y,member")
        for y in range(lo, hi + 1):
            out(f"{y},{_bool(range_oracle(f, y))}")
    return 0


class _Transcript:
    def __init__(self, out):
        self.out = out
        self.ok = True

    def check(self, claim: str, passed: bool, detail: str = "") -> None:
        self.ok &= bool(passed)
        tail = f" ({detail})" if detail else ""
        self.out(f"[{'PASS' if passed else 'FAIL'}] {claim}{tail}")


def cmd_demo_range(args) -> int:
    f = _load_function(args) if args.enum else DEMO_FUNCTION
    base = args.base
    c = col.four_coloring(f) if base == 3 else col.three_coloring(f)
    with _output(args) as out:
        t = _Transcript(out)
        out(f"# demo-range base={base} coloring={c.scheme} size={args.size}")
        out(f"# function: exceptions={dict(f.exceptions)} tail_offset={f.tail_offset} threshold={f.threshold}")
        X = synthesize_power_solution(f, base, args.size, 3).elements
        out("# synthesized X (privileged): " + " ".join(map(str, X)))
        cert = is_monochromatic(c, X, 3)
        t.check("FS<=3(X) is monochromatic", cert.verdict,
                f"color={col.color_label(c, cert.color)}" if cert.verdict else f"violation={cert.violation}")
        t.check("all elements share the first nonzero digit", len({decompose(x, base).first_digit for x in X}) == 1)
        t.check("chain condition mu(n) < lam(m) for consecutive n < m", is_chain(X, base))
        t.check("each element is fresh over its predecessor (privileged)",
                all(is_fresh(f, n, m, base) for n, m in zip(X, X[1:])))
        two_sums = fs_bounded(X, 2)
        t.check("SG(n) is even for every n in FS<=2(X)", all(sg(f, n, base) % 2 == 0 for n in two_sums),
                f"{len(two_sums)} sums")
        probe = InstrumentedFunction(f)
        verdicts, within = [], True
        for y in range(1, decodable_limit(X, base) + 1):
            probe.reset()
            v = decode_range_membership(X, probe, y, base, certified=True)
            within &= probe.max_argument <= v.bound and replay_verdict(v, f)
            verdicts.append(v)
        t.check("decoding queries f only at arguments <= lam(m)", within, f"{len(verdicts)} verdicts")
        out("y,member,n,m,bound")
        for v in verdicts:
            out(f"{v.y},{_bool(v.member)},{v.n},{v.m},{v.bound}")
        mismatches = sum(v.member != range_oracle(f, v.y) for v in verdicts)
        t.check("decoded range(f) agrees with the range oracle", mismatches == 0,
                f"{len(verdicts) - mismatches}/{len(verdicts)} agree")
        out(f"result: {'PASS' if t.ok else 'FAIL'}")
    return 0 if t.ok else 1


def cmd_demo_delta2(args) -> int:
    a = _load_approximation(args) if args.approx else DEMO_APPROXIMATION
    c = col.delta2_coloring(a)
    K = a.horizon
    with _output(args) as out:
        t = _Transcript(out)
        out(f"# demo-delta2 horizon={K} size={args.size}")
        out("# note: a finite mind-change schedule stands in for the target set; no bi-immunity is claimed")
        limits = {k: a.limit(k) for k in range(K + 1)}
        stages = {k: a.stabilization(k) for k in range(K + 1)}
        out("# limits A(k): " + " ".join(f"{k}:{v}" for k, v in limits.items()))
        out("# stabilization stages: " + " ".join(f"{k}:{s}" for k, s in stages.items()))
        top = max(3**9, max(stages.values()))
        disagree = True
        for k in range(K + 1):
            ones = {c(s) for s in range(max(stages[k], 1), top + 1) if s % 3 ** (k + 1) == 3**k}
            twos = {c(s) for s in range(max(stages[k], 1), top + 1) if s % 3 ** (k + 1) == 2 * 3**k}
            disagree &= not (ones & twos)
        t.check("past stabilization, O_{k,1} and O_{k,2} never share a color", disagree, f"checked up to {top}")
        W = synthesize_delta2_solution(a, args.size).elements
        out("# synthesized W: " + " ".join(map(str, W)))
        cert = is_monochromatic(c, W, 2)
        t.check("FS<=2(W) is monochromatic", cert.verdict, f"color={cert.color}" if cert.verdict else "")
        bs = decode_delta2(W, c, K)
        out("B0=" + ",".join(map(str, sorted(bs.B0))))
        out("B1=" + ",".join(map(str, sorted(bs.B1))))
        t.check("B1 is contained in A", all(limits[k] == 1 for k in bs.B1))
        t.check("B0 is contained in the complement of A", all(limits[k] == 0 for k in bs.B0))
        t.check("B0 and B1 are disjoint", bs.disjoint)
        met = {k for k in range(K + 1) if any(w % 3 ** (k + 1) in (3**k, 2 * 3**k) for w in W)}
        t.check("every informative k lands in B0 or B1", met <= (bs.B0 | bs.B1), f"informative={sorted(met)}")
        out(f"result: {'PASS' if t.ok else 'FAIL'}")
    return 0 if t.ok else 1


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bhindman", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, *flags):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--out", metavar="PATH")
        for flag in flags:
            {
                "base": lambda: p.add_argument("--base", type=int, choices=(3, 7), default=3),
                "scheme": lambda: p.add_argument("--scheme", choices=SCHEMES, required=True),
                "enum": lambda: p.add_argument("--enum", metavar="PATH"),
                "approx": lambda: p.add_argument("--approx", metavar="PATH"),
                "set": lambda: p.add_argument("--set", metavar="PATH"),
                "range": lambda: p.add_argument("--range", metavar="A..B"),
                "sum-len": lambda: p.add_argument("--sum-len", type=_positive, default=3),
                "size": lambda: p.add_argument("--size", type=_positive, default=4),
                "N": lambda: p.add_argument("--N", type=_positive, metavar="HORIZON"),
                "jobs": lambda: p.add_argument("--jobs", type=_positive, default=1),
            }[flag]()
        return p

    p = add("decompose", cmd_decompose, "print the nonzero-digit decomposition of n", "base")
    p.add_argument("n", type=int)
    p = add("color", cmd_color, "dump a coloring as CSV over an interval", "scheme", "enum", "approx")
    p.add_argument("--range", metavar="A..B", required=True)
    p = add("search", cmd_search, "least monochromatic set by backtracking", "scheme", "enum", "approx",
            "sum-len", "size", "jobs")
    p.add_argument("--N", type=_positive, metavar="HORIZON", required=True)
    add("verify", cmd_verify, "check that FS<=n of a set is monochromatic", "scheme", "enum", "approx", "set",
        "sum-len")
    p = add("thin", cmd_thin, "thin a set to one first digit and/or a chain", "set", "base")
    p.add_argument("--mode", choices=("chain", "digit", "both"), default="both")
    add("synth", cmd_synth, "construct a guaranteed solution", "scheme", "enum", "approx", "size", "sum-len")
    add("decode-range", cmd_decode_range, "decode range(f) from a chain with bounded queries", "enum", "set",
        "base")
    add("decode-delta2", cmd_decode_delta2, "decode the B0/B1 index sets from a solution", "approx", "set", "N")
    add("range-oracle", cmd_range_oracle, "PRIVILEGED ground-truth range membership", "enum", "set", "range",
        "base")
    add("demo-delta2", cmd_demo_delta2, "end-to-end two-coloring pipeline", "approx", "size")
    p = add("demo-range", cmd_demo_range, "end-to-end range decoding pipeline", "enum", "size")
    p.add_argument("--base", type=int, choices=(3, 7), default=7)
    p.set_defaults(size=6)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (HindmanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
