"""Command-line front end.

Exit codes: 0 on success, 1 when a verification suite finds a violation,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import combinat as cb
from . import involution, nsym, polytope, rules, symfunc, verify
from .combinat import DomainError
from .freemodule import NSYM_TAGS, Element, family, product_rule
from .tableaux import ImmaculateTableau, enumerate_immaculate


class UsageError(Exception):
    pass


# -- expressions ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<basis>(?:Psi|[HRShps])\[[^\]]*\])|(?P<op>[-+*()]))"
)


def tokenize(text: str) -> list:
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"parse error at position {pos}: unexpected {text[pos:pos + 10]!r}")
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "basis":
            tag, body = value.split("[", 1)
            try:
                key = cb.parse_composition("[" + body)
            except DomainError as exc:
                raise UsageError(f"parse error at position {start}: {exc}") from None
            if not cb.is_proper(key):
                raise UsageError(f"parse error at position {start}: index {list(key)} is not proper")
            out.append(("elem", Element.monomial(tag, key), start))
        elif kind == "num":
            out.append(("num", int(value), start))
        else:
            out.append((value, value, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise UsageError(f"parse error at position {tok[2]}: expected {kind!r}")
        self.i += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise UsageError(f"parse error at position {tok[2]}: unexpected {tok[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            value = add(value, rhs if op == "+" else negate(rhs))
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "*":
            self.take()
            value = times(value, self.unary())
        return value

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return negate(self.unary())
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind, value, pos = self.peek()
        if kind in ("num", "elem"):
            self.take()
            return value
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise UsageError(f"parse error at position {pos}: unexpected {what}")


def negate(x):
    return -x


def _common(x: Element, y: Element):
    if x.tag == y.tag:
        return x, y
    if family(x.tag) != family(y.tag):
        raise DomainError(f"cannot combine {x.tag} with {y.tag}")
    if family(x.tag) == "nsym":
        return nsym.to_h(x), nsym.to_h(y)
    return symfunc.to_s(x), symfunc.to_s(y)


def add(x, y):
    if isinstance(x, int) and isinstance(y, int):
        return x + y
    if isinstance(x, int):
        x = Element.monomial(y.tag, (), x)
    if isinstance(y, int):
        y = Element.monomial(x.tag, (), y)
    x, y = _common(x, y)
    return x + y


def times(x, y):
    if isinstance(x, int) or isinstance(y, int):
        return x * y
    if product_rule(x.tag, y.tag) is None:
        x, y = _common(x, y)
    return x * y


def evaluate(text: str, basis: str = "S") -> Element:
    value = _Parser(text).parse()
    if isinstance(value, int):
        value = Element.monomial(basis, (), value)
    return convert(value, basis)


def convert(x: Element, basis: str) -> Element:
    if basis in NSYM_TAGS:
        if family(x.tag) != "nsym":
            raise DomainError(f"cannot express a {x.tag} element in basis {basis}")
        return nsym.to_basis(x, basis)
    if family(x.tag) == "nsym":
        # a classical target means the commutative image
        x = nsym.chi(x)
    if basis == "s":
        return symfunc.to_s(x)
    if basis == "h":
        return symfunc.to_h(x)
    raise DomainError(f"conversion to basis {basis} is not supported")


# -- output helpers -----------------------------------------------------------------------------


def emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(obj)


def composition_arg(text: str) -> tuple:
    try:
        return cb.parse_composition(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- subcommands ----------------------------------------------------------------------------------


def cmd_eval(args) -> int:
    x = evaluate(args.expr, args.basis)
    emit(x.to_json() if args.format == "json" else x.render(), args.format)
    return 0


def cmd_lr(args) -> int:
    if args.beta is not None:
        c = rules.lr_coefficient(args.alpha, args.content, args.beta)
        emit({"coefficient": c} if args.format == "json" else c, args.format)
        return 0
    if cb.is_partition(args.content):
        x = rules.immaculate_lr_product(args.alpha, args.content)
    else:
        x = rules.general_imm_product(args.alpha, args.content)
    emit(x.to_json() if args.format == "json" else x.render(), args.format)
    return 0


def cmd_tableaux(args) -> int:
    found = enumerate_immaculate(args.inner, args.content, outer=args.outer, yamanouchi=args.yamanouchi)
    if args.format == "json":
        print(json.dumps([T.to_json() for T in found]))
    else:
        for k, T in enumerate(found):
            if k:
                print()
            print(f"# shape {cb.format_composition(T.outer())}")
            print(T.render())
        print(f"# {len(found)} tableaux")
    return 0


def cmd_polytope(args) -> int:
    spec = polytope.PolytopeSpec(args.alpha, args.nu, args.beta, N=args.N, prefix_rule=args.prefix_rule)
    if args.hive:
        points = polytope.enumerate_hive_points(spec)
    else:
        points = polytope.enumerate_points(spec)
    if args.list:
        if args.format == "json":
            print(json.dumps([p.to_json() for p in points]))
        else:
            for k, p in enumerate(points):
                if k:
                    print()
                print(p.render())
            print(f"# {len(points)} points")
    else:
        emit({"count": len(points), "N": spec.N} if args.format == "json" else len(points), args.format)
    return 0


def cmd_involution(args) -> int:
    try:
        data = json.loads(args.tableau)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--tableau is not valid JSON: {exc}") from None
    T = ImmaculateTableau.from_json(data)
    print(json.dumps(involution.trace(T, args.lam), sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    if args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(verify.SUITES)}")
    options = {}
    if args.suite == "polytope":
        options["n_mode"] = args.polytope_N
    start = time.perf_counter()
    result = verify.run_suite(args.suite, args.max_size, jobs=args.jobs, **options)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "cases": result.cases, "failures": result.failures,
                          "seconds": round(elapsed, 3)}, default=list))
    else:
        print(f"{result.summary()} ({elapsed:.1f}s)")
        for f in result.failures[: args.show]:
            print("  " + json.dumps(f, default=list))
    return 0 if result.ok else 1


def cmd_scan(args) -> int:
    findings = rules.conjecture_scan(args.bound, max_shift=args.max_shift)
    lines = [json.dumps(f, sort_keys=True) for f in findings]
    summary = json.dumps({"bound": args.bound, "max_shift": args.max_shift, "counterexamples": len(findings)})
    if args.report:
        with open(args.report, "w") as fh:
            for line in lines + [summary]:
                fh.write(line + "\n")
    for line in lines:
        print(line)
    print(summary)
    return 0


# -- argument parsing ---------------------------------------------------------------------------


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="immaculate", description="Immaculate basis computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("eval", help="evaluate an expression such as 'S[2,1]*R[1,2]'")
    sp.add_argument("expr")
    sp.add_argument("--basis", choices=("H", "R", "Psi", "S", "h", "s"), default="S",
                    help="target basis; h and s project NSym elements to symmetric functions")
    fmt(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("lr", help="LR coefficient, or the whole product without --beta")
    sp.add_argument("--alpha", type=composition_arg, required=True)
    sp.add_argument("--content", type=composition_arg, required=True)
    sp.add_argument("--beta", type=composition_arg)
    fmt(sp)
    sp.set_defaults(func=cmd_lr)

    sp = sub.add_parser("tableaux", help="enumerate immaculate tableaux")
    sp.add_argument("--inner", type=composition_arg, default=())
    sp.add_argument("--content", type=composition_arg, required=True)
    sp.add_argument("--outer", type=composition_arg)
    sp.add_argument("--yamanouchi", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_tableaux)

    sp = sub.add_parser("polytope", help="lattice points of the LR polytope")
    psub = sp.add_subparsers(dest="action", required=True, parser_class=_ArgParser)
    cp = psub.add_parser("count")
    cp.add_argument("--alpha", type=composition_arg, required=True)
    cp.add_argument("--nu", type=composition_arg, required=True)
    cp.add_argument("--beta", type=composition_arg, required=True)
    cp.add_argument("--hive", action="store_true", help="enumerate in hive coordinates")
    cp.add_argument("--list", action="store_true", help="print the points")
    cp.add_argument("--N", type=int, default=None, help="weight in the first-column inequalities (default |nu|)")
    cp.add_argument("--prefix-rule", choices=polytope.PREFIX_RULES, default="reading")
    fmt(cp)
    cp.set_defaults(func=cmd_polytope)

    sp = sub.add_parser("involution", help="trace the sign-reversing involution")
    isub = sp.add_subparsers(dest="action", required=True, parser_class=_ArgParser)
    tp = isub.add_parser("trace")
    tp.add_argument("--tableau", required=True, help='JSON such as {"inner":[1,2],"rows":[[1,1,2],[2],[2,3]]}')
    tp.add_argument("--lam", type=composition_arg, required=True)
    tp.set_defaults(func=cmd_involution)

    sp = sub.add_parser("verify", help="run a named invariant suite")
    sp.add_argument("suite", help=", ".join(sorted(verify.SUITES)))
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--show", type=int, default=5, help="failures to print")
    sp.add_argument("--polytope-N", choices=("nu", "max-beta"), default="nu")
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan-conjecture", help="search for shift-symmetry failures with composition right factors")
    sp.add_argument("--bound", type=int, default=6)
    sp.add_argument("--max-shift", type=int, default=2)
    sp.add_argument("--report", help="write JSON lines here")
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
