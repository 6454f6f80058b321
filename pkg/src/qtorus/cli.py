"""Command-line front end.

Expressions use the working notation of the library: generators juxtaposed
(or joined by '*'), integer powers with '^', scalars built from rationals,
'i' and half-integer powers of q, and parentheses for grouping.  Examples::

    qtorus normalize --algebra torus "V U"
    qtorus mul --algebra p2 "U1 V2" "V1 U2^-1"
    qtorus apply --map delta "U^2 V"
    qtorus check --suite torus-relation,antipode-law --seed 7 --trials 50
    qtorus eval --theta 0.1375 --algebra torus "q^(1/2) U + V^-1"

Exit codes: 0 on success, 1 if a requested check fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .phases import (
    GaussianRational,
    ParseError,
    PhaseScalar,
    Token,
    parse_q_exponent,
    parse_signed_int,
    phase_pow,
    tokenize,
    _peek_op,
)
from .algebra import ALGEBRAS, AlgebraDescriptor, AlgebraElement
from .maps import MAPS
from .suite import (
    TrialConfig,
    render_reports_text,
    reports_to_records,
    run_suite,
)

__all__ = ["parse_expression", "main", "entry_point"]


# expression grammar, left-associative products:
#   expr   := [sign] term ((+|-) term)*
#   term   := factor+            with '*' allowed between factors
#   factor := gen [^ int] | scalar | ( expr )
#   scalar := rational | i | q [^ q-exponent]
class _Parser:
    def __init__(self, algebra: AlgebraDescriptor, text: str):
        self.algebra = algebra
        self.tokens = tokenize(text, algebra.generator_names)
        self.i = 0

    def parse(self) -> AlgebraElement:
        value = self._expr()
        if self.i != len(self.tokens):
            raise ParseError("unexpected trailing input", self.tokens[self.i][2])
        return value

    def _peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _expr(self) -> AlgebraElement:
        total = self.algebra.zero()
        sign = 1
        if _peek_op(self.tokens, self.i, "+-"):
            sign = -1 if self.tokens[self.i][1] == "-" else 1
            self.i += 1
        while True:
            term = self._term()
            total = total + (term if sign == 1 else -term)
            if _peek_op(self.tokens, self.i, "+-"):
                sign = -1 if self.tokens[self.i][1] == "-" else 1
                self.i += 1
            else:
                return total

    def _starts_factor(self) -> bool:
        tok = self._peek()
        if tok is None:
            return False
        kind, value, _ = tok
        return kind in ("num", "name", "word") or (kind == "op" and value == "(")

    def _term(self) -> AlgebraElement:
        value = self._factor()
        while True:
            if _peek_op(self.tokens, self.i, "*"):
                self.i += 1
                value = value * self._factor()
            elif self._starts_factor():
                value = value * self._factor()
            else:
                return value

    def _factor(self) -> AlgebraElement:
        tok = self._peek()
        if tok is None:
            raise ParseError("expected an expression", len(self.tokens))
        kind, value, pos = tok
        if kind == "num":
            self.i += 1
            return self.algebra.unit() * PhaseScalar(value)
        if kind == "word":
            raise ParseError(
                f"unknown generator {value!r} for algebra {self.algebra.name!r}", pos
            )
        if kind == "name":
            if value == "i":
                self.i += 1
                return self.algebra.unit() * PhaseScalar(GaussianRational(0, 1))
            if value == "q":
                self.i += 1
                if _peek_op(self.tokens, self.i, "^"):
                    e, self.i = parse_q_exponent(self.tokens, self.i + 1)
                    return self.algebra.unit() * phase_pow(e)
                return self.algebra.unit() * phase_pow(2)
            # a generator of the chosen algebra
            self.i += 1
            power = 1
            if _peek_op(self.tokens, self.i, "^"):
                power, self.i = parse_signed_int(self.tokens, self.i + 1)
            if power == 0:
                return self.algebra.unit()
            return self.algebra.generator(value, power)
        if kind == "op" and value == "(":
            self.i += 1
            inner = self._expr()
            if not _peek_op(self.tokens, self.i, ")"):
                p = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.tokens)
                raise ParseError("expected ')'", p)
            self.i += 1
            return inner
        raise ParseError(f"unexpected {value!r}", pos)


def parse_expression(algebra: AlgebraDescriptor, text: str) -> AlgebraElement:
    """Parse expression text and evaluate it to a canonical element."""
    return _Parser(algebra, text).parse()


def _algebra_from_name(name: str) -> AlgebraDescriptor:
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise ValueError(
            f"unknown algebra {name!r}; choose from {', '.join(ALGEBRAS)}"
        ) from None


def _scalar_records(scalar: PhaseScalar) -> list:
    return [
        [e, c.re.numerator, c.re.denominator, c.im.numerator, c.im.denominator]
        for e, c in sorted(scalar.terms.items())
    ]


def _format_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _monomial_label(algebra: AlgebraDescriptor, idx) -> str:
    parts = [
        name if k == 1 else f"{name}^{k}"
        for name, k in zip(algebra.generator_names, idx)
        if k
    ]
    return " ".join(parts) if parts else "1"


def _cmd_normalize(args) -> int:
    algebra = _algebra_from_name(args.algebra)
    element = parse_expression(algebra, args.expr)
    if args.format == "text":
        print(element.render())
    else:
        print(json.dumps({"algebra": algebra.name, "terms": element.to_records()}))
    return 0


def _cmd_mul(args) -> int:
    algebra = _algebra_from_name(args.algebra)
    product = parse_expression(algebra, args.left) * parse_expression(algebra, args.right)
    if args.format == "text":
        print(product.render())
    else:
        print(json.dumps({"algebra": algebra.name, "terms": product.to_records()}))
    return 0


def _cmd_apply(args) -> int:
    try:
        fmap = MAPS[args.map]
    except KeyError:
        raise ValueError(
            f"unknown map {args.map!r}; choose from {', '.join(MAPS)}"
        ) from None
    if args.algebra is not None and args.algebra != fmap.source.name:
        raise ValueError(
            f"map {fmap.name!r} expects elements of {fmap.source.name!r}, "
            f"got {args.algebra!r}"
        )
    element = parse_expression(fmap.source, args.expr)
    image = fmap(element)
    if isinstance(image, PhaseScalar):
        if args.format == "text":
            print(image.render())
        else:
            print(json.dumps({"scalar": _scalar_records(image)}))
    else:
        if args.format == "text":
            print(image.render())
        else:
            print(json.dumps({"algebra": image.algebra.name, "terms": image.to_records()}))
    return 0


def _cmd_check(args) -> int:
    cfg = TrialConfig(seed=args.seed, trials=args.trials)
    selection = None
    if args.suite:
        selection = [name for chunk in args.suite for name in chunk.split(",") if name]
    reports = run_suite(cfg, selection)
    if args.format == "text":
        print(render_reports_text(reports))
    else:
        print(json.dumps(reports_to_records(reports)))
    return 0 if all(not r.failures for r in reports) else 1


def _cmd_eval(args) -> int:
    algebra = _algebra_from_name(args.algebra)
    element = parse_expression(algebra, args.expr)
    values = element.eval_numeric(args.theta)
    if args.format == "text":
        for idx in sorted(values):
            print(f"{_monomial_label(algebra, idx)}: {_format_complex(values[idx])}")
    else:
        print(
            json.dumps(
                {
                    "algebra": algebra.name,
                    "theta": args.theta,
                    "coefficients": [
                        {
                            "index": list(idx),
                            "re": values[idx].real,
                            "im": values[idx].imag,
                        }
                        for idx in sorted(values)
                    ],
                }
            )
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=["text", "json", "json-like"],
        default="text",
        help="human-readable text or machine-readable output",
    )
    parser = argparse.ArgumentParser(
        prog="qtorus",
        description="exact computation in twisted torus algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[fmt], help="parse and print the canonical form")
    p.add_argument("--algebra", required=True, choices=list(ALGEBRAS))
    p.add_argument("expr")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("mul", parents=[fmt], help="multiply two expressions")
    p.add_argument("--algebra", required=True, choices=list(ALGEBRAS))
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("apply", parents=[fmt], help="apply a structure map")
    p.add_argument("--map", required=True, metavar="NAME")
    p.add_argument("--algebra", choices=list(ALGEBRAS), help="must match the map's source")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("check", parents=[fmt], help="run verification checks")
    p.add_argument("--suite", action="append", metavar="NAMES", help="comma-separated check names")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("eval", parents=[fmt], help="evaluate numerically at q = exp(2*pi*i*theta)")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--algebra", required=True, choices=list(ALGEBRAS))
    p.add_argument("expr")
    p.set_defaults(func=_cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.format == "json-like":
        args.format = "json"
    try:
        return args.func(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
