"""Exact coefficient arithmetic for a unit-modulus deformation parameter.

The twisted torus products pick up half-integer powers of the deformation
parameter q, so coefficients are Laurent polynomials in a formal symbol s
with s**2 = q, over Gaussian rationals.  Keeping s formal avoids choosing a
branch of q**(1/2) and certifies every identity for all q on the unit circle
at once; :meth:`PhaseScalar.eval_numeric` fixes the branch s = exp(i*pi*theta)
for q = exp(2*pi*i*theta), theta in [0, 2).

All values are immutable and all operations are pure functions, so they may
be shared freely between threads.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping, Union

__all__ = [
    "GaussianRational",
    "ParseError",
    "PhaseScalar",
    "ONE",
    "ZERO",
    "phase_pow",
    "parse_phase",
    "tokenize",
]

RationalLike = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "GaussianRational"]


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """A complex number a + b*i with exact rational parts.

    ``Fraction`` keeps both parts in lowest terms with positive denominator,
    so equality is plain structural equality.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def from_value(cls, value: ScalarLike) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def __add__(self, other: ScalarLike) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.from_value(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: ScalarLike) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        return self + (-GaussianRational.from_value(other))

    def __rsub__(self, other: ScalarLike) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.from_value(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return _frac_str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{_frac_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imtxt = "i" if mag == 1 else f"{_frac_str(mag)}i"
        return f"({_frac_str(self.re)}{sign}{imtxt})"


_GR_ONE = GaussianRational(1)


def _half_exp_str(e: int) -> str:
    """s-exponent e rendered as the q-exponent e/2."""
    return str(e // 2) if e % 2 == 0 else f"{e}/2"


def join_signed(parts: list[str]) -> str:
    """Join rendered terms with " + "/" - ", folding a leading minus sign."""
    out = [parts[0]]
    for p in parts[1:]:
        if p.startswith("-"):
            out.append(f" - {p[1:]}")
        else:
            out.append(f" + {p}")
    return "".join(out)


class PhaseScalar:
    """Laurent polynomial in s over Gaussian rationals, s**2 = q.

    The monomial c*s**e stands for c*q**(e/2).  Stored in canonical sparse
    form: a mapping from s-exponent to nonzero coefficient, so two scalars
    are equal as formal Laurent polynomials iff their term maps coincide.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, ScalarLike] | ScalarLike = ()):
        if isinstance(terms, (int, Fraction, GaussianRational)):
            terms = {0: terms}
        data = {}
        for e, c in dict(terms).items():
            if not isinstance(e, int):
                raise TypeError(f"s-exponent must be an integer, got {e!r}")
            c = GaussianRational.from_value(c)
            if c:
                data[e] = c
        self._terms = data

    @classmethod
    def _raw(cls, terms: dict[int, GaussianRational]) -> "PhaseScalar":
        self = object.__new__(cls)
        self._terms = terms
        return self

    @property
    def terms(self) -> Mapping[int, GaussianRational]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[int, GaussianRational]]:
        return iter(self._terms.items())

    def as_monomial(self) -> tuple[int, GaussianRational] | None:
        """Return (s-exponent, coefficient) if this is a single term, else None."""
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms.items()))

    def __add__(self, other: "PhaseScalar | ScalarLike") -> "PhaseScalar":
        if not isinstance(other, (PhaseScalar, int, Fraction, GaussianRational)):
            return NotImplemented
        other = _as_phase(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            acc = out.get(e)
            if acc is None:
                out[e] = c
            else:
                acc = acc + c
                if acc:
                    out[e] = acc
                else:
                    del out[e]
        return PhaseScalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "PhaseScalar":
        return PhaseScalar._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "PhaseScalar | ScalarLike") -> "PhaseScalar":
        if not isinstance(other, (PhaseScalar, int, Fraction, GaussianRational)):
            return NotImplemented
        return self + (-_as_phase(other))

    def __rsub__(self, other: "PhaseScalar | ScalarLike") -> "PhaseScalar":
        return (-self) + other

    def __mul__(self, other: "PhaseScalar | ScalarLike") -> "PhaseScalar":
        if not isinstance(other, (PhaseScalar, int, Fraction, GaussianRational)):
            return NotImplemented
        other = _as_phase(other)
        mono = self.as_monomial()
        if mono is not None:
            e, c = mono
            if c is _GR_ONE or c == _GR_ONE:
                return other._shift(e)
            return PhaseScalar._raw({e + f: c * d for f, d in other._terms.items()})
        out: dict[int, GaussianRational] = {}
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                g = e + f
                prod = c * d
                acc = out.get(g)
                out[g] = prod if acc is None else acc + prod
        return PhaseScalar._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PhaseScalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "PhaseScalar":
        mono = self.as_monomial()
        if mono is None:
            raise ValueError("only single-term phase scalars are invertible")
        e, c = mono
        return PhaseScalar._raw({-e: c.inverse()})

    def _shift(self, e: int) -> "PhaseScalar":
        """Multiply by s**e (exponent shift)."""
        if e == 0:
            return self
        return PhaseScalar._raw({f + e: c for f, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PhaseScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self._terms == PhaseScalar(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def eval_numeric(self, theta: float) -> complex:
        """Evaluate at s = exp(i*pi*theta), i.e. q = exp(2*pi*i*theta)."""
        base = cmath.exp(1j * math.pi * theta)
        return sum((c.to_complex() * base**e for e, c in self._terms.items()), 0j)

    def render(self) -> str:
        """Canonical text: terms by ascending s-exponent, powers written in q."""
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                parts.append(str(c))
            elif c == _GR_ONE:
                parts.append(f"q^({_half_exp_str(e)})")
            elif c == GaussianRational(-1):
                parts.append(f"-q^({_half_exp_str(e)})")
            else:
                parts.append(f"{c}*q^({_half_exp_str(e)})")
        return join_signed(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"PhaseScalar({dict(sorted(self._terms.items()))!r})"


def _as_phase(value: "PhaseScalar | ScalarLike") -> PhaseScalar:
    if isinstance(value, PhaseScalar):
        return value
    return PhaseScalar(value)


ZERO = PhaseScalar._raw({})
ONE = PhaseScalar._raw({0: _GR_ONE})


def phase_pow(e: int) -> PhaseScalar:
    """The monomial s**e, i.e. q**(e/2)."""
    if e == 0:
        return ONE
    return PhaseScalar._raw({e: _GR_ONE})


# --- tokenizing and parsing of the canonical scalar rendering ---

class ParseError(ValueError):
    """Syntax error in expression text, with the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@lru_cache(maxsize=None)
def _token_pattern(names: tuple[str, ...]) -> "re.Pattern[str]":
    # longest generator names first so e.g. "U1" wins over "U"
    alts = sorted(set(names) | {"q", "i"}, key=len, reverse=True)
    alt = "|".join(re.escape(n) for n in alts)
    return re.compile(
        rf"(?P<num>\d+(?:/\d+)?)|(?P<name>{alt})|(?P<word>[A-Za-z]\w*)|(?P<op>[\^()*+\-])"
    )


Token = tuple[str, object, int]


def tokenize(text: str, names: tuple[str, ...] = ()) -> list[Token]:
    """Split expression text into (kind, value, position) tokens.

    ``names`` are the generator symbols of the ambient algebra; adjacent
    generators need no separator ("U1U2" is two tokens).  Unknown identifiers
    tokenize as kind "word" so the caller can report them.
    """
    pattern = _token_pattern(tuple(names))
    tokens: list[Token] = []
    pos, n = 0, len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = pattern.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", Fraction(m.group()), pos))
        else:
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


def _peek_op(tokens: list[Token], i: int, ops: str) -> bool:
    return i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in ops


def parse_signed_int(tokens: list[Token], i: int) -> tuple[int, int]:
    """An integer exponent: optionally parenthesized, optionally signed."""
    parens = _peek_op(tokens, i, "(")
    if parens:
        i += 1
    sign = 1
    if _peek_op(tokens, i, "+-"):
        sign = -1 if tokens[i][1] == "-" else 1
        i += 1
    if i >= len(tokens) or tokens[i][0] != "num":
        pos = tokens[i][2] if i < len(tokens) else len(tokens)
        raise ParseError("expected an integer exponent", pos)
    value = tokens[i][1]
    if value.denominator != 1:
        raise ParseError("generator exponent must be an integer", tokens[i][2])
    i += 1
    if parens:
        if not _peek_op(tokens, i, ")"):
            pos = tokens[i][2] if i < len(tokens) else len(tokens)
            raise ParseError("expected ')'", pos)
        i += 1
    return sign * int(value), i


def parse_q_exponent(tokens: list[Token], i: int) -> tuple[int, int]:
    """A q-exponent (integer or half-integer), returned in s-exponent units."""
    parens = _peek_op(tokens, i, "(")
    if parens:
        i += 1
    sign = 1
    if _peek_op(tokens, i, "+-"):
        sign = -1 if tokens[i][1] == "-" else 1
        i += 1
    if i >= len(tokens) or tokens[i][0] != "num":
        pos = tokens[i][2] if i < len(tokens) else len(tokens)
        raise ParseError("expected a q exponent", pos)
    value = sign * tokens[i][1]
    doubled = 2 * value
    if doubled.denominator != 1:
        raise ParseError("q exponent must be a multiple of 1/2", tokens[i][2])
    i += 1
    if parens:
        if not _peek_op(tokens, i, ")"):
            pos = tokens[i][2] if i < len(tokens) else len(tokens)
            raise ParseError("expected ')'", pos)
        i += 1
    return int(doubled), i


def _parse_scalar_atom(tokens: list[Token], i: int) -> tuple[PhaseScalar, int]:
    if i >= len(tokens):
        raise ParseError("expected a scalar", len(tokens))
    kind, value, pos = tokens[i]
    if kind == "num":
        return PhaseScalar(value), i + 1
    if kind == "name" and value == "i":
        return PhaseScalar(GaussianRational(0, 1)), i + 1
    if kind == "name" and value == "q":
        i += 1
        if _peek_op(tokens, i, "^"):
            e, i = parse_q_exponent(tokens, i + 1)
            return phase_pow(e), i
        return phase_pow(2), i
    if kind == "op" and value == "(":
        inner, i = _parse_scalar_expr(tokens, i + 1)
        if not _peek_op(tokens, i, ")"):
            p = tokens[i][2] if i < len(tokens) else len(tokens)
            raise ParseError("expected ')'", p)
        return inner, i + 1
    raise ParseError(f"expected a scalar, found {value!r}", pos)


def _starts_scalar_atom(tokens: list[Token], i: int) -> bool:
    if i >= len(tokens):
        return False
    kind, value, _ = tokens[i]
    return kind == "num" or (kind == "name" and value in ("i", "q")) or (
        kind == "op" and value == "("
    )


def _parse_scalar_term(tokens: list[Token], i: int) -> tuple[PhaseScalar, int]:
    value, i = _parse_scalar_atom(tokens, i)
    while True:
        if _peek_op(tokens, i, "*"):
            nxt, i = _parse_scalar_atom(tokens, i + 1)
        elif _starts_scalar_atom(tokens, i):
            nxt, i = _parse_scalar_atom(tokens, i)
        else:
            return value, i
        value = value * nxt


def _parse_scalar_expr(tokens: list[Token], i: int) -> tuple[PhaseScalar, int]:
    total = ZERO
    sign = 1
    if _peek_op(tokens, i, "+-"):
        sign = -1 if tokens[i][1] == "-" else 1
        i += 1
    while True:
        term, i = _parse_scalar_term(tokens, i)
        total = total + (term if sign == 1 else -term)
        if _peek_op(tokens, i, "+-"):
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        else:
            return total, i


def parse_phase(text: str) -> PhaseScalar:
    """Parse the canonical scalar rendering back into a PhaseScalar."""
    tokens = tokenize(text)
    value, i = _parse_scalar_expr(tokens, 0)
    if i != len(tokens):
        raise ParseError("unexpected trailing input", tokens[i][2])
    return value
