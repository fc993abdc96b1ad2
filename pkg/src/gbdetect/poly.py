"""Exact multivariate polynomial arithmetic over the rationals.

Monomials are exponent tuples of a fixed ambient dimension, polynomials are
canonically sorted sequences of (coefficient, monomial) terms, and monomial
comparison comes from a positive weight vector with a descending-lex
tie-break so that it is a total order.  The canonical storage order of a
polynomial (descending lex on exponent vectors) is deliberately independent
of any weight order: the same polynomial object can be ranked under many
candidate orders without re-sorting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

Monomial = tuple[int, ...]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_TOKEN_RE = re.compile(r"(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^])")


class ParseError(ValueError):
    """Rejected input text, with a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured cap and is refused outright."""


def _check_same_dim(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise ValueError(f"monomial dimension mismatch: {len(a)} != {len(b)}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of two monomials (componentwise exponent sum)."""
    _check_same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    """Least common multiple (componentwise max)."""
    _check_same_dim(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    """Greatest common divisor (componentwise min)."""
    _check_same_dim(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b, i.e. a[i] <= b[i] for every i."""
    _check_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """The monomial a/b; requires b to divide a."""
    _check_same_dim(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError(f"{b} does not divide {a}")
    return out


def mono_degree(a: Monomial) -> int:
    return sum(a)


def is_pure_power(a: Monomial) -> Optional[int]:
    """Index of the single variable with a positive exponent, if any.

    The constant monomial is not a pure power: a vacuous x_i^0 would make
    every leading-term set certify finiteness, so positivity is required.
    """
    idx = None
    for i, e in enumerate(a):
        if e > 0:
            if idx is not None:
                return None
            idx = i
    return idx


def monomials_of_degree(n: int, degree: int) -> list[Monomial]:
    """All monomials of the given total degree in n variables, lex-descending."""
    if n < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if n == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        out.extend((e,) + rest for rest in monomials_of_degree(n - 1, degree - e))
    return out


class Term(NamedTuple):
    coeff: Fraction
    mono: Monomial


@dataclass(frozen=True)
class Polynomial:
    """A polynomial as a tuple of terms, lex-descending on exponent vectors.

    Invariants: monomials pairwise distinct, no zero coefficients, and the
    zero polynomial is the empty term tuple.  Build through ``from_terms``
    unless the input is already canonical.
    """

    n: int
    terms: tuple[Term, ...]

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Term]) -> "Polynomial":
        acc: dict[Monomial, Fraction] = {}
        for t in terms:
            if len(t.mono) != n:
                raise ValueError(f"term {t} has dimension {len(t.mono)}, expected {n}")
            if any(e < 0 for e in t.mono):
                raise ValueError(f"negative exponent in {t.mono}")
            acc[t.mono] = acc.get(t.mono, Fraction(0)) + t.coeff
        kept = [Term(c, m) for m, c in acc.items() if c != 0]
        kept.sort(key=lambda t: t.mono, reverse=True)
        return cls(n, tuple(kept))

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n, ())

    @classmethod
    def constant(cls, n: int, value) -> "Polynomial":
        c = Fraction(value)
        if c == 0:
            return cls.zero(n)
        return cls(n, (Term(c, (0,) * n),))

    @classmethod
    def monomial(cls, n: int, mono: Monomial, coeff=Fraction(1)) -> "Polynomial":
        return cls.from_terms(n, [Term(Fraction(coeff), tuple(mono))])

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[Monomial, ...]:
        return tuple(t.mono for t in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(t.mono) for t in self.terms), default=-1)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("polynomial dimension mismatch")
        return Polynomial.from_terms(self.n, self.terms + other.terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, tuple(Term(-t.coeff, t.mono) for t in self.terms))

    def mul_term(self, t: Term) -> "Polynomial":
        """Multiply by a single term.

        Translating every exponent vector by the same amount preserves the
        lex order, so the result is built directly in canonical form.
        """
        if t.coeff == 0:
            return Polynomial.zero(self.n)
        return Polynomial(
            self.n,
            tuple(Term(u.coeff * t.coeff, mono_mul(u.mono, t.mono)) for u in self.terms),
        )

    def drop_term(self, index: int) -> "Polynomial":
        return Polynomial(self.n, self.terms[:index] + self.terms[index + 1 :])


@dataclass(frozen=True)
class WeightOrder:
    """A term order: positive rational weights plus a descending-lex tie-break.

    Monomials compare by exact weight dot product; equal weights fall back to
    descending lex on the exponent vectors, so distinct monomials never
    compare equal.
    """

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if not ws:
            raise ValueError("weight vector must be nonempty")
        if any(w <= 0 for w in ws):
            raise ValueError("weights must be strictly positive")
        object.__setattr__(self, "weights", ws)
        # integer fast path: most orders in practice have integer weights
        ints = tuple(w.numerator for w in ws) if all(w.denominator == 1 for w in ws) else None
        object.__setattr__(self, "_ints", ints)

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight_of(self, mono: Monomial) -> Fraction:
        if len(mono) != self.n:
            raise ValueError("monomial dimension mismatch with weight vector")
        return sum((w * e for w, e in zip(self.weights, mono)), Fraction(0))

    def key(self, mono: Monomial):
        """Sort key realizing the order: (weight, exponent vector)."""
        if len(mono) != self.n:
            raise ValueError("monomial dimension mismatch with weight vector")
        ints = self._ints
        if ints is not None:
            return (sum(w * e for w, e in zip(ints, mono)), mono)
        return (self.weight_of(mono), mono)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1; 0 only when a == b."""
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0


def leading_term(order: WeightOrder, f: Polynomial) -> Term:
    """The unique maximal term of f under the order."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading term")
    if order.n != f.n:
        raise ValueError("order dimension mismatch with polynomial")
    return max(f.terms, key=lambda t: order.key(t.mono))


@dataclass(frozen=True)
class PolySystem:
    n: int
    var_names: tuple[str, ...]
    polys: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a system needs at least one variable")
        if len(self.var_names) != self.n:
            raise ValueError("variable name count does not match dimension")
        if len(set(self.var_names)) != self.n:
            raise ValueError("variable names must be distinct")
        for name in self.var_names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        for p in self.polys:
            if p.n != self.n:
                raise ValueError("polynomial dimension mismatch with system")


# ---------------------------------------------------------------------------
# text format
#
#   vars x y
#   x^2 + x*y        # one polynomial per line, '#' starts a comment
#   3/2*y^2 - 1
# ---------------------------------------------------------------------------


def _tokenize(text: str, line_no: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line_no, pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(), pos + 1))
        pos = m.end()
    return tokens


class _TokenStream:
    def __init__(self, tokens, line_no):
        self.tokens = tokens
        self.line = line_no
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is not None:
            self.i += 1
        return tok

    def error(self, message, tok=None):
        col = tok[2] if tok else (self.tokens[-1][2] + len(self.tokens[-1][1]) if self.tokens else 1)
        raise ParseError(message, self.line, col)


def _parse_powers(ts: _TokenStream, var_index: dict[str, int], n: int) -> Monomial:
    exps = [0] * n
    while True:
        tok = ts.next()
        if tok is None or tok[0] != "name":
            ts.error("expected a variable name", tok)
        if tok[1] not in var_index:
            ts.error(f"unknown variable {tok[1]!r}", tok)
        exp = 1
        nxt = ts.peek()
        if nxt and nxt[0] == "op" and nxt[1] == "^":
            ts.next()
            etok = ts.next()
            if etok is None or etok[0] != "num":
                ts.error("expected a positive integer exponent after '^'", etok)
            exp = int(etok[1])
            if exp < 1:
                ts.error("exponent must be at least 1", etok)
        exps[var_index[tok[1]]] += exp
        nxt = ts.peek()
        if nxt and nxt[0] == "op" and nxt[1] == "*":
            ts.next()
            continue
        return tuple(exps)


def _parse_term(ts: _TokenStream, var_index: dict[str, int], n: int) -> Term:
    tok = ts.peek()
    if tok is None:
        ts.error("expected a term", tok)
    if tok[0] == "num":
        ts.next()
        num = int(tok[1])
        den = 1
        nxt = ts.peek()
        if nxt and nxt[0] == "op" and nxt[1] == "/":
            ts.next()
            dtok = ts.next()
            if dtok is None or dtok[0] != "num":
                ts.error("expected a denominator", dtok)
            den = int(dtok[1])
            if den == 0:
                ts.error("zero denominator", dtok)
        coeff = Fraction(num, den)
        nxt = ts.peek()
        if nxt and nxt[0] == "op" and nxt[1] == "*":
            ts.next()
            return Term(coeff, _parse_powers(ts, var_index, n))
        return Term(coeff, (0,) * n)
    if tok[0] == "name":
        return Term(Fraction(1), _parse_powers(ts, var_index, n))
    ts.error("expected a term", tok)


def _parse_poly_line(text: str, line_no: int, var_index: dict[str, int], n: int) -> Polynomial:
    ts = _TokenStream(_tokenize(text, line_no), line_no)
    terms = []
    sign = 1
    tok = ts.peek()
    if tok and tok[0] == "op" and tok[1] in "+-":
        ts.next()
        sign = -1 if tok[1] == "-" else 1
    while True:
        t = _parse_term(ts, var_index, n)
        terms.append(Term(sign * t.coeff, t.mono))
        tok = ts.next()
        if tok is None:
            break
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            continue
        ts.error("expected '+', '-' or end of line", tok)
    return Polynomial.from_terms(n, terms)


def parse_system(text: str) -> PolySystem:
    """Parse the polynomial text format; raises ParseError with positions."""
    header = None
    header_line = 0
    poly_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if header is None:
            header = content
            header_line = lineno
        else:
            poly_lines.append((lineno, content))
    if header is None:
        raise ParseError("empty input: expected a 'vars' header", 1, 1)

    tokens = _tokenize(header, header_line)
    if not tokens or tokens[0][1] != "vars":
        col = tokens[0][2] if tokens else 1
        raise ParseError("expected a 'vars' header line", header_line, col)
    names = []
    for kind, value, col in tokens[1:]:
        if kind != "name":
            raise ParseError(f"invalid variable name {value!r}", header_line, col)
        if value in names:
            raise ParseError(f"duplicate variable name {value!r}", header_line, col)
        names.append(value)
    if not names:
        raise ParseError("at least one variable is required", header_line, 1)

    n = len(names)
    var_index = {name: i for i, name in enumerate(names)}
    polys = [_parse_poly_line(content, lineno, var_index, n) for lineno, content in poly_lines]
    return PolySystem(n, tuple(names), tuple(polys))


def format_monomial(mono: Monomial, var_names: tuple[str, ...]) -> str:
    if not any(mono):
        return "1"
    parts = []
    for name, e in zip(var_names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, var_names: tuple[str, ...]) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for i, t in enumerate(p.terms):
        neg = t.coeff < 0
        mag = -t.coeff if neg else t.coeff
        if not any(t.mono):
            body = str(mag)
        elif mag == 1:
            body = format_monomial(t.mono, var_names)
        else:
            body = f"{mag}*{format_monomial(t.mono, var_names)}"
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def format_system(system: PolySystem) -> str:
    lines = ["vars " + " ".join(system.var_names)]
    lines.extend(format_polynomial(p, system.var_names) for p in system.polys)
    return "\n".join(lines) + "\n"


def parse_monomial(text: str, var_names: tuple[str, ...]) -> Monomial:
    """Parse a bare monomial such as ``x^2*y`` (or ``1`` for the constant)."""
    n = len(var_names)
    var_index = {name: i for i, name in enumerate(var_names)}
    ts = _TokenStream(_tokenize(text, 1), 1)
    tok = ts.peek()
    if tok and tok[0] == "num":
        if tok[1] == "1" and len(ts.tokens) == 1:
            return (0,) * n
        ts.error("expected a monomial without coefficient", tok)
    mono = _parse_powers(ts, var_index, n)
    trailing = ts.next()
    if trailing is not None:
        ts.error("unexpected trailing input", trailing)
    return mono
