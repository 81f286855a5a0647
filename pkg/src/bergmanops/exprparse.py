"""Parser and printer for operator expressions.

Grammar (whitespace-insensitive)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := primary ('^' UINT)*
    primary  := rational | 'i' | 'z'INT | 'd'INT | '(' expr ')'
    rational := UINT ('/' UINT)?

Expressions normalize to first-order operators through the commutation rule
[d_k, z_j] = delta_jk (normal ordering, derivatives to the right).  Any
product or power whose normalized derivative order exceeds 1 is rejected:
the scope is first-order operators only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

from .operators import FirstOrderOperator
from .poly import MultiIndex, Polynomial, zero_index
from .scalars import ComplexRational, cplx, format_fraction
from fractions import Fraction


class ParseError(ValueError):
    """Syntax error (or variable index out of range) with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class OrderError(ValueError):
    """A product normalizes to derivative order 2 or higher."""


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Number:
    value: ComplexRational

@dataclass(frozen=True)
class Var:
    k: int

@dataclass(frozen=True)
class Partial:
    k: int

@dataclass(frozen=True)
class Sum:
    terms: tuple

@dataclass(frozen=True)
class Product:
    factors: tuple

@dataclass(frozen=True)
class Power:
    base: object
    exponent: int

@dataclass(frozen=True)
class Neg:
    operand: object


Expr = Number | Var | Partial | Sum | Product | Power | Neg


# -- tokenizer ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<zd>[zd])(?P<idx>\d+)|(?P<i>i)|(?P<op>[+\-*^()/]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        if match.group("int"):
            tokens.append(("int", match.group("int"), match.start("int")))
        elif match.group("zd"):
            kind = "var" if match.group("zd") == "z" else "partial"
            tokens.append((kind, match.group("idx"), match.start("zd")))
        elif match.group("i"):
            tokens.append(("imag", "i", match.start("i")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, dim: int):
        self.tokens = _tokenize(text)
        self.dim = dim
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, symbol: str):
        kind, value, at = self.peek()
        if kind != "op" or value != symbol:
            raise ParseError(f"expected {symbol!r}", at)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        kind, value, at = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected trailing input {value!r}", at)
        return expr

    def expr(self) -> Expr:
        terms = []
        if self._at_op("-"):
            self.advance()
            terms.append(Neg(self.term()))
        else:
            terms.append(self.term())
        while self._at_op("+") or self._at_op("-"):
            _, op, _ = self.advance()
            t = self.term()
            terms.append(Neg(t) if op == "-" else t)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while self._at_op("*"):
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Expr:
        node = self.primary()
        while self._at_op("^"):
            self.advance()
            kind, value, at = self.peek()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", at)
            self.advance()
            node = Power(node, int(value))
        return node

    def primary(self) -> Expr:
        kind, value, at = self.peek()
        if kind == "int":
            self.advance()
            num = int(value)
            if self._at_op("/"):
                self.advance()
                dkind, dvalue, dat = self.peek()
                if dkind != "int":
                    raise ParseError("expected denominator after '/'", dat)
                self.advance()
                if int(dvalue) == 0:
                    raise ParseError("zero denominator", dat)
                return Number(cplx(Fraction(num, int(dvalue))))
            return Number(cplx(num))
        if kind == "imag":
            self.advance()
            return Number(cplx(0, 1))
        if kind in ("var", "partial"):
            self.advance()
            k = int(value)
            if not 1 <= k <= self.dim:
                raise ParseError(f"variable index {k} out of range 1..{self.dim}", at)
            return Var(k) if kind == "var" else Partial(k)
        if kind == "op" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected a number, i, z<k>, d<k> or '('", at)

    def _at_op(self, symbol: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value == symbol


def parse_operator(text: str, dim: int) -> Expr:
    """Parse an operator expression over z1..zN, d1..dN."""
    return _Parser(text, dim).parse()


# -- printing -----------------------------------------------------------------

_PREC_SUM, _PREC_PROD, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4


def print_expr(expr: Expr) -> str:
    return _print(expr, _PREC_SUM)


def _print(expr: Expr, prec: int) -> str:
    if isinstance(expr, Number):
        v = expr.value
        if v.is_real() and v.re >= 0:
            out, mine = format_fraction(v.re), _PREC_ATOM
        elif v == cplx(0, 1):
            out, mine = "i", _PREC_ATOM
        elif v.is_real():
            out, mine = "-" + format_fraction(-v.re), _PREC_SUM
        elif v.re == 0:
            if v.im > 0:
                out, mine = f"{format_fraction(v.im)}*i", _PREC_PROD
            else:
                out, mine = f"-{format_fraction(-v.im)}*i", _PREC_SUM
        else:
            inner = print_expr(Sum((Number(cplx(v.re)), Number(cplx(0, v.im)))))
            out, mine = f"({inner})", _PREC_ATOM
        return f"({out})" if mine < prec else out
    if isinstance(expr, Var):
        return f"z{expr.k}"
    if isinstance(expr, Partial):
        return f"d{expr.k}"
    if isinstance(expr, Sum):
        # the first term may carry a leading '-'; later ones fold it into the operator
        out = _print(expr.terms[0], _PREC_SUM)
        for t in expr.terms[1:]:
            if isinstance(t, Neg):
                out += " - " + _print(t.operand, _PREC_PROD)
            else:
                out += " + " + _print(t, _PREC_PROD)
        return f"({out})" if prec > _PREC_SUM else out
    if isinstance(expr, Neg):
        out = "-" + _print(expr.operand, _PREC_PROD)
        return f"({out})" if prec > _PREC_SUM else out
    if isinstance(expr, Product):
        out = "*".join(_print(f, _PREC_POW) for f in expr.factors)
        return f"({out})" if prec > _PREC_PROD else out
    if isinstance(expr, Power):
        return f"{_print(expr.base, _PREC_ATOM)}^{expr.exponent}"
    raise TypeError(f"not an expression node: {expr!r}")


# -- normalization to a first-order operator -----------------------------------

# A Weyl element maps a derivative multi-index to its polynomial coefficient,
# in normal order (all derivatives to the right of all coefficients).
_Weyl = dict[MultiIndex, Polynomial]


def _weyl_const(dim: int, value: ComplexRational) -> _Weyl:
    if value.is_zero():
        return {}
    return {zero_index(dim): Polynomial.constant(dim, value)}


def _weyl_add(a: _Weyl, b: _Weyl, dim: int) -> _Weyl:
    out = dict(a)
    for d, p in b.items():
        s = out.get(d, Polynomial.zero(dim)) + p
        if s.is_zero():
            out.pop(d, None)
        else:
            out[d] = s
    return out


def _weyl_scale(a: _Weyl, c) -> _Weyl:
    return {d: p * c for d, p in a.items() if not (p * c).is_zero()}


def _multi_binom(d: MultiIndex, g: MultiIndex) -> int:
    out = 1
    for a, b in zip(d, g):
        out *= comb(a, b)
    return out


def _sub_indices(d: MultiIndex):
    """All gamma with 0 <= gamma <= d componentwise."""
    if not d:
        yield ()
        return
    for head in range(d[0] + 1):
        for rest in _sub_indices(d[1:]):
            yield (head,) + rest


def _weyl_mul(a: _Weyl, b: _Weyl, dim: int) -> _Weyl:
    # Pa d^da * Pb d^db = Pa * sum_{g <= da} binom(da, g) (d^g Pb) d^(da - g + db)
    out: _Weyl = {}
    for da, pa in a.items():
        for db, pb in b.items():
            for g in _sub_indices(da):
                q = pb
                for k, gk in enumerate(g):
                    for _ in range(gk):
                        q = q.diff(k + 1)
                    if q.is_zero():
                        break
                if q.is_zero():
                    continue
                coeff = _multi_binom(da, g)
                deriv = tuple(x - y + z for x, y, z in zip(da, g, db))
                term = pa * q * coeff
                s = out.get(deriv, Polynomial.zero(dim)) + term
                if s.is_zero():
                    out.pop(deriv, None)
                else:
                    out[deriv] = s
    return out


def _max_order(w: _Weyl) -> int:
    return max((sum(d) for d in w), default=0)


def _check_first_order(w: _Weyl):
    order = _max_order(w)
    if order > 1:
        raise OrderError(
            f"expression normalizes to derivative order {order}; only first-order operators are supported"
        )


def _evaluate(expr: Expr, dim: int) -> _Weyl:
    if isinstance(expr, Number):
        return _weyl_const(dim, expr.value)
    if isinstance(expr, Var):
        return {zero_index(dim): Polynomial.variable(dim, expr.k)}
    if isinstance(expr, Partial):
        e = tuple(1 if j == expr.k - 1 else 0 for j in range(dim))
        return {e: Polynomial.constant(dim, 1)}
    if isinstance(expr, Neg):
        return _weyl_scale(_evaluate(expr.operand, dim), -1)
    if isinstance(expr, Sum):
        out: _Weyl = {}
        for t in expr.terms:
            out = _weyl_add(out, _evaluate(t, dim), dim)
        return out
    if isinstance(expr, Product):
        out = _weyl_const(dim, cplx(1))
        for f in expr.factors:
            out = _weyl_mul(out, _evaluate(f, dim), dim)
        _check_first_order(out)
        return out
    if isinstance(expr, Power):
        base = _evaluate(expr.base, dim)
        out = _weyl_const(dim, cplx(1))
        for _ in range(expr.exponent):
            out = _weyl_mul(out, base, dim)
        _check_first_order(out)
        return out
    raise TypeError(f"not an expression node: {expr!r}")


def to_operator(expr: Expr, dim: int) -> FirstOrderOperator:
    """Normalize an expression to a FirstOrderOperator (derivatives right)."""
    w = _evaluate(expr, dim)
    _check_first_order(w)
    zero = zero_index(dim)
    f0 = w.get(zero, Polynomial.zero(dim))
    coeffs = []
    for k in range(dim):
        e = tuple(1 if j == k else 0 for j in range(dim))
        coeffs.append(w.get(e, Polynomial.zero(dim)))
    return FirstOrderOperator(dim, f0, tuple(coeffs))


def parse_to_operator(text: str, dim: int) -> FirstOrderOperator:
    return to_operator(parse_operator(text, dim), dim)


def parse_to_polynomial(text: str, dim: int) -> Polynomial:
    """Parse an expression that must contain no derivative symbols."""
    op = parse_to_operator(text, dim)
    if not op.has_zero_derivative_part():
        raise OrderError("expected a pure polynomial expression without d<k> symbols")
    return op.f0
