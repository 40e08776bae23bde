"""Two-dimensional local fields K_{a,b} = F_q(x^(1/p^a))((y^(1/p^b))).

Elements are finite F_q-linear combinations of monomials u^alpha * w^beta in
the internal coordinates u = x^(1/p^a), w = y^(1/p^b), both exponents
integers.  The valuation is normalized by v(w) = 1.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .finite_field import FieldError, FqElem, FqSpec, fq_make, fq_parse


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class FieldDesc:
    fq: FqSpec
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise FieldError(f"root depths must be >= 0, got a={self.a}, b={self.b}")

    @property
    def p(self) -> int:
        return self.fq.p

    def __repr__(self):
        return f"K_{{{self.a},{self.b}}}/{self.fq!r}"

    def to_json(self) -> dict:
        return {"p": self.fq.p, "m": self.fq.m, "a": self.a, "b": self.b}

    def zero(self) -> "FieldElem":
        return FieldElem(self, {})

    def one(self) -> "FieldElem":
        return FieldElem(self, {(0, 0): 1})

    def monomial(self, coeff, alpha: int, beta: int) -> "FieldElem":
        c = self.fq.elem(coeff).code
        return FieldElem(self, {(alpha, beta): c} if c else {})

    def u(self) -> "FieldElem":
        return self.monomial(1, 1, 0)

    def w(self) -> "FieldElem":
        return self.monomial(1, 0, 1)


def make_field(p: int, a: int = 0, b: int = 0, m: int = 1) -> FieldDesc:
    return FieldDesc(fq_make(p, m), a, b)


class Monomial(NamedTuple):
    coeff: FqElem
    alpha: int
    beta: int


class FieldElem:
    """Immutable sparse Laurent polynomial in (u, w) over F_q.

    ``_terms`` maps (alpha, beta) to a nonzero coefficient code.
    """

    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, field: FieldDesc, terms: dict):
        self.field = field
        self._terms = {k: c for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def from_terms(cls, field: FieldDesc, items: Iterable[tuple[int, int, int]]) -> "FieldElem":
        """Build from (code, alpha, beta) triples, combining like terms."""
        fq = field.fq
        acc: dict = {}
        for code, alpha, beta in items:
            key = (alpha, beta)
            acc[key] = fq.add(acc.get(key, 0), code)
        return cls(field, acc)

    @property
    def terms(self) -> tuple[Monomial, ...]:
        fq = self.field.fq
        return tuple(
            Monomial(FqElem(fq, c), al, be)
            for (al, be), c in sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        )

    def items(self):
        """(alpha, beta, code) triples in canonical (beta, alpha) order."""
        for (al, be), c in sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            yield al, be, c

    def coeff(self, alpha: int, beta: int) -> FqElem:
        return FqElem(self.field.fq, self._terms.get((alpha, beta), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- ring structure --------------------------------------------------
    def _check(self, other: "FieldElem"):
        if not isinstance(other, FieldElem):
            return False
        if other.field != self.field:
            raise FieldError(f"mismatched fields {self.field!r} and {other.field!r}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        fq = self.field.fq
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = fq.add(acc.get(k, 0), c)
        return FieldElem(self.field, acc)

    def __neg__(self):
        fq = self.field.fq
        return FieldElem(self.field, {k: fq.neg(c) for k, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, FqElem)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        fq = self.field.fq
        acc: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                acc[k] = fq.add(acc.get(k, 0), fq.mul(c1, c2))
        return FieldElem(self.field, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, FqElem)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "FieldElem":
        fq = self.field.fq
        code = fq.elem(c).code
        return FieldElem(self.field, {k: fq.mul(code, v) for k, v in self._terms.items()})

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted in the monomial subring")
            ((al, be), c), = self._terms.items()
            fq = self.field.fq
            return FieldElem(self.field, {(al * n, be * n): fq.pow(c, n)})
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"FieldElem({format_elem(self)!r}, {self.field!r})"

    def __str__(self):
        return format_elem(self, surface=True)

    # -- valuation -------------------------------------------------------
    def valuation(self):
        """min beta over the terms (v(w) = 1); ``math.inf`` for zero."""
        if not self._terms:
            return math.inf
        return min(be for _, be in self._terms)

    def pole_order(self) -> int:
        v = self.valuation()
        return 0 if v == math.inf or v >= 0 else -v

    def levels(self) -> list[int]:
        """Distinct beta values, ascending (deepest pole first)."""
        return sorted({be for _, be in self._terms})


def valuation(f: FieldElem):
    return f.valuation()


def base_valuation(f: FieldElem):
    """Valuation in the normalization of K_{0,0}, i.e. v(y) = 1."""
    v = f.valuation()
    return v if v == math.inf else Fraction(v, f.field.p ** f.field.b)


def elem_arith(op: str, f: FieldElem, g: FieldElem) -> FieldElem:
    if f.field != g.field:
        raise FieldError(f"mismatched fields {f.field!r} and {g.field!r}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def frobenius_power(f: FieldElem, n: int) -> FieldElem:
    """f^(p^n), computed termwise (Frobenius is additive)."""
    if n == 0:
        return f
    fq = f.field.fq
    k = f.field.p**n
    return FieldElem(f.field, {(al * k, be * k): fq.frob(c, n) for (al, be), c in f._terms.items()})


def pth_root(f: FieldElem) -> Optional[FieldElem]:
    """The g in the same field with g^p = f, or None if it does not exist."""
    p = f.field.p
    fq = f.field.fq
    out = {}
    for (al, be), c in f._terms.items():
        if al % p or be % p:
            return None
        out[(al // p, be // p)] = fq.root(c)
    return FieldElem(f.field, out)


def embed(f: FieldElem, target: FieldDesc) -> FieldElem:
    """Transport f along K_{a,b} <= K_{a',b'}; exponents rescale by p^(a'-a), p^(b'-b)."""
    src = f.field
    if target.fq != src.fq or target.a < src.a or target.b < src.b:
        raise FieldError(f"{target!r} is not an extension of {src!r}")
    ka = src.p ** (target.a - src.a)
    kb = src.p ** (target.b - src.b)
    return FieldElem(target, {(al * ka, be * kb): c for (al, be), c in f._terms.items()})


def homogeneous_part(f: FieldElem, beta: int) -> FieldElem:
    return FieldElem(f.field, {k: c for k, c in f._terms.items() if k[1] == beta})


def leading_part(f: FieldElem, level: int) -> FieldElem:
    """Terms of order exactly -level, i.e. the image in the graded piece of degree -level."""
    return homogeneous_part(f, -level)


# -- parsing and printing ----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(\[[^\]]*\])|([xyuw])|(\*\*|[*/^()+\-]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, lst, var, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif lst is not None:
            out.append(("list", lst))
        elif var is not None:
            out.append(("var", var))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, field: FieldDesc):
        self.toks = _tokenize(text)
        self.i = 0
        self.field = field
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind} in {self.text!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> FieldElem:
        fq = self.field.fq
        items = []
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        while True:
            code, al, be = self.term()
            items.append((code if sign > 0 else fq.neg(code), al, be))
            tok = self.peek()
            if tok == ("op", "+"):
                sign = 1
            elif tok == ("op", "-"):
                sign = -1
            elif tok[0] is None:
                break
            else:
                raise ParseError(f"unexpected {tok[1]!r} in {self.text!r}")
            self.take()
        return FieldElem.from_terms(self.field, items)

    def term(self):
        fq = self.field.fq
        code, al, be = 1, 0, 0
        tok = self.peek()
        if tok[0] in ("num", "list"):
            self.take()
            try:
                code = fq_parse(fq, tok[1]).code
            except ValueError as exc:
                raise ParseError(f"bad coefficient {tok[1]!r}: {exc}") from exc
        elif tok[0] == "var":
            da, db = self.factor()
            al, be = al + da, be + db
        else:
            raise ParseError(f"expected a term in {self.text!r}, got {tok[1]!r}")
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            da, db = self.factor()
            if op == "/":
                da, db = -da, -db
            al, be = al + da, be + db
        return code, al, be

    def factor(self):
        _, var = self.take("var")
        exp = Fraction(1)
        if self.peek() == ("op", "^"):
            self.take()
            exp = self.exponent()
        p = self.field.p
        if var in "uw":
            if exp.denominator != 1:
                raise ParseError(f"internal coordinate {var} takes integer exponents")
            return (int(exp), 0) if var == "u" else (0, int(exp))
        depth = self.field.a if var == "x" else self.field.b
        scaled = exp * p**depth
        if scaled.denominator != 1:
            raise ParseError(
                f"exponent {exp} on {var} needs a p-power root deeper than {depth} in {self.field!r}"
            )
        return (int(scaled), 0) if var == "x" else (0, int(scaled))

    def exponent(self) -> Fraction:
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        if self.peek() == ("op", "("):
            self.take()
            if self.peek() == ("op", "-"):
                self.take()
                neg = not neg
            num = int(self.take("num")[1])
            den = 1
            if self.peek() == ("op", "/"):
                self.take()
                den = int(self.take("num")[1])
                if not _is_p_power(den, self.field.p):
                    raise ParseError(f"denominator {den} is not a power of p={self.field.p}")
            self.take("op", ")")
            val = Fraction(num, den)
        else:
            val = Fraction(int(self.take("num")[1]))
        return -val if neg else val


def _is_p_power(n: int, p: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


def elem_parse(text: str, field: FieldDesc) -> FieldElem:
    """Parse an expression such as ``"x/y^9"`` or ``"2*x^(1/3)*y^-3 + y^-1"``."""
    return _Parser(text, field).parse()


def _fmt_exp(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def format_monomial(field: FieldDesc, code: int, alpha: int, beta: int, surface: bool = False) -> str:
    p = field.p
    if surface:
        factors = [("x", Fraction(alpha, p**field.a)), ("y", Fraction(beta, p**field.b))]
    else:
        factors = [("u", Fraction(alpha)), ("w", Fraction(beta))]
    num = []
    den = []
    for name, e in factors:
        if e > 0:
            num.append(name if e == 1 else f"{name}^{_fmt_exp(e)}")
        elif e < 0:
            den.append(name if e == -1 else f"{name}^{_fmt_exp(-e)}")
    coeff = field.fq.format_code(code)
    if code == 1 and num:
        head = "*".join(num)
    elif num:
        head = coeff + "*" + "*".join(num)
    else:
        head = coeff
    return head + "".join("/" + d for d in den)


def format_elem(f: FieldElem, surface: bool = False) -> str:
    """Canonical text; terms ordered by (beta, alpha).  ``surface`` prints x, y."""
    if not f._terms:
        return "0"
    return " + ".join(format_monomial(f.field, c, al, be, surface) for al, be, c in f.items())
