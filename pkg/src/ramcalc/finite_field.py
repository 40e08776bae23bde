"""Exact arithmetic in F_q, q = p^m, p an odd prime.

Elements are encoded as integers ``sum(c_i * p**i)`` over the polynomial
basis ``1, t, ..., t^(m-1)`` modulo a fixed monic irreducible ``modulus``.
Multiplication goes through discrete-log tables built on first use.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache


class FieldError(ValueError):
    """Invalid field parameters or mismatched field operands."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _polymulmod(a, b, modulus, p):
    """Multiply little-endian coefficient lists modulo a monic modulus."""
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for j in range(m + 1):
                prod[k - m + j] = (prod[k - m + j] - c * modulus[j]) % p
    prod = prod[:m] + [0] * (m - len(prod))
    return prod[:m]


def _has_factor_of_degree(poly, d, p):
    """Brute force: does a monic poly of degree d divide ``poly`` over F_p."""
    for tail in itertools.product(range(p), repeat=d):
        div = list(tail) + [1]
        rem = list(poly)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c:
                for j in range(d + 1):
                    rem[k - d + j] = (rem[k - d + j] - c * div[j]) % p
        if not any(rem[:d]):
            return True
    return False


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic little-endian polynomial over F_p (small degrees)."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    return not any(_has_factor_of_degree(poly, d, p) for d in range(1, deg // 2 + 1))


def _monic_candidates(p, m):
    # ordered by the integer code sum(c_i p^i) of the non-leading coefficients
    for code in range(p**m):
        coeffs = []
        for _ in range(m):
            coeffs.append(code % p)
            code //= p
        yield tuple(coeffs) + (1,)


@dataclass(frozen=True)
class FqSpec:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self):
        return f"F_{self.q}"

    # -- encoding --------------------------------------------------------
    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise FieldError(f"{len(coeffs)} coefficients for F_{self.q}")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def decode(self, code: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return out

    def from_int(self, n: int) -> int:
        """Code of the image of the integer n (prime subfield)."""
        return n % self.p

    # -- tables ----------------------------------------------------------
    @cached_property
    def _tables(self):
        q, p = self.q, self.p
        if self.m == 1:
            g = next(x for x in range(1, p) if _order_mod(x, p) == p - 1)
            exp = [pow(g, k, p) for k in range(p - 1)]
        else:
            exp = None
            for cand in range(p, q):
                poly = self.decode(cand)
                seq = [1]
                cur = [1] + [0] * (self.m - 1)
                ok = True
                for _ in range(q - 2):
                    cur = _polymulmod(cur, poly, self.modulus, p)
                    c = self.encode(cur)
                    if c == 1:
                        ok = False
                        break
                    seq.append(c)
                if ok:
                    exp = seq
                    break
            if exp is None:
                raise FieldError("no primitive element; modulus not irreducible?")
        log = [0] * q
        for k, c in enumerate(exp):
            log[c] = k
        return exp, log

    @property
    def generator(self) -> "FqElem":
        return FqElem(self, self._tables[0][1 % (self.q - 1)])

    # -- arithmetic on codes --------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p, r, k = self.p, 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * k
            a //= p
            b //= p
            k *= p
        return r

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        p, r, k = self.p, 0, 1
        while a:
            r += (-(a % p) % p) * k
            a //= p
            k *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in " + repr(self))
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._tables
        return exp[-log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if n == 0 else 0
        if self.m == 1:
            return pow(a, n % (self.p - 1), self.p)
        exp, log = self._tables
        return exp[(log[a] * n) % (self.q - 1)]

    def frob(self, a: int, n: int = 1) -> int:
        """a^(p^n); n may be negative (p-th roots)."""
        return self.pow(a, pow(self.p, n % self.m, self.q - 1))

    def root(self, a: int, n: int = 1) -> int:
        """The unique b with b^(p^n) = a."""
        return self.frob(a, -n)

    def trace(self, a: int) -> int:
        acc, cur = 0, a
        for _ in range(self.m):
            acc = self.add(acc, cur)
            cur = self.frob(cur)
        return acc  # lies in F_p, so code == value

    def elements(self):
        return range(self.q)

    def elem(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            if value.spec != self:
                raise FieldError(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            return FqElem(self, self.from_int(value))
        return FqElem(self, self.encode(value))

    def format_code(self, code: int) -> str:
        if self.m == 1:
            return str(code)
        return json.dumps(self.decode(code), separators=(",", ":"))


def _order_mod(x, p):
    k, cur = 1, x % p
    while cur != 1:
        cur = cur * x % p
        k += 1
    return k


@lru_cache(maxsize=None)
def fq_make(p: int, m: int = 1) -> FqSpec:
    """F_{p^m} with the smallest monic irreducible modulus of degree m.

    Candidates are ordered by the integer code of their lower coefficients,
    so the choice (and everything serialized downstream) is reproducible.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if p == 2:
        raise FieldError("characteristic 2 is not supported")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    for poly in _monic_candidates(p, m):
        if is_irreducible(poly, p):
            return FqSpec(p, m, poly)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FqElem:
    spec: FqSpec
    code: int

    @property
    def coeffs(self) -> list[int]:
        return self.spec.decode(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.spec != self.spec:
                raise FieldError(f"mismatched fields {self.spec!r} and {other.spec!r}")
            return other.code
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.spec, self.spec.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.spec, self.spec.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.spec, self.spec.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.spec, self.spec.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.spec, self.spec.div(self.code, o))

    def __neg__(self):
        return FqElem(self.spec, self.spec.neg(self.code))

    def __pow__(self, n: int):
        return FqElem(self.spec, self.spec.pow(self.code, n))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.spec == other.spec and self.code == other.code
        if isinstance(other, int):
            return self.code == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.code))

    def __repr__(self):
        return self.spec.format_code(self.code)

    def to_json(self) -> list[int]:
        return self.coeffs


def fq_arith(op: str, x: FqElem, y: FqElem) -> FqElem:
    if x.spec != y.spec:
        raise FieldError(f"mismatched fields {x.spec!r} and {y.spec!r}")
    ops = {"add": x.spec.add, "sub": x.spec.sub, "mul": x.spec.mul, "div": x.spec.div}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return FqElem(x.spec, ops[op](x.code, y.code))


def fq_pth_root(x: FqElem) -> FqElem:
    return FqElem(x.spec, x.spec.root(x.code))


def fq_absolute_trace(x: FqElem) -> int:
    return x.spec.trace(x.code)


def fq_parse(spec: FqSpec, text: str) -> FqElem:
    """Integer literal (reduced mod p) or a coefficient list like ``[1,2]``."""
    text = text.strip()
    if text.startswith("["):
        return spec.elem(json.loads(text))
    return spec.elem(int(text))


@lru_cache(maxsize=None)
def embedding(small: FqSpec, big: FqSpec) -> tuple[int, ...]:
    """Codes in ``big`` of the elements of ``small``, indexed by small code.

    The generator t of ``small`` is sent to the least (by code) root of its
    modulus in ``big``.
    """
    if small.p != big.p or big.m % small.m:
        raise FieldError(f"{small!r} does not embed in {big!r}")
    if small.m == 1:
        return tuple(range(small.q))
    for r in big.elements():
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            break
    else:  # pragma: no cover
        raise FieldError("modulus has no root in the target field")
    table = []
    for code in small.elements():
        acc = 0
        for c in reversed(small.decode(code)):
            acc = big.add(big.mul(acc, r), c)
        table.append(acc)
    return tuple(table)
