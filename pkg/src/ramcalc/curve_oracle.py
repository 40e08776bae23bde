"""Brute-force conductor estimates by restriction to curves.

A curve is u = c(s), w = s^mu with c a polynomial over a finite extension of
the constant field.  Restricting f gives a Laurent series in s, and on a
curve the residue field is perfect, so the classical one-variable theory
applies: sw_1d is the pole order after Artin-Schreier reduction and
dimtot_1d = sw_1d + 1.  Dividing by mu and maximizing over curves bounds
the two-dimensional conductors from below.

Only nonpositive powers of s are ever computed; positive powers are
g^p - g in the complete field k((s)) and do not affect the class.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .artin_schreier import ASCharacter
from .field import FieldElem
from .finite_field import FqSpec, embedding, fq_make

DEFAULT_TRUNCATION = 1 << 16


class CurveError(ValueError):
    pass


class TruncationError(CurveError):
    pass


@dataclass(frozen=True)
class CurveSpec:
    mu: int
    series: tuple[int, ...]  # codes in ``fq`` of c_0, c_1, ...
    fq: FqSpec
    truncation: int = DEFAULT_TRUNCATION

    def __post_init__(self):
        if self.mu < 1:
            raise CurveError(f"mu must be >= 1, got {self.mu}")

    def describe(self) -> str:
        parts = []
        for j, c in enumerate(self.series):
            if not c:
                continue
            coeff = self.fq.format_code(c)
            if j == 0:
                parts.append(coeff)
            else:
                mono = "s" if j == 1 else f"s^{j}"
                parts.append(mono if c == 1 else f"{coeff}*{mono}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class OneDimChar:
    """A Laurent polynomial in s (only nonpositive exponents kept)."""

    fq: FqSpec
    terms: dict  # exponent -> nonzero code

    def pole_order(self) -> int:
        return max([-k for k in self.terms if k < 0], default=0)


# -- truncated power series over F_q -------------------------------------------


def _mul(a: list, b: list, n: int, fq: FqSpec) -> list:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                if y:
                    out[i + j] = fq.add(out[i + j], fq.mul(x, y))
    return out


def _inverse(a: list, n: int, fq: FqSpec) -> list:
    inv0 = fq.inv(a[0])
    out = [inv0] + [0] * n
    for k in range(1, n + 1):
        acc = 0
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j] and out[k - j]:
                acc = fq.add(acc, fq.mul(a[j], out[k - j]))
        out[k] = fq.neg(fq.mul(acc, inv0))
    return out


def _power(a: list, e: int, n: int, fq: FqSpec) -> list:
    """a^e truncated at degree n; a[0] != 0 when e < 0."""
    if e < 0:
        a, e = _inverse(a, n, fq), -e
    result = [1] + [0] * n
    base = list(a[: n + 1]) + [0] * max(0, n + 1 - len(a))
    while e:
        if e & 1:
            result = _mul(result, base, n, fq)
        e >>= 1
        if e:
            base = _mul(base, base, n, fq)
    return result


def restrict_to_curve(f: FieldElem, curve: CurveSpec) -> OneDimChar:
    """Substitute u = c(s), w = s^mu and keep the nonpositive part."""
    src = f.field.fq
    fq = curve.fq
    table = embedding(src, fq)
    series = list(curve.series)
    while series and not series[-1]:
        series.pop()
    if not series:
        shift, unit = None, []
    else:
        shift = next(j for j, c in enumerate(series) if c)
        unit = series[shift:]
    out: dict = {}
    for (al, be), code in f._terms.items():
        if al == 0:
            lead, powed = 0, [1]
        elif shift is None:
            if al < 0:
                raise CurveError("u = 0 on this curve, but f has negative powers of u")
            continue
        else:
            if al < 0 and shift > 0:
                raise CurveError("curve meets u = 0 where f has a pole along it")
            lead = shift * al
            need = -(lead + curve.mu * be)
            if need < 0:
                continue
            if need > curve.truncation:
                raise TruncationError(f"needs precision {need} > {curve.truncation}")
            powed = _power(unit, al, need, fq)
        base_exp = lead + curve.mu * be
        c = table[code]
        for j, x in enumerate(powed):
            k = base_exp + j
            if k > 0:
                break
            if x:
                out[k] = fq.add(out.get(k, 0), fq.mul(c, x))
    return OneDimChar(fq, {k: v for k, v in out.items() if v})


def reduce_1d(g: OneDimChar) -> OneDimChar:
    """Replace gamma s^(-p j) by gamma^(1/p) s^(-j), deepest pole first."""
    fq = g.fq
    p = fq.p
    terms = dict(g.terms)
    while True:
        movable = sorted(k for k, c in terms.items() if k < 0 and k % p == 0 and c)
        if not movable:
            break
        k = movable[0]
        c = terms.pop(k)
        terms[k // p] = fq.add(terms.get(k // p, 0), fq.root(c))
    return OneDimChar(fq, {k: v for k, v in terms.items() if v})


def swan_1d(g: OneDimChar) -> int:
    return reduce_1d(g).pole_order()


def dimtot_1d(g: OneDimChar) -> int:
    sw = swan_1d(g)
    return sw + 1 if sw else 0


# -- search ----------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    curve: CurveSpec
    swan_1d: int
    dimtot_1d: int
    ratio: Fraction

    def to_json(self) -> dict:
        return {
            "mu": self.curve.mu,
            "curve": self.curve.describe(),
            "swan_1d": self.swan_1d,
            "dimtot_1d": self.dimtot_1d,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }


@dataclass(frozen=True)
class OracleResult:
    sw_est: Fraction
    dt_est: Fraction
    sw_witness: Optional[Witness]
    dt_witness: Optional[Witness]
    curves: int

    @property
    def sw_ceiling(self) -> int:
        return math.ceil(self.sw_est)

    @property
    def dt_ceiling(self) -> int:
        return math.ceil(self.dt_est)

    def to_json(self) -> dict:
        def frac(x):
            return f"{x.numerator}/{x.denominator}"

        return {
            "sw_est": frac(self.sw_est),
            "sw_ceiling": self.sw_ceiling,
            "dt_est": frac(self.dt_est),
            "dt_ceiling": self.dt_ceiling,
            "curves": self.curves,
            "witnesses": {
                "swan": self.sw_witness.to_json() if self.sw_witness else None,
                "dimtot": self.dt_witness.to_json() if self.dt_witness else None,
            },
        }


def candidate_curves(base: FqSpec, mu_max: int, deg_max: int, ext_max: int = 2) -> Iterator[CurveSpec]:
    """Constants, monomials g*s^j and binomials g0 + g1*s^j, over F_q and its extensions.

    Over a proper extension the s^j coefficient is fixed to 1 to keep the
    search small; the constant term still ranges over the whole field.
    """
    for k in range(1, ext_max + 1):
        fq = fq_make(base.p, base.m * k)
        nonzero = range(1, fq.q)
        tops = nonzero if k == 1 else (1,)
        for mu in range(1, mu_max + 1):
            for c0 in fq.elements():
                yield CurveSpec(mu, (c0,), fq)
            for j in range(1, deg_max + 1):
                for c1 in tops:
                    yield CurveSpec(mu, (0,) * j + (c1,), fq)
                    for c0 in nonzero:
                        yield CurveSpec(mu, (c0,) + (0,) * (j - 1) + (c1,), fq)


def random_curves(base: FqSpec, mu_max: int, deg_max: int, trials: int, seed: int) -> Iterator[CurveSpec]:
    rng = random.Random(seed)
    for _ in range(trials):
        mu = rng.randint(1, mu_max)
        series = tuple(rng.randrange(base.q) for _ in range(deg_max + 1))
        yield CurveSpec(mu, series, base)


def _evaluate(f: FieldElem, curves) -> Iterator[tuple[CurveSpec, int, int]]:
    for curve in curves:
        try:
            g = restrict_to_curve(f, curve)
        except CurveError:
            continue
        sw = swan_1d(g)
        yield curve, sw, sw + 1 if sw else 0


def oracle_conductor(
    f: FieldElem,
    mu_max: int = 3,
    deg_max: int = 2,
    trials: int = 0,
    seed: int = 0,
    ext_max: int = 2,
) -> OracleResult:
    """Lower bounds for sw and dt: the best ratios over all searched curves.

    Ties keep the first curve in search order, so results are deterministic.
    """
    if isinstance(f, ASCharacter):
        f = f.f
    base = f.field.fq
    curves = itertools.chain(
        candidate_curves(base, mu_max, deg_max, ext_max),
        random_curves(base, mu_max, deg_max, trials, seed),
    )
    sw_best, dt_best = Fraction(0), Fraction(0)
    sw_wit = dt_wit = None
    count = 0
    for curve, sw, dt in _evaluate(f, curves):
        count += 1
        sw_ratio = Fraction(sw, curve.mu)
        dt_ratio = Fraction(dt, curve.mu)
        if sw_ratio > sw_best:
            sw_best, sw_wit = sw_ratio, Witness(curve, sw, dt, sw_ratio)
        if dt_ratio > dt_best:
            dt_best, dt_wit = dt_ratio, Witness(curve, sw, dt, dt_ratio)
    return OracleResult(sw_best, dt_best, sw_wit, dt_wit, count)


def curve_ratios(f: FieldElem, mu_max: int, deg_max: int, ext_max: int = 2):
    """Every searched curve with its (swan_1d/mu, dimtot_1d/mu)."""
    for curve, sw, dt in _evaluate(f, candidate_curves(f.field.fq, mu_max, deg_max, ext_max)):
        yield curve, Fraction(sw, curve.mu), Fraction(dt, curve.mu)
