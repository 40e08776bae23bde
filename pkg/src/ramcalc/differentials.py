"""Differential forms g du + h dw on K_{a,b}, in ordinary or logarithmic basis.

The log basis replaces dw by dlog w = dw / w.  Termwise differentiation is
the unique k-derivation on the monomial subring with d(u) = du, d(w) = dw;
integer exponents are reduced mod p when they become coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from .finite_field import FieldError
from .field import FieldDesc, FieldElem, embed, format_elem, homogeneous_part

if TYPE_CHECKING:
    from .base_change import ExtensionDesc

ORDINARY = "ordinary"
LOG = "log"


@dataclass(frozen=True)
class DifferentialForm:
    field: FieldDesc
    basis: str
    du: FieldElem
    d2: FieldElem  # coefficient of dw (ordinary) or dlog w (log)

    def __post_init__(self):
        if self.basis not in (ORDINARY, LOG):
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.du.field != self.field or self.d2.field != self.field:
            raise FieldError("coefficients must live in the form's field")

    @classmethod
    def zero(cls, field: FieldDesc, basis: str = ORDINARY) -> "DifferentialForm":
        return cls(field, basis, field.zero(), field.zero())

    def is_zero(self) -> bool:
        return self.du.is_zero() and self.d2.is_zero()

    def _same(self, other: "DifferentialForm"):
        if other.field != self.field or other.basis != self.basis:
            raise FieldError("forms over different fields or bases")

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        self._same(other)
        return DifferentialForm(self.field, self.basis, self.du + other.du, self.d2 + other.d2)

    def __sub__(self, other: "DifferentialForm") -> "DifferentialForm":
        self._same(other)
        return DifferentialForm(self.field, self.basis, self.du - other.du, self.d2 - other.d2)

    def __neg__(self) -> "DifferentialForm":
        return DifferentialForm(self.field, self.basis, -self.du, -self.d2)

    def __rmul__(self, g: FieldElem) -> "DifferentialForm":
        return DifferentialForm(self.field, self.basis, g * self.du, g * self.d2)

    def support(self) -> str:
        """Which basis directions carry nonzero coefficients."""
        second = "dw" if self.basis == ORDINARY else "dlogw"
        parts = [name for name, c in (("du", self.du), (second, self.d2)) if not c.is_zero()]
        return "+".join(parts) if parts else "0"

    def __str__(self):
        second = "dw" if self.basis == ORDINARY else "dlog w"
        parts = []
        for name, c in (("du", self.du), (second, self.d2)):
            if not c.is_zero():
                parts.append(f"({format_elem(c)}) {name}")
        return " + ".join(parts) if parts else "0"

    def to_json(self, level: Optional[int] = None) -> dict:
        return {
            "basis": self.basis,
            "du": format_elem(self.du),
            "d2": format_elem(self.d2),
            "level": level,
        }


@dataclass(frozen=True)
class GradedForm:
    """The part of a form of pole order exactly ``level`` (the graded piece)."""

    form: DifferentialForm
    level: int

    def is_zero(self) -> bool:
        return self.form.is_zero()

    def to_json(self) -> dict:
        return self.form.to_json(self.level)

    def __str__(self):
        return f"[level {self.level}] {self.form}"


def d(f: FieldElem, basis: str = ORDINARY) -> DifferentialForm:
    field = f.field
    fq, p = field.fq, field.p
    du, d2 = {}, {}
    for (al, be), c in f._terms.items():
        if al % p:
            du[(al - 1, be)] = fq.add(du.get((al - 1, be), 0), fq.mul(fq.from_int(al), c))
        if be % p:
            key = (al, be - 1) if basis == ORDINARY else (al, be)
            d2[key] = fq.add(d2.get(key, 0), fq.mul(fq.from_int(be), c))
    return DifferentialForm(field, basis, FieldElem(field, du), FieldElem(field, d2))


def to_log(omega: DifferentialForm) -> DifferentialForm:
    if omega.basis == LOG:
        return omega
    return DifferentialForm(omega.field, LOG, omega.du, omega.d2 * omega.field.w())


def to_ordinary(omega: DifferentialForm) -> DifferentialForm:
    if omega.basis == ORDINARY:
        return omega
    return DifferentialForm(omega.field, ORDINARY, omega.du, omega.d2 * (omega.field.w() ** -1))


def omega_valuation(omega: DifferentialForm):
    """min beta over the terms of both coefficients; ``math.inf`` for zero."""
    return min(omega.du.valuation(), omega.d2.valuation())


def omega_leading(omega: DifferentialForm, level: int) -> GradedForm:
    part = DifferentialForm(
        omega.field,
        omega.basis,
        homogeneous_part(omega.du, -level),
        homogeneous_part(omega.d2, -level),
    )
    return GradedForm(part, level)


def _require_ordinary(omega: DifferentialForm):
    if omega.basis != ORDINARY:
        raise FieldError("base-change maps act on forms in the ordinary basis")


def theta_map(omega: DifferentialForm, ext: "ExtensionDesc") -> DifferentialForm:
    """Pull a form on K back along K <= K'.

    du_K = d(u'^(p^da)) and dw_K = d(w'^(p^db)), so each basis vector dies
    as soon as its coordinate acquires a p-th root.
    """
    _require_ordinary(omega)
    if omega.field != ext.source:
        raise FieldError(f"form lives on {omega.field!r}, extension starts at {ext.source!r}")
    tgt = ext.target
    du = embed(omega.du, tgt) if ext.da == 0 else tgt.zero()
    dw = embed(omega.d2, tgt) if ext.db == 0 else tgt.zero()
    return DifferentialForm(tgt, ORDINARY, du, dw)


@dataclass(frozen=True)
class SigmaImage:
    form: DifferentialForm
    identically_zero: bool  # whether sigma kills every form on K'


def sigma_map(omega: DifferentialForm, ext: "ExtensionDesc") -> SigmaImage:
    """Push a form on K' to K along iota: K' -> K, z -> z^(p^n).

    The induced map on differentials is g dz -> iota(g) d_K(iota(z)), with
    the derivative taken in K.  iota(u') = u^(p^(n-da)) and
    iota(w') = w^(p^(n-db)), so du' survives exactly when n = da and dw'
    exactly when n = db.
    """
    from .base_change import iota  # local: base_change imports this module

    _require_ordinary(omega)
    if omega.field != ext.target:
        raise FieldError(f"form lives on {omega.field!r}, extension ends at {ext.target!r}")
    src = ext.source
    keep_du = ext.n == ext.da
    keep_dw = ext.n == ext.db
    du = iota(omega.du, ext) if keep_du else src.zero()
    dw = iota(omega.d2, ext) if keep_dw else src.zero()
    return SigmaImage(DifferentialForm(src, ORDINARY, du, dw), not (keep_du or keep_dw))


def graded_equal(x: GradedForm, y: GradedForm) -> bool:
    return x.level == y.level and x.form == y.form


def pole_order(omega: DifferentialForm) -> int:
    v = omega_valuation(omega)
    return 0 if v == math.inf or v >= 0 else -v
