"""Swan conductor, total dimension, characteristic form and related reports.

For a reduced f with pole order m >= 1:
  sw = m
  dt = pole order of df   (m + 1 when p does not divide m, otherwise m)
  char form = the part of -df at level dt.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .artin_schreier import ASCharacter, Classification, classify
from .differentials import LOG, ORDINARY, GradedForm, d, omega_leading, omega_valuation


class GuardError(ArithmeticError):
    """sw <= dt <= sw + 1 failed; the input is outside the model or there is a bug."""


class NotRamifiedError(ValueError):
    pass


def _reduced(c: ASCharacter) -> ASCharacter:
    return c.reduce()


def swan(c: ASCharacter) -> int:
    return _reduced(c).f.pole_order()


def total_dim(c: ASCharacter) -> int:
    c = _reduced(c)
    if classify(c) is not Classification.RAMIFIED:
        return 0
    sw = c.f.pole_order()
    v = omega_valuation(d(c.f, ORDINARY))
    dt = -v
    if not sw <= dt <= sw + 1:
        raise GuardError(f"dt = {dt} outside [{sw}, {sw + 1}] for {c}")
    return dt


def _require_ramified(c: ASCharacter) -> ASCharacter:
    c = _reduced(c)
    if classify(c) is not Classification.RAMIFIED:
        raise NotRamifiedError(f"{c} is not ramified")
    return c


def char_form(c: ASCharacter) -> GradedForm:
    c = _require_ramified(c)
    return omega_leading(-d(c.f, ORDINARY), total_dim(c))


def refined_swan(c: ASCharacter) -> GradedForm:
    """Leading part of the logarithmic differential at level sw (exploratory)."""
    c = _require_ramified(c)
    return omega_leading(d(c.f, LOG), swan(c))


def _direction(g: GradedForm) -> str:
    return g.form.support()


@dataclass(frozen=True)
class CCReport:
    zero_section_coeff: int
    divisor_coeff: int
    direction: str
    form: GradedForm

    def to_json(self) -> dict:
        return {"divisor_coeff": self.divisor_coeff, "direction": self.direction}


def cc_coefficients(c: ASCharacter) -> CCReport:
    cf = char_form(c)
    return CCReport(-1, -cf.level, _direction(cf), cf)


@dataclass(frozen=True)
class ConductorReport:
    character: ASCharacter
    sw: int
    dt: int
    classification: Classification
    char_form: Optional[GradedForm]
    rsw: Optional[GradedForm]
    cc: Optional[CCReport]

    def to_json(self) -> dict:
        return {
            "swan": self.sw,
            "dimtot": self.dt,
            "classification": str(self.classification),
            "char_form": self.char_form.to_json() if self.char_form else None,
            "rsw": self.rsw.to_json() if self.rsw else None,
            "cc": self.cc.to_json() if self.cc else None,
        }


def conductor_report(c: ASCharacter) -> ConductorReport:
    c = _reduced(c)
    cls = classify(c)
    if cls is not Classification.RAMIFIED:
        return ConductorReport(c, 0, 0, cls, None, None, None)
    return ConductorReport(
        c, swan(c), total_dim(c), cls, char_form(c), refined_swan(c), cc_coefficients(c)
    )
