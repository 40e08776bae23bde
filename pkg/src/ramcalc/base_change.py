"""Purely inseparable extensions K_{a,b} <= K_{a',b'} and the base-change checks.

A character over K moves to K' by inclusion (``transport``) and back by
iota: z -> z^(p^n), which maps K' into K (``descend``).  The checks compare
conductors and characteristic forms on both sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any

from .artin_schreier import ASCharacter, Classification, classify
from .conductor import char_form, swan, total_dim
from .differentials import GradedForm, omega_leading, sigma_map, theta_map
from .field import FieldDesc, FieldElem, embed
from .finite_field import FieldError


class ExtensionError(FieldError):
    pass


@dataclass(frozen=True)
class ExtensionDesc:
    source: FieldDesc
    target: FieldDesc

    def __post_init__(self):
        s, t = self.source, self.target
        if s.fq != t.fq:
            raise ExtensionError(f"{t!r} and {s!r} have different constant fields")
        if t.a < s.a or t.b < s.b:
            raise ExtensionError(f"{t!r} is not an extension of {s!r}")

    @classmethod
    def over(cls, source: FieldDesc, da: int, db: int) -> "ExtensionDesc":
        if da < 0 or db < 0:
            raise ExtensionError(f"da, db must be >= 0, got {da}, {db}")
        return cls(source, FieldDesc(source.fq, source.a + da, source.b + db))

    @property
    def p(self) -> int:
        return self.source.p

    @property
    def da(self) -> int:
        return self.target.a - self.source.a

    @property
    def db(self) -> int:
        return self.target.b - self.source.b

    @property
    def degree(self) -> int:
        return self.p ** (self.da + self.db)

    @property
    def e(self) -> int:
        return self.p**self.db

    @property
    def n(self) -> int:
        return max(self.da, self.db)

    @property
    def t(self) -> int:
        return min(self.da, self.db)

    @property
    def s(self) -> int:
        return self.p ** (self.db - self.t)

    @property
    def f_dual(self) -> int:
        return self.p ** (self.n - self.db)

    @property
    def untwisted(self) -> bool:
        return self.t == 0

    def __repr__(self):
        return f"{self.source!r} <= {self.target!r}"


def ext_invariants(ext: ExtensionDesc) -> dict:
    return {
        "degree": ext.degree,
        "e": ext.e,
        "n": ext.n,
        "t": ext.t,
        "s": ext.s,
        "f_dual": ext.f_dual,
        "untwisted": ext.untwisted,
    }


def iota(g: FieldElem, ext: ExtensionDesc) -> FieldElem:
    """The ring map K' -> K, z -> z^(p^n)."""
    if g.field != ext.target:
        raise FieldError(f"{g!r} is not in {ext.target!r}")
    src = ext.source
    fq, p, n = src.fq, src.p, ext.n
    ka = p ** (n - ext.da)
    kb = p ** (n - ext.db)
    return FieldElem(src, {(al * ka, be * kb): fq.frob(c, n) for (al, be), c in g._terms.items()})


def transport(c: ASCharacter, ext: ExtensionDesc) -> ASCharacter:
    if c.field != ext.source:
        raise FieldError(f"character over {c.field!r}, extension starts at {ext.source!r}")
    return ASCharacter.of(embed(c.f, ext.target))


def descend(c: ASCharacter, ext: ExtensionDesc) -> ASCharacter:
    if c.field != ext.target:
        raise FieldError(f"character over {c.field!r}, extension ends at {ext.target!r}")
    return ASCharacter.of(iota(c.f, ext))


# -- reports ------------------------------------------------------------------

PASS = "pass"
EQUALITY = "equality"
DEGENERATE = "degenerate"
FAIL = "fail"
COMMUTES_NONZERO = "commutes-nonzero"
COMMUTES_DEGENERATELY = "commutes-degenerately"
DISCREPANCY = "discrepancy"

FAILING = frozenset({FAIL, DISCREPANCY})


@dataclass(frozen=True)
class CheckReport:
    theorem: str
    lhs: Any
    rhs: Any
    bound: Any
    slack: Any
    status: str
    extra: dict = dc_field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status in FAILING

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "bound": self.bound,
            "slack": self.slack,
            "status": self.status,
        }
        out.update(self.extra)
        return out


def _conductors(c: ASCharacter) -> dict:
    return {"swan": swan(c), "dimtot": total_dim(c)}


def _bound_report(theorem, lhs: dict, rhs: dict, factor: int, ramified: bool, extra) -> CheckReport:
    bound = {k: factor * v for k, v in rhs.items()}
    slack = {k: bound[k] - lhs[k] for k in bound}
    if any(v < 0 for v in slack.values()):
        status = FAIL
    elif not ramified:
        status = DEGENERATE
    elif any(v == 0 for v in slack.values()):
        status = EQUALITY
    else:
        status = PASS
    return CheckReport(theorem, lhs, rhs, bound, slack, status, extra)


def check_thm_right(c: ASCharacter, ext: ExtensionDesc) -> CheckReport:
    """Conductors of the transported character are at most s times the original ones."""
    c = c.reduce()
    moved = transport(c, ext)
    ramified = classify(c) is Classification.RAMIFIED
    extra = {"s": ext.s, "image": str(moved)}
    return _bound_report("right", _conductors(moved), _conductors(c), ext.s, ramified, extra)


def check_thm_left(c: ASCharacter, ext: ExtensionDesc) -> CheckReport:
    """Conductors of the descended character are at most f_dual times those over K'."""
    c = c.reduce()
    down = descend(c, ext)
    ramified = classify(c) is Classification.RAMIFIED
    extra = {"f_dual": ext.f_dual, "image": str(down)}
    return _bound_report("left", _conductors(down), _conductors(c), ext.f_dual, ramified, extra)


def check_frobenius_invariance(c: ASCharacter, n: int) -> CheckReport:
    """Transport along K <= K^(p^-n) leaves sw and dt unchanged, each in its own field's units.

    ``reference_k_units`` records the conductors divided by e = p^n for
    comparison with a convention that rescales by the ramification index.
    """
    if n < 0:
        raise ExtensionError(f"n must be >= 0, got {n}")
    c = c.reduce()
    ext = ExtensionDesc.over(c.field, n, n)
    moved = transport(c, ext)
    lhs, rhs = _conductors(moved), _conductors(c)
    slack = {k: rhs[k] - lhs[k] for k in rhs}
    if lhs != rhs:
        status = FAIL
    elif classify(c) is not Classification.RAMIFIED:
        status = DEGENERATE
    else:
        status = EQUALITY
    ref = {k: f"{v}/{ext.e}" for k, v in lhs.items()}
    extra = {"n": n, "image": str(moved), "reference_k_units": ref}
    return CheckReport("frobenius", lhs, rhs, rhs, slack, status, extra)


def _diagram_status(lhs: GradedForm, rhs: GradedForm) -> str:
    if lhs.level != rhs.level or lhs.form != rhs.form:
        return DISCREPANCY
    return COMMUTES_DEGENERATELY if lhs.is_zero() else COMMUTES_NONZERO


def _not_ramified(theorem: str, c: ASCharacter) -> CheckReport:
    return CheckReport(theorem, None, None, None, None, DEGENERATE, {"reason": f"{c} is not ramified"})


def check_functoriality_theta(c: ASCharacter, ext: ExtensionDesc) -> CheckReport:
    """char(transport(c)) against theta(char(c)), both read at level e*dt(c)."""
    c = c.reduce()
    if classify(c) is not Classification.RAMIFIED:
        return _not_ramified("theta", c)
    level = ext.e * total_dim(c)
    lhs = omega_leading(char_form(transport(c, ext)).form, level)
    rhs = omega_leading(theta_map(char_form(c).form, ext), level)
    return CheckReport("theta", lhs.to_json(), rhs.to_json(), level, None, _diagram_status(lhs, rhs))


def check_functoriality_sigma(c: ASCharacter, ext: ExtensionDesc) -> CheckReport:
    """char(descend(c)) against sigma(char(c)), both read at level f_dual*dt(c)."""
    c = c.reduce()
    if classify(c) is not Classification.RAMIFIED:
        return _not_ramified("sigma", c)
    level = ext.f_dual * total_dim(c)
    lhs = omega_leading(char_form(descend(c, ext)).form, level)
    image = sigma_map(char_form(c).form, ext)
    rhs = omega_leading(image.form, level)
    extra = {"sigma_identically_zero": image.identically_zero}
    return CheckReport("sigma", lhs.to_json(), rhs.to_json(), level, None, _diagram_status(lhs, rhs), extra)
