"""Artin-Schreier characters t^p - t = f and their reduction.

Two elements define the same character iff they differ by g^p - g.  The
reduction strips p-th-power pole levels, which lowers the pole order without
changing the class.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .finite_field import FieldError, FqSpec
from .field import FieldDesc, FieldElem, format_elem, homogeneous_part, pth_root


class Classification(enum.Enum):
    TRIVIAL = "trivial"
    UNRAMIFIED = "unramified_nontrivial"
    RAMIFIED = "ramified"

    def __str__(self):
        return self.value


def as_reduce(f: FieldElem) -> tuple[FieldElem, FieldElem]:
    """Return (f_red, g) with f = f_red + g^p - g.

    Negative levels are visited from the deepest pole upward.  A level whose
    whole homogeneous part S is a p-th power r^p is replaced by r, which
    sits at a shallower level and is revisited in turn.  Levels that cannot
    be rooted are left alone and the scan continues, so no negative level of
    the result is a p-th power.
    """
    g = f.field.zero()
    last = None
    while True:
        pending = [be for be in f.levels() if be < 0 and (last is None or be > last)]
        if not pending:
            return f, g
        level = pending[0]
        last = level
        part = homogeneous_part(f, level)
        root = pth_root(part)
        if root is not None:
            f = f - part + root
            g = g + root


def is_reduced(f: FieldElem) -> bool:
    return as_reduce(f)[0] == f


@dataclass(frozen=True)
class ASCharacter:
    field: FieldDesc
    f: FieldElem
    reduced: bool = False
    witness: Optional[FieldElem] = None  # original = f + witness^p - witness

    @classmethod
    def of(cls, f: FieldElem) -> "ASCharacter":
        """The reduced character of t^p - t = f."""
        red, g = as_reduce(f)
        return cls(f.field, red, True, g)

    def reduce(self) -> "ASCharacter":
        if self.reduced:
            return self
        red, g = as_reduce(self.f)
        prev = self.witness if self.witness is not None else self.field.zero()
        return ASCharacter(self.field, red, True, prev + g)

    def __add__(self, other: "ASCharacter") -> "ASCharacter":
        return char_add(self, other)

    def __str__(self):
        return f"[{format_elem(self.f, surface=True)}]"

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "f": format_elem(self.f),
            "reduced": self.reduced,
            "witness": format_elem(self.witness) if self.witness is not None else None,
        }


def char_add(c1: ASCharacter, c2: ASCharacter) -> ASCharacter:
    if c1.field != c2.field:
        raise FieldError(f"characters over {c1.field!r} and {c2.field!r}")
    return ASCharacter.of(c1.f + c2.f)


@lru_cache(maxsize=None)
def _trace_one(fq: FqSpec) -> int:
    return next(c for c in fq.elements() if fq.trace(c) == 1)


def _residue_class(f: FieldElem) -> dict:
    """Canonical residue terms (beta = 0) modulo the Artin-Schreier image of F_q[u, 1/u]."""
    fq, p = f.field.fq, f.field.p
    out: dict = {}
    for (al, be), c in f._terms.items():
        if be != 0:
            continue
        while al and al % p == 0:
            al //= p
            c = fq.root(c)
        out[al] = fq.add(out.get(al, 0), c)
    if 0 in out:
        t = fq.trace(out[0])
        out[0] = fq.mul(fq.from_int(t), _trace_one(fq)) if t else 0
    return {k: c for k, c in out.items() if c}


def classify(c: ASCharacter) -> Classification:
    f = c.reduce().f
    if f.pole_order() > 0:
        return Classification.RAMIFIED
    return Classification.UNRAMIFIED if _residue_class(f) else Classification.TRIVIAL


def canonical_form(f: FieldElem) -> FieldElem:
    """A representative that depends only on the class of f.

    Terms with beta > 0 are g^p - g for a convergent g and are dropped.
    Every remaining term whose exponents are both divisible by p is
    replaced by its p-th root (repeatedly); the surviving constant is
    normalized by its trace, which classifies F_q modulo z^p - z.
    """
    field = f.field
    fq, p = field.fq, field.p
    acc: dict = {}
    for (al, be), c in f._terms.items():
        if be > 0:
            continue
        while (al or be) and al % p == 0 and be % p == 0:
            al, be = al // p, be // p
            c = fq.root(c)
        acc[(al, be)] = fq.add(acc.get((al, be), 0), c)
    if (0, 0) in acc:
        t = fq.trace(acc[(0, 0)])
        acc[(0, 0)] = fq.mul(fq.from_int(t), _trace_one(fq)) if t else 0
    return FieldElem(field, acc)


def same_class(f: FieldElem, g: FieldElem) -> bool:
    if f.field != g.field:
        raise FieldError(f"elements of {f.field!r} and {g.field!r}")
    return canonical_form(f) == canonical_form(g)
