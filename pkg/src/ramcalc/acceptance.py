"""The acceptance suite: one exact pass/fail verdict per criterion, with timing."""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from typing import Callable

from .artin_schreier import Classification, as_reduce, canonical_form, classify, is_reduced
from .base_change import (
    COMMUTES_DEGENERATELY,
    COMMUTES_NONZERO,
    DEGENERATE,
    EQUALITY,
    check_frobenius_invariance,
    check_functoriality_sigma,
    check_functoriality_theta,
    check_thm_left,
    check_thm_right,
    transport,
)
from .conductor import cc_coefficients, char_form, swan, total_dim
from .corpus import oracle_corpus, random_element, theorem_corpus, tower_example, worked_examples
from .curve_oracle import oracle_conductor
from .field import elem_parse, frobenius_power

log = logging.getLogger(__name__)


@dataclass
class Verdict:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number}. {self.title}: {self.detail} ({self.seconds:.2f}s, limit {self.limit:g}s)"


def _timed(number: int, title: str, limit: float, body: Callable[[], tuple[bool, str]]) -> Verdict:
    t0 = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - t0
    if elapsed >= limit:
        ok, detail = False, detail + "; over time limit"
    return Verdict(number, title, ok, detail, elapsed, limit)


def tower_conductors() -> tuple[bool, str]:
    bad = []
    for p in (3, 5):
        for n in (1, 2):
            t0 = time.perf_counter()
            ex = tower_example(p, n)
            c, ext = ex.character, ex.ext
            moved = transport(c, ext)
            want = elem_parse(ex.expected["image"], ext.target)
            got = (swan(c), total_dim(c), moved.f == want, swan(moved), total_dim(moved))
            if got != (p ** (n + 1), p ** (n + 1), True, p, p) or time.perf_counter() - t0 >= 1:
                bad.append(f"p={p} n={n}: {got}")
    return not bad, "; ".join(bad) or "sw = dt = p^(n+1) below, p after pull-back, for p in {3,5}, n in {1,2}"


def root_of_y_conductors() -> tuple[bool, str]:
    bad = []
    for ex in worked_examples(depths=()):
        c, ext = ex.character, ex.ext
        p = ext.p
        moved = transport(c, ext)
        got = (swan(c), total_dim(c), swan(moved), total_dim(moved))
        if got != (p, p, p * p, p * p):
            bad.append(f"{ex.name}: {got}")
    return not bad, "; ".join(bad) or "sw = dt = p below, p^2 after adjoining y^(1/p), for p in {3,5}"


def sharpness() -> tuple[bool, str]:
    bad = []
    for ex in worked_examples(depths=()):
        r = check_thm_right(ex.character, ex.ext)
        if r.status != EQUALITY or r.lhs != r.bound:
            bad.append(f"right {ex.name}: {r.status} {r.lhs} vs {r.bound}")
    for p in (3, 5):
        for n in (1, 2):
            ex = tower_example(p, n)
            up = transport(ex.character, ex.ext)
            r = check_thm_left(up, ex.ext)
            if r.status != EQUALITY or r.lhs != r.bound or r.bound["dimtot"] != p ** (n + 1):
                bad.append(f"left p={p} n={n}: {r.status} {r.lhs} vs {r.bound}")
    return not bad, "; ".join(bad) or "right bound tight on the y-root example, left bound tight on the tower"


def theorem_corpus_run(count: int = 200, seed: int = 0) -> tuple[bool, str]:
    fails = []
    for i, case in enumerate(theorem_corpus(count, seed)):
        reports = [
            check_thm_right(case.character, case.ext),
            check_thm_left(case.upstairs, case.ext),
            check_frobenius_invariance(case.character, case.ext.n),
        ]
        fails += [f"#{i} {r.theorem}" for r in reports if r.failed]
    return not fails, ", ".join(fails[:5]) or f"{count} cases x (right, left, frobenius): 0 failures"


def cc_report() -> tuple[bool, str]:
    bad = []
    for p in (3, 5):
        for n in (1, 2):
            ex = tower_example(p, n)
            below = cc_coefficients(ex.character)
            above = cc_coefficients(transport(ex.character, ex.ext))
            got = ((below.zero_section_coeff, below.divisor_coeff, below.direction),
                   (above.zero_section_coeff, above.divisor_coeff, above.direction))
            if got != ((-1, -(p ** (n + 1)), "du"), (-1, -p, "du")):
                bad.append(f"p={p} n={n}: {got}")
    return not bad, "; ".join(bad) or "(-1, -p^(n+1), du) and (-1, -p, du)"


def oracle_agreement(count: int = 50, seed: int = 0) -> tuple[bool, str]:
    chars = []
    for ex in worked_examples():
        chars.append(ex.character)
        chars.append(transport(ex.character, ex.ext))
    chars += oracle_corpus(count, seed)
    bad = []
    for c in chars:
        p = c.field.p
        o = oracle_conductor(c.f, mu_max=p, deg_max=3)
        sw, dt = swan(c), total_dim(c)
        if (o.sw_ceiling, o.dt_ceiling) != (sw, dt) or o.sw_est > sw or o.dt_est > dt:
            bad.append(f"{c}: oracle {o.sw_est}, {o.dt_est} vs {sw}, {dt}")
    return not bad, "; ".join(bad[:3]) or f"{len(chars)} characters: ceilings match, no ratio above the symbolic value"


def property_suites(count: int = 200, seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    problems = []
    degenerate = {"theta": 0, "sigma": 0}
    for i, case in enumerate(theorem_corpus(count, seed)):
        field = case.character.field
        f = random_element(rng, field)
        g = random_element(rng, field)
        red, wit = as_reduce(f)
        if f != red + frobenius_power(wit, 1) - wit:
            problems.append(f"#{i} soundness")
        if as_reduce(red) != (red, field.zero()) or not is_reduced(red):
            problems.append(f"#{i} idempotence")
        if canonical_form(f) != canonical_form(f + frobenius_power(g, 1) - g):
            problems.append(f"#{i} class invariance")
        for c in (case.character, case.upstairs):
            if classify(c) is Classification.RAMIFIED:
                sw, dt = swan(c), total_dim(c)  # total_dim raises if the guard trips
                cf = char_form(c)
                if not sw <= dt <= sw + 1 or cf.level != dt or cf.is_zero():
                    problems.append(f"#{i} char form")
        for r in (check_functoriality_theta(case.character, case.ext),
                  check_functoriality_sigma(case.upstairs, case.ext)):
            if r.status not in (COMMUTES_NONZERO, COMMUTES_DEGENERATELY, DEGENERATE):
                problems.append(f"#{i} {r.theorem} {r.status}")
            elif r.status == COMMUTES_DEGENERATELY:
                degenerate[r.theorem] += 1
                log.info("degenerate %s diagram: case #%d over %r", r.theorem, i, case.ext)
    detail = ", ".join(problems[:5]) or (
        f"{count} cases clean; degenerate diagrams: theta {degenerate['theta']}, sigma {degenerate['sigma']}"
    )
    return not problems, detail


CRITERIA = [
    (1, "tower example conductors", 4.0, tower_conductors),
    (2, "y-root example conductors", 1.0, root_of_y_conductors),
    (3, "sharpness of both bounds", 1.0, sharpness),
    (4, "theorem corpus", 30.0, theorem_corpus_run),
    (5, "characteristic cycle coefficients", 1.0, cc_report),
    (6, "curve oracle agreement", 60.0, oracle_agreement),
    (7, "property suites", 60.0, property_suites),
]


def run_all() -> list[Verdict]:
    return [_timed(num, title, limit, body) for num, title, limit, body in CRITERIA]
