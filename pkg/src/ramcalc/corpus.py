"""Worked examples and seeded random characters for the test and acceptance suites."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .artin_schreier import ASCharacter, Classification, classify
from .base_change import ExtensionDesc
from .field import FieldDesc, FieldElem, elem_parse, make_field


@dataclass(frozen=True)
class Example:
    name: str
    character: ASCharacter
    ext: Optional[ExtensionDesc]
    expected: dict  # conductor values before and after base change


def tower_example(p: int, n: int) -> Example:
    """t^p - t = x / y^(p^(n+1)) over k(x)((y)), pulled back to k(x^(1/p^n))((y))."""
    k = make_field(p)
    c = ASCharacter.of(elem_parse(f"x/y^{p ** (n + 1)}", k))
    ext = ExtensionDesc.over(k, n, 0)
    return Example(
        f"tower p={p} n={n}",
        c,
        ext,
        {"sw": p ** (n + 1), "dt": p ** (n + 1), "image": f"x^(1/{p ** n})/y^{p}", "sw'": p, "dt'": p},
    )


def root_of_y_example(p: int) -> Example:
    """t^p - t = x / y^p over k(x)((y)), pulled back to k(x)((y^(1/p)))."""
    k = make_field(p)
    c = ASCharacter.of(elem_parse(f"x/y^{p}", k))
    ext = ExtensionDesc.over(k, 0, 1)
    return Example(
        f"root of y p={p}",
        c,
        ext,
        {"sw": p, "dt": p, "image": f"x/y^{p}", "sw'": p * p, "dt'": p * p},
    )


def worked_examples(primes=(3, 5), depths=(1, 2)) -> list[Example]:
    out = [tower_example(p, n) for p in primes for n in depths]
    out += [root_of_y_example(p) for p in primes]
    return out


def random_element(
    rng: random.Random,
    field: FieldDesc,
    max_pole: int = 30,
    alpha_range: int = 3,
    max_terms: int = 2,
) -> FieldElem:
    """A monomial or binomial with a pole of order at most ``max_pole``."""
    fq = field.fq
    items = []
    for _ in range(rng.randint(1, max_terms)):
        code = rng.randrange(1, fq.q)
        alpha = rng.randint(-alpha_range, alpha_range)
        beta = -rng.randint(0, max_pole)
        items.append((code, alpha, beta))
    return FieldElem.from_terms(field, items)


def random_ramified(
    rng: random.Random, field: FieldDesc, max_pole: int = 30, alpha_range: int = 3, max_terms: int = 2
) -> ASCharacter:
    while True:
        c = ASCharacter.of(random_element(rng, field, max_pole, alpha_range, max_terms))
        if classify(c) is Classification.RAMIFIED:
            return c


@dataclass(frozen=True)
class CorpusCase:
    character: ASCharacter  # over ext.source
    upstairs: ASCharacter  # over ext.target
    ext: ExtensionDesc


def theorem_corpus(count: int = 200, seed: int = 0, primes=(3, 5), max_step: int = 2) -> list[CorpusCase]:
    """Random characters on both ends of random extensions with da, db <= max_step."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.choice(primes)
        src = make_field(p, rng.randint(0, 1), rng.randint(0, 1))
        ext = ExtensionDesc.over(src, rng.randint(0, max_step), rng.randint(0, max_step))
        down = ASCharacter.of(random_element(rng, src))
        up = ASCharacter.of(random_element(rng, ext.target))
        out.append(CorpusCase(down, up, ext))
    return out


def oracle_corpus(count: int = 50, seed: int = 0, p: int = 3, max_pole: int = 30) -> list[ASCharacter]:
    """Random reduced ramified characters over k(x)((y))."""
    rng = random.Random(seed)
    k = make_field(p)
    return [random_ramified(rng, k, max_pole) for _ in range(count)]


def iter_lines(text: str) -> Iterator[str]:
    """Expressions from an input file: one per line, '#' starts a comment."""
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield line
