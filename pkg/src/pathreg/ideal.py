"""Squarefree monomial ideals.

A squarefree monomial is an int bitmask over the ambient variables
``x0..x{n-1}``; the constant monomial ``1`` is ``0``.  Divisibility is
``a & ~b == 0``, lcm is ``a | b``, and ``a / gcd(a, b)`` is ``a & ~b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, enumerate_path_monomials, iter_bits


def divides(a: int, b: int) -> bool:
    return a & ~b == 0


def minimal_elements(monomials: Iterable[int]) -> frozenset[int]:
    ordered = sorted(set(monomials), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ambient_n: int
    gens: frozenset[int]

    def __post_init__(self):
        full = (1 << self.ambient_n) - 1
        for g in self.gens:
            if g & ~full:
                raise ValueError(f"generator {g:b} outside {self.ambient_n} variables")
        if minimal_elements(self.gens) != self.gens:
            raise ValueError("generators are not an antichain under divisibility")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return 0 in self.gens

    def sorted_gens(self) -> list[int]:
        return sorted(self.gens, key=lambda m: (m.bit_count(), sorted(iter_bits(m))))

    def contains(self, m: int) -> bool:
        return any(g & ~m == 0 for g in self.gens)

    def __contains__(self, m: int) -> bool:
        return self.contains(m)

    def __str__(self):
        return format_ideal(self)


def minimalize(monomials: Iterable[int], ambient_n: int) -> MonomialIdeal:
    return MonomialIdeal(ambient_n, minimal_elements(monomials))


def zero_ideal(ambient_n: int) -> MonomialIdeal:
    return MonomialIdeal(ambient_n, frozenset())


def principal(m: int, ambient_n: int) -> MonomialIdeal:
    return MonomialIdeal(ambient_n, frozenset([m]))


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g.n, frozenset((1 << u) | (1 << v) for u, v in g.edges()))


def path_ideal(g: Graph, t: int) -> MonomialIdeal:
    if t < 3:
        raise ValueError("path ideals are defined for t >= 3; use edge_ideal for t = 2")
    return minimalize(enumerate_path_monomials(g, t), g.n)


def graph_ideal(g: Graph, t: int) -> MonomialIdeal:
    """Edge ideal for ``t == 2``, ``t``-path ideal otherwise."""
    return edge_ideal(g) if t == 2 else path_ideal(g, t)


def colon(i: MonomialIdeal, m: int) -> MonomialIdeal:
    """``(i : m)``, generated by ``g / gcd(g, m)`` over the generators ``g``."""
    return minimalize((g & ~m for g in i.gens), i.ambient_n)


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    if i.ambient_n != j.ambient_n:
        raise ValueError(f"ambient mismatch: {i.ambient_n} vs {j.ambient_n}")
    return minimalize(i.gens | j.gens, i.ambient_n)


def add_monomial(i: MonomialIdeal, m: int) -> MonomialIdeal:
    return ideal_sum(i, principal(m, i.ambient_n))


def generated_in_degrees(i: MonomialIdeal) -> set[int]:
    return {g.bit_count() for g in i.gens}


def is_variable_generated(i: MonomialIdeal) -> bool:
    """Every minimal generator is a variable; true for the zero ideal."""
    return all(g.bit_count() == 1 for g in i.gens)


def ideal_contains(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    """``j`` is a subset of ``i``."""
    return all(i.contains(g) for g in j.gens)


def format_monomial(m: int) -> str:
    if m == 0:
        return "1"
    return "*".join(f"x{v}" for v in iter_bits(m))


def format_ideal(i: MonomialIdeal) -> str:
    if i.is_zero:
        return "0"
    return ", ".join(format_monomial(g) for g in i.sorted_gens())


def parse_monomial(text: str) -> int:
    text = text.strip()
    if text == "1":
        return 0
    mask = 0
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor.startswith("x") or not factor[1:].isdigit():
            raise ValueError(f"bad variable {factor!r}")
        mask |= 1 << int(factor[1:])
    return mask
