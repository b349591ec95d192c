"""Graded Betti numbers of squarefree monomial ideals.

Tables are always for the ideal ``I`` itself: entry ``(0, d)`` counts the
degree-``d`` minimal generators.  The quotient ``S/I`` has the same entries
shifted up by one homological degree plus ``(0, 0) = 1``; see
:func:`quotient_triples`.

Two independent routes compute the same table:

* :func:`betti_hochster` sums reduced homology of vertex restrictions of the
  Stanley-Reisner complex;
* :func:`betti_upper_koszul` sums reduced homology of the upper Koszul
  simplicial complexes, one per squarefree multidegree.

:func:`hilbert_numerator` is a third, homology-free check on the alternating
sums of either table.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .graph import iter_bits
from .ideal import MonomialIdeal
from .linalg import rank_gf2, rank_mod_p, rank_rational

INF = math.inf
DEFAULT_ENGINE_CAP = 16


class EngineCapError(ValueError):
    """Ambient ring too large for the exact engine."""


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``GF(p)`` for a prime ``p`` or the rationals (``p = 0``)."""

    p: int = 2

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): {self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().upper()
        if t in {"Q", "QQ", "RATIONALS", "RATIONAL"}:
            return cls(0)
        m = re.fullmatch(r"(?:GF\(?)?(\d+)\)?", t)
        if not m:
            raise ValueError(f"unknown field {text!r}; use GF(p) or QQ")
        return cls(int(m.group(1)))

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


GF2 = FieldSpec(2)
QQ = FieldSpec(0)


# simplicial complexes -----------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """Faces as vertex bitmasks.  No faces at all is the void complex;
    ``{0}`` (only the empty face) is the irrelevant complex."""

    n: int
    faces: frozenset[int]

    @property
    def is_void(self) -> bool:
        return not self.faces

    def facets(self) -> list[int]:
        return sorted(
            f for f in self.faces
            if not any((f | (1 << v)) in self.faces for v in range(self.n) if not f >> v & 1)
        )

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def restrict(self, w: int) -> SimplicialComplex:
        return SimplicialComplex(self.n, frozenset(f for f in self.faces if f & ~w == 0))


def stanley_reisner(i: MonomialIdeal) -> SimplicialComplex:
    """Faces are the supports of squarefree monomials outside ``i``."""
    if i.is_unit:
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    return SimplicialComplex(i.ambient_n, frozenset(_faces_avoiding(tuple(i.gens), (1 << i.ambient_n) - 1)))


def _faces_avoiding(gens: tuple[int, ...], w: int) -> list[int]:
    """Subsets of ``w`` containing no element of ``gens``."""
    verts = list(iter_bits(w))
    faces = [0]
    level = [(0, -1)]
    while level:
        nxt = []
        for f, top in level:
            for v in verts:
                if v <= top:
                    continue
                nf = f | (1 << v)
                if any(g & ~nf == 0 for g in gens):
                    continue
                nxt.append((nf, v))
        faces.extend(f for f, _ in nxt)
        level = nxt
    return faces


def _homology_from_faces(faces: Iterable[int], field: FieldSpec) -> dict[int, int]:
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    if not by_dim:
        return {}
    top = max(by_dim)
    index = {d: {f: k for k, f in enumerate(fs)} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        lower = index.get(d - 1, {})
        faces_d = by_dim.get(d, [])
        if field.p == 2:
            rows = []
            for f in faces_d:
                row = 0
                for v in iter_bits(f):
                    row |= 1 << lower[f ^ (1 << v)]
                rows.append(row)
            ranks[d] = rank_gf2(rows)
        else:
            rows = []
            for f in faces_d:
                row = {}
                for sign_pos, v in enumerate(iter_bits(f)):
                    row[lower[f ^ (1 << v)]] = -1 if sign_pos & 1 else 1
                rows.append(row)
            ranks[d] = rank_rational(rows) if field.is_rational else rank_mod_p(rows, field.p)
    dims = {}
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            dims[d] = h
    return dims


def reduced_homology_dims(c: SimplicialComplex, field: FieldSpec = GF2) -> dict[int, int]:
    """Nonzero reduced homology dimensions; void complex gives ``{}``,
    the irrelevant complex ``{-1: 1}``."""
    return _homology_from_faces(c.faces, field)


# Betti tables -------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    entries: Mapping[tuple[int, int], int]
    field: FieldSpec = GF2

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})
        for (i, j), r in self.entries.items():
            if r < 0:
                raise ValueError(f"negative Betti number at ({i}, {j})")

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return dict(self.entries) == dict(other.entries) and self.field == other.field

    def __hash__(self):
        return hash((tuple(self.entries.items()), self.field))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def triples(self) -> list[list[int]]:
        return [[i, j, r] for (i, j), r in self.entries.items()]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]], field: FieldSpec = GF2) -> BettiTable:
        return cls({(i, j): r for i, j, r in triples}, field)

    def quotient_triples(self) -> list[list[int]]:
        return [[0, 0, 1]] + [[i + 1, j, r] for i, j, r in self.triples()]

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def initial_degree(self) -> int:
        return min(j for i, j in self.entries if i == 0)

    def linearity_steps(self) -> float | int:
        degs = {j for i, j in self.entries if i == 0}
        if len(degs) != 1:
            raise ValueError(f"ideal is not generated in a single degree: {sorted(degs)}")
        (d,) = degs
        bad = [i for i, j in self.entries if i >= 1 and j != i + d]
        return min(bad) - 1 if bad else INF

    def alternating_sums(self) -> dict[int, int]:
        sums: dict[int, int] = {}
        for (i, j), r in self.entries.items():
            sums[j] = sums.get(j, 0) + (-1) ** i * r
        return {j: s for j, s in sums.items() if s}

    def render(self) -> str:
        return " ".join(f"({i},{j}):{r}" for (i, j), r in self.entries.items())


def _check_engine_input(i: MonomialIdeal, cap: int | None):
    if i.is_zero:
        raise ValueError("Betti numbers of the zero ideal are not computed")
    if i.is_unit:
        raise ValueError("Betti numbers of the unit ideal are not computed")
    if cap is not None and i.ambient_n > cap:
        raise EngineCapError(f"ambient ring has {i.ambient_n} variables, engine cap is {cap}")


def _positions(w: int, n: int) -> list[int]:
    """``pos[v]``: index of ``v`` among the members of ``w``."""
    pos = [0] * n
    k = 0
    for v in range(n):
        pos[v] = k
        if w >> v & 1:
            k += 1
    return pos


def _compress(mask: int, pos: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << pos[low.bit_length() - 1]
        mask ^= low
    return out


@lru_cache(maxsize=200_000)
def _restriction_homology(gens: frozenset[int], size: int, field: FieldSpec) -> tuple[tuple[int, int], ...]:
    faces = _faces_avoiding(tuple(gens), (1 << size) - 1)
    return tuple(sorted(_homology_from_faces(faces, field).items()))


def betti_hochster(
    i: MonomialIdeal,
    field: FieldSpec = GF2,
    *,
    prune: bool = True,
    cap: int | None = DEFAULT_ENGINE_CAP,
) -> BettiTable:
    """Betti table from restrictions of the Stanley-Reisner complex.

    ``beta[i, |W|]`` collects ``dim H~_{|W|-i-2}(Delta|_W)`` over vertex
    sets ``W``.  With ``prune`` only sets ``W`` equal to the union of the
    generators they contain are visited; any other ``W`` has a vertex
    outside every minimal non-face, so ``Delta|_W`` is a cone over it.
    """
    _check_engine_input(i, cap)
    n = i.ambient_n
    gens = list(i.gens)
    acc: dict[tuple[int, int], int] = {}
    if prune:
        candidates = _lcm_closure(gens)
    else:
        candidates = range(1 << n)
    for w in candidates:
        if w == 0:
            continue
        pos = _positions(w, n)
        inside = frozenset(_compress(g, pos) for g in gens if g & ~w == 0)
        size = w.bit_count()
        for deg, dim in _restriction_homology(inside, size, field):
            hom = size - deg - 2
            if hom >= 0:
                acc[(hom, size)] = acc.get((hom, size), 0) + dim
    return BettiTable(acc, field)


def _lcm_closure(gens: list[int]) -> set[int]:
    """All lcms of nonempty subsets of ``gens``."""
    closure: set[int] = set()
    for g in gens:
        closure |= {g | m for m in closure}
        closure.add(g)
    return closure


def upper_koszul_complex(i: MonomialIdeal, sigma: int) -> SimplicialComplex:
    """Subsets ``tau`` of ``sigma`` with ``x^(sigma - tau)`` in ``i``."""
    faces = []
    sub = sigma
    while True:
        if i.contains(sigma & ~sub):
            faces.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & sigma
    return SimplicialComplex(i.ambient_n, frozenset(faces))


def betti_upper_koszul(
    i: MonomialIdeal,
    field: FieldSpec = GF2,
    *,
    cap: int | None = DEFAULT_ENGINE_CAP,
) -> BettiTable:
    """Betti table from ``beta[i, sigma] = dim H~_{i-1}(K^sigma)`` summed over
    every squarefree multidegree ``sigma``."""
    _check_engine_input(i, cap)
    acc: dict[tuple[int, int], int] = {}
    for sigma in range(1, 1 << i.ambient_n):
        k = upper_koszul_complex(i, sigma)
        if k.is_void:
            continue
        size = sigma.bit_count()
        for deg, dim in reduced_homology_dims(k, field).items():
            acc[(deg + 1, size)] = acc.get((deg + 1, size), 0) + dim
    return BettiTable(acc, field)


def hilbert_numerator(i: MonomialIdeal, *, max_generators: int | None = 20) -> list[int]:
    """Coefficients of the numerator of the Hilbert series of ``S/i``.

    Inclusion-exclusion over subsets of minimal generators: each subset
    contributes ``(-1)^|subset| t^deg(lcm)``.  Subsets are folded in one
    generator at a time and terms with equal lcm are merged as they appear.
    """
    if max_generators is not None and len(i.gens) > max_generators:
        raise ValueError(f"{len(i.gens)} generators exceeds the limit of {max_generators}")
    terms: dict[int, int] = {0: 1}
    for g in i.gens:
        new = dict(terms)
        for m, c in terms.items():
            key = m | g
            new[key] = new.get(key, 0) - c
        terms = {m: c for m, c in new.items() if c}
    coeffs = [0] * (i.ambient_n + 1)
    for m, c in terms.items():
        coeffs[m.bit_count()] += c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def numerator_from_table(table: BettiTable) -> list[int]:
    """Hilbert numerator implied by an ideal's Betti table."""
    sums = table.alternating_sums()
    top = max([0, *sums])
    coeffs = [0] * (top + 1)
    coeffs[0] = 1
    for j, s in sums.items():
        coeffs[j] -= s
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def table_matches_numerator(table: BettiTable, i: MonomialIdeal) -> bool:
    return numerator_from_table(table) == hilbert_numerator(i, max_generators=None)


@lru_cache(maxsize=8192)
def betti_table(i: MonomialIdeal, field: FieldSpec = GF2, *, cap: int | None = DEFAULT_ENGINE_CAP) -> BettiTable:
    """Default engine (pruned Hochster sum), memoized per ideal."""
    return betti_hochster(i, field, cap=cap)


def regularity(i: MonomialIdeal, field: FieldSpec = GF2, *, cap: int | None = DEFAULT_ENGINE_CAP) -> int:
    return betti_table(i, field, cap=cap).regularity()


def linearity_steps(i: MonomialIdeal, field: FieldSpec = GF2, *, cap: int | None = DEFAULT_ENGINE_CAP) -> float | int:
    """Largest ``k`` with ``beta[i, j] = 0`` for ``1 <= i <= k`` and ``j != i + d``;
    ``INF`` when the whole resolution is linear."""
    if len({g.bit_count() for g in i.gens}) > 1:
        raise ValueError("linearity steps need an ideal generated in one degree")
    return betti_table(i, field, cap=cap).linearity_steps()


def compare_fields(i: MonomialIdeal, fields: Iterable[FieldSpec] = (GF2, QQ), *, cap: int | None = DEFAULT_ENGINE_CAP) -> dict:
    """Tables over several fields plus the entries where they disagree."""
    tables = {str(f): betti_table(i, f, cap=cap) for f in fields}
    keys = sorted({k for t in tables.values() for k in t.entries})
    diffs = [
        {"entry": list(k), "ranks": {name: t[k] for name, t in tables.items()}}
        for k in keys
        if len({t[k] for t in tables.values()}) > 1
    ]
    return {"tables": {name: t.triples() for name, t in tables.items()}, "discrepancies": diffs}


def steps_str(steps: float | int) -> str:
    return "INF" if steps == INF else str(steps)
