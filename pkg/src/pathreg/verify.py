"""Claim checkers, the corpus runner, and report assembly.

Each checker takes a graph (and ``t`` where relevant) and returns
:class:`ClaimResult` values.  A claim is ``vacuous`` when its hypotheses fail
on the graph, ``holds`` when the conclusion was verified, and ``failed`` with
a witness otherwise.

All ideal and Betti data flow through :class:`GraphContext`, which also runs
two integrity checks before any claim consumes the data: the generators must
match an independent spanning-path computation, and the Betti table must
reproduce the Hilbert numerator of its ideal.  A corrupted ideal or table
therefore turns every claim that reads it into ``failed``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from . import __version__
from .betti import (
    DEFAULT_ENGINE_CAP,
    GF2,
    BettiTable,
    FieldSpec,
    betti_table,
    hilbert_numerator,
    numerator_from_table,
    steps_str,
)
from .graph import Graph, complement, induced_subgraph, iter_bits, write_graph6
from .ideal import (
    MonomialIdeal,
    add_monomial,
    colon,
    edge_ideal,
    format_ideal,
    format_monomial,
    path_ideal,
)
from .props import (
    PropertyFlags,
    induced_cycles,
    is_chordal,
    is_gap_free,
    predicted_linearity_steps,
    property_flags,
)

HOLDS, VACUOUS, FAILED = "holds", "vacuous", "failed"

CLAIM_IDS = (
    "L2.8", "L2.9", "T2.11", "T2.12", "T2.13",
    "L3.1", "T3.2", "L3.3", "L3.4", "L3.5",
    "T3.6", "T3.7", "L3.8", "L3.9", "T3.10",
)


class IntegrityError(Exception):
    """Ideal or Betti data disagrees with an independent recomputation."""

    def __init__(self, message: str, t: int):
        super().__init__(message)
        self.t = t


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    verdict: str
    t: int | None = None
    witness: dict | None = None

    def __post_init__(self):
        if self.claim not in CLAIM_IDS:
            raise ValueError(f"unknown claim {self.claim!r}")
        if (self.witness is not None) != (self.verdict == FAILED):
            raise ValueError("a witness is required exactly when the verdict is failed")

    def as_dict(self) -> dict:
        out = {"claim": self.claim, "verdict": self.verdict}
        if self.t is not None:
            out["t"] = self.t
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class Fault:
    """Deliberate corruption for checking that the verifier notices.

    ``kind == "betti"`` adds ``delta`` to entry ``(i, j)`` of the table for
    ``t``; ``kind == "drop"`` removes the ``index``-th generator (in sorted
    order) of the ideal for ``t``.  ``graph6 = None`` targets every graph.
    """

    kind: str
    t: int
    graph6: str | None = None
    i: int = 0
    j: int = 0
    delta: int = 1
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("betti", "drop"):
            raise ValueError(f"unknown fault kind {self.kind!r}")

    def targets(self, g6: str, t: int) -> bool:
        return t == self.t and (self.graph6 is None or self.graph6 == g6)

    @classmethod
    def from_dict(cls, d: dict) -> Fault:
        return cls(**d)


def spanning_path_sets(g: Graph) -> list[int]:
    """``ends[mask]``: bitmask of vertices at which some path covering exactly
    ``mask`` can end (0 when no such path).  Bitmask dynamic programming over
    vertex subsets, independent of the DFS path enumerator."""
    ends = [0] * (1 << g.n)
    for v in range(g.n):
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << g.n):
        e = ends[mask]
        if not e:
            continue
        for v in iter_bits(e):
            for u in iter_bits(g.adj[v] & ~mask):
                ends[mask | (1 << u)] |= 1 << u
    return ends


class GraphContext:
    """Lazily computed ideals, Betti tables and integrity checks for one graph."""

    def __init__(
        self,
        g: Graph,
        field_spec: FieldSpec = GF2,
        *,
        cap: int | None = DEFAULT_ENGINE_CAP,
        fault: Fault | None = None,
        cache: dict | None = None,
    ):
        self.g = g
        self.g6 = write_graph6(g)
        self.field = field_spec
        self.cap = cap
        self.fault = fault
        self.cache = cache
        self.new_cache_entries: list[dict] = []
        self._ideals: dict[int, MonomialIdeal] = {}
        self._tables: dict[int, BettiTable] = {}
        self._checked_ideals: set[int] = set()
        self._checked_tables: set[int] = set()
        self._flags: PropertyFlags | None = None
        self._ends: list[int] | None = None

    @property
    def flags(self) -> PropertyFlags:
        if self._flags is None:
            self._flags = property_flags(self.g)
        return self._flags

    def _fault_hits(self, kind: str, t: int) -> bool:
        return self.fault is not None and self.fault.kind == kind and self.fault.targets(self.g6, t)

    def raw_ideal(self, t: int) -> MonomialIdeal:
        if t not in self._ideals:
            ideal = edge_ideal(self.g) if t == 2 else path_ideal(self.g, t)
            if self._fault_hits("drop", t) and ideal.gens:
                doomed = ideal.sorted_gens()[self.fault.index % len(ideal.gens)]
                ideal = MonomialIdeal(ideal.ambient_n, ideal.gens - {doomed})
            self._ideals[t] = ideal
        return self._ideals[t]

    def ideal(self, t: int) -> MonomialIdeal:
        """The edge ideal (``t = 2``) or ``t``-path ideal, integrity-checked."""
        ideal = self.raw_ideal(t)
        if t not in self._checked_ideals:
            if self._ends is None:
                self._ends = spanning_path_sets(self.g)
            expected = {m for m in range(1 << self.g.n) if m.bit_count() == t and self._ends[m]}
            if set(ideal.gens) != expected:
                missing = sorted(expected - ideal.gens)
                extra = sorted(ideal.gens - expected)
                raise IntegrityError(
                    f"generators of I_{t} disagree with spanning paths: "
                    f"missing {[format_monomial(m) for m in missing]}, "
                    f"extra {[format_monomial(m) for m in extra]}",
                    t,
                )
            self._checked_ideals.add(t)
        return ideal

    def raw_table(self, t: int) -> BettiTable:
        if t not in self._tables:
            ideal = self.raw_ideal(t)
            key = cache_key(self.g6, t, self.field)
            dropped = self._fault_hits("drop", t)
            cached = None if (self.cache is None or dropped) else self.cache.get(key)
            if cached is not None:
                table = BettiTable.from_triples(cached, self.field)
            else:
                table = betti_table(ideal, self.field, cap=self.cap)
                if self.cache is not None and not dropped:
                    self.cache[key] = table.triples()
                    self.new_cache_entries.append(
                        {"key": list(key), "betti": table.triples()}
                    )
            if self._fault_hits("betti", t):
                f = self.fault
                entries = dict(table.entries)
                entries[(f.i, f.j)] = max(entries.get((f.i, f.j), 0) + f.delta, 0)
                table = BettiTable(entries, self.field)
            self._tables[t] = table
        return self._tables[t]

    def table(self, t: int) -> BettiTable:
        """Betti table of :meth:`ideal`, checked against its Hilbert numerator."""
        ideal = self.ideal(t)
        table = self.raw_table(t)
        if t not in self._checked_tables:
            expected = hilbert_numerator(ideal, max_generators=None)
            got = numerator_from_table(table)
            if got != expected:
                raise IntegrityError(
                    f"Betti table of I_{t} gives Hilbert numerator {got}, "
                    f"generators give {expected}",
                    t,
                )
            self._checked_tables.add(t)
        return table

    def nonzero(self, t: int) -> bool:
        return not self.ideal(t).is_zero

    def reg(self, t: int) -> int:
        return self.table(t).regularity()

    def steps(self, t: int) -> float | int:
        return self.table(t).linearity_steps()

    def summary(self, t: int) -> dict:
        ideal = self.raw_ideal(t)
        out = {"t": t, "generators": len(ideal.gens)}
        if ideal.is_zero:
            out["zero"] = True
            return out
        table = self.raw_table(t)
        out["betti"] = table.triples()
        out["regularity"] = table.regularity()
        out["steps"] = steps_str(table.linearity_steps())
        return out


def cache_key(g6: str, t: int, field_spec: FieldSpec) -> tuple[str, int, str, str]:
    return (g6, t, str(field_spec), __version__)


def _ctx(g: Graph, ctx: GraphContext | None) -> GraphContext:
    return ctx if ctx is not None else GraphContext(g)


def _failed(claim: str, ctx: GraphContext, t: int | None = None, **witness) -> ClaimResult:
    return ClaimResult(claim, FAILED, t, {"graph6": ctx.g6, **witness})


def _guarded(claims: tuple[str, ...], ts: tuple[int, ...]):
    """Turn an IntegrityError raised while checking into failed verdicts.

    ``ts`` gives the ``t`` each claim reports when the checker has no ``t``
    argument of its own.
    """

    def wrap(fn):
        def inner(g: Graph, *args, ctx: GraphContext | None = None, **kw):
            ctx = _ctx(g, ctx)
            try:
                return fn(g, *args, ctx=ctx, **kw)
            except IntegrityError as exc:
                given = args[0] if args else kw.get("t")
                return [
                    _failed(c, ctx, given if given is not None else t, integrity=str(exc), ideal_t=exc.t)
                    for c, t in zip(claims, ts)
                ]

        inner.__name__ = fn.__name__
        inner.__doc__ = fn.__doc__
        return inner

    return wrap


def _edge_monomials(g: Graph) -> list[int]:
    return [(1 << u) | (1 << v) for u, v in g.edges()]


def _unwrap(results: list[ClaimResult]) -> ClaimResult:
    (r,) = results
    return r


# edge ideal background ----------------------------------------------------

def _check_l28_ideal(ideal: MonomialIdeal, field_spec: FieldSpec, cap) -> dict | None:
    base = betti_table(ideal, field_spec, cap=cap).regularity()
    for x in range(ideal.ambient_n):
        bigger = add_monomial(ideal, 1 << x)
        if bigger.is_unit:
            continue
        r = betti_table(bigger, field_spec, cap=cap).regularity()
        if r > base:
            return {"ideal": format_ideal(ideal), "variable": f"x{x}", "reg_I": base, "reg_I_x": r}
    return None


def check_L28_ideal(ideal: MonomialIdeal, field_spec: FieldSpec = GF2, cap=DEFAULT_ENGINE_CAP) -> str:
    """``reg(I, x) <= reg(I)`` for every variable; returns a verdict string."""
    if ideal.is_zero or ideal.is_unit:
        return VACUOUS
    return FAILED if _check_l28_ideal(ideal, field_spec, cap) else HOLDS


def _check_l29_ideal(ideal: MonomialIdeal, m: int, field_spec: FieldSpec, cap) -> dict | None:
    """Upper bound for any squarefree ``m``; equality with one of the two terms
    when ``m`` is a variable."""
    quotient = colon(ideal, m)
    bigger = add_monomial(ideal, m)
    if quotient.is_zero or quotient.is_unit or bigger.is_unit:
        return None
    d = m.bit_count()
    r = betti_table(ideal, field_spec, cap=cap).regularity()
    rc = betti_table(quotient, field_spec, cap=cap).regularity()
    rs = betti_table(bigger, field_spec, cap=cap).regularity()
    if r > max(rc + d, rs) or (d == 1 and r not in (rc + 1, rs)):
        return {
            "ideal": format_ideal(ideal),
            "monomial": format_monomial(m),
            "reg_I": r,
            "reg_colon_plus_d": rc + d,
            "reg_sum": rs,
        }
    return None


def check_L29_ideal(ideal: MonomialIdeal, m: int, field_spec: FieldSpec = GF2, cap=DEFAULT_ENGINE_CAP) -> str:
    """``reg(I) <= max(reg(I : m) + deg m, reg(I, m))``; returns a verdict string."""
    if ideal.is_zero or ideal.is_unit:
        return VACUOUS
    quotient = colon(ideal, m)
    if quotient.is_zero or quotient.is_unit or add_monomial(ideal, m).is_unit:
        return VACUOUS
    return FAILED if _check_l29_ideal(ideal, m, field_spec, cap) else HOLDS


@_guarded(("L2.8",), (2,))
def check_L28(g: Graph, t: int = 2, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Adding a variable never raises the regularity of ``I_t`` (edge ideal at ``t = 2``)."""
    if not ctx.nonzero(t):
        return [ClaimResult("L2.8", VACUOUS, t)]
    ideal = ctx.ideal(t)
    ctx.table(t)
    bad = _check_l28_ideal(ideal, ctx.field, ctx.cap)
    if bad:
        return [_failed("L2.8", ctx, t, **bad)]
    return [ClaimResult("L2.8", HOLDS, t)]


@_guarded(("L2.9",), (2,))
def check_L29(g: Graph, t: int = 2, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Colon/sum bound on ``I_t`` for every variable and every edge monomial."""
    if not ctx.nonzero(t):
        return [ClaimResult("L2.9", VACUOUS, t)]
    ideal = ctx.ideal(t)
    ctx.table(t)
    tested = 0
    for m in [1 << x for x in range(g.n)] + _edge_monomials(g):
        quotient = colon(ideal, m)
        if quotient.is_zero or quotient.is_unit:
            continue
        tested += 1
        bad = _check_l29_ideal(ideal, m, ctx.field, ctx.cap)
        if bad:
            return [_failed("L2.9", ctx, t, **bad)]
    return [ClaimResult("L2.9", HOLDS if tested else VACUOUS, t)]


@_guarded(("T2.11",), (2,))
def check_T211(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Edge ideal has regularity 2 exactly when the complement is chordal."""
    if g.edge_count() == 0:
        raise ValueError("T2.11 needs a graph with at least one edge")
    reg = ctx.reg(2)
    chordal = is_chordal(complement(g))
    if (reg == 2) != chordal:
        return [_failed("T2.11", ctx, 2, reg_I=reg, complement_chordal=chordal)]
    return [ClaimResult("T2.11", HOLDS, 2)]


@_guarded(("T2.13",), (2,))
def check_T213(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Measured linearity steps of the edge ideal match the complement's
    shortest non-triangle induced cycle.

    The measured count indexes Tor of the ideal from 0 (generators), so a
    resolution that is ``p``-linear in the cycle-length sense has ``p - 1``
    measured steps: 2K2 measures 0 against a 4-cycle in its complement.
    """
    if g.edge_count() == 0:
        raise ValueError("T2.13 needs a graph with at least one edge")
    measured = ctx.steps(2)
    predicted = predicted_linearity_steps(g)
    if measured + 1 != predicted:
        return [
            _failed(
                "T2.13", ctx, 2,
                measured_steps=steps_str(measured),
                predicted_p=steps_str(predicted),
            )
        ]
    return [ClaimResult("T2.13", HOLDS, 2)]


# path ideals of gap-free graphs ---------------------------------------------

@_guarded(("L3.1",), (3,))
def check_L31(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    if not ctx.flags.gap_free or not ctx.nonzero(3):
        return [ClaimResult("L3.1", VACUOUS, 3)]
    i3 = ctx.ideal(3)
    for e in _edge_monomials(g):
        q = colon(i3, e)
        if not all(m.bit_count() == 1 for m in q.gens):
            return [_failed("L3.1", ctx, 3, edge=format_monomial(e), colon=format_ideal(q))]
    return [ClaimResult("L3.1", HOLDS, 3)]


@_guarded(("T3.2",), (3,))
def check_T32(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    if not ctx.flags.gap_free or not ctx.nonzero(3):
        return [ClaimResult("T3.2", VACUOUS, 3)]
    r3, r = ctx.reg(3), ctx.reg(2)
    if r3 > max(r, 3):
        return [_failed("T3.2", ctx, 3, reg_I3=r3, reg_I=r)]
    return [ClaimResult("T3.2", HOLDS, 3)]


@_guarded(("L3.3",), (4,))
def check_L33(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Shape of ``(I_4 : xy)``: quadratic, containing every edge disjoint from
    ``xy``, and otherwise only ``uv`` with ``u`` adjacent to one endpoint and
    ``v`` to the other."""
    if not ctx.flags.gap_free or not ctx.nonzero(4):
        return [ClaimResult("L3.3", VACUOUS, 4)]
    i4 = ctx.ideal(4)
    adj = g.adj
    for x, y in g.edges():
        e = (1 << x) | (1 << y)
        q = colon(i4, e)
        bad = None
        if any(m.bit_count() > 2 for m in q.gens):
            bad = "generator of degree > 2"
        disjoint = [f for f in _edge_monomials(g) if not f & e]
        if bad is None:
            missing = [f for f in disjoint if not q.contains(f)]
            if missing:
                bad = f"edge {format_monomial(missing[0])} disjoint from e is not in the colon"
        if bad is None:
            for m in q.gens:
                if m.bit_count() != 2 or m in disjoint:
                    continue
                u, v = iter_bits(m)
                cross = (adj[u] >> x & 1 and adj[v] >> y & 1) or (adj[u] >> y & 1 and adj[v] >> x & 1)
                if not cross:
                    bad = f"generator {format_monomial(m)} is neither a disjoint edge nor a cross pair"
                    break
        if bad:
            return [_failed("L3.3", ctx, 4, edge=format_monomial(e), colon=format_ideal(q), reason=bad)]
    return [ClaimResult("L3.3", HOLDS, 4)]


def colon_graph(ideal: MonomialIdeal) -> Graph:
    """Graph whose edges are the quadratic generators of ``ideal``."""
    return Graph.from_edges(
        ideal.ambient_n, (tuple(iter_bits(m)) for m in ideal.gens if m.bit_count() == 2)
    )


@_guarded(("L3.4", "L3.5"), (4, 4))
def check_L34_L35(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """For each edge ``e``, the graph ``G'`` of ``(I_4 : e)`` is gap-free, and
    each induced cycle of length >= 5 in the complement of ``G'`` is an
    induced cycle of the complement of ``g`` on the same vertices."""
    if not ctx.flags.gap_free or not ctx.nonzero(4):
        return [ClaimResult("L3.4", VACUOUS, 4), ClaimResult("L3.5", VACUOUS, 4)]
    i4 = ctx.ideal(4)
    gc = complement(g)
    r34 = r35 = None
    long_cycles = 0
    for e in _edge_monomials(g):
        q = colon(i4, e)
        gp = colon_graph(q)
        if r34 is None and not is_gap_free(gp):
            r34 = _failed("L3.4", ctx, 4, edge=format_monomial(e), colon=format_ideal(q))
        if r35 is not None or any(m.bit_count() != 2 for m in q.gens):
            continue
        for cyc in induced_cycles(complement(gp)):
            if len(cyc) < 5:
                continue
            long_cycles += 1
            w = sum(1 << v for v in cyc)
            k = len(cyc)
            ok = all(
                gc.has_edge(cyc[a], cyc[b]) == ((b - a) % k in (1, k - 1))
                for a in range(k) for b in range(a + 1, k)
            )
            if not ok:
                r35 = _failed(
                    "L3.5", ctx, 4,
                    edge=format_monomial(e),
                    cycle=list(cyc),
                    complement_edges_on_cycle=induced_subgraph(gc, w).edges(),
                )
                break
    return [
        r34 or ClaimResult("L3.4", HOLDS, 4),
        # with no long induced cycle anywhere there is nothing to map
        r35 or ClaimResult("L3.5", HOLDS if long_cycles else VACUOUS, 4),
    ]


@_guarded(("T3.6",), (4,))
def check_T36(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """If the edge ideal is linear up to step ``p >= 2`` then so is ``I_4``.

    ``p`` is counted as in :func:`check_T213` (one more than the measured
    steps), so the hypothesis is ``measured steps of I >= 1`` and the
    conclusion ``measured steps of I_4 >= measured steps of I``.
    """
    if not ctx.flags.gap_free or not ctx.nonzero(4):
        return [ClaimResult("T3.6", VACUOUS, 4)]
    s = ctx.steps(2)
    if s + 1 < 2:
        return [ClaimResult("T3.6", VACUOUS, 4)]
    s4 = ctx.steps(4)
    if s4 < s:
        return [_failed("T3.6", ctx, 4, steps_I=steps_str(s), steps_I4=steps_str(s4))]
    return [ClaimResult("T3.6", HOLDS, 4)]


@_guarded(("T3.7", "T2.12"), (4, 2))
def check_T37_T212(g: Graph, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Gap-free and cricket-free: ``reg(I) <= 3`` and ``reg(I_4) = 4`` when ``I_4 != 0``."""
    f = ctx.flags
    if not (f.gap_free and f.cricket_free) or not ctx.nonzero(2):
        return [ClaimResult("T3.7", VACUOUS, 4), ClaimResult("T2.12", VACUOUS, 2)]
    r = ctx.reg(2)
    t212 = (
        ClaimResult("T2.12", HOLDS, 2) if r <= 3 else _failed("T2.12", ctx, 2, reg_I=r)
    )
    if not ctx.nonzero(4):
        return [ClaimResult("T3.7", VACUOUS, 4), t212]
    r4 = ctx.reg(4)
    t37 = ClaimResult("T3.7", HOLDS, 4) if r4 == 4 else _failed("T3.7", ctx, 4, reg_I4=r4)
    return [t37, t212]


@_guarded(("L3.8", "L3.9"), (3, 3))
def check_L38_L39(g: Graph, t: int, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Colons of ``I_{t+1}`` by generators of ``I_t`` in gap-free claw-free graphs.

    L3.9: ``(I_{t+1} : e)`` is generated by variables for each generator ``e``.
    L3.8: for distinct generators ``e, f``, ``(e : f)`` is a variable or lies
    in ``(I_{t+1} : f)``.
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    f = ctx.flags
    if not (f.gap_free and f.claw_free) or not ctx.nonzero(t):
        return [ClaimResult("L3.8", VACUOUS, t), ClaimResult("L3.9", VACUOUS, t)]
    it = ctx.ideal(t)
    nxt = ctx.ideal(t + 1) if t + 1 <= g.n else MonomialIdeal(g.n, frozenset())
    gens = it.sorted_gens()
    colons = {e: colon(nxt, e) for e in gens}

    r39 = None
    for e, q in colons.items():
        if not all(m.bit_count() == 1 for m in q.gens):
            r39 = _failed("L3.9", ctx, t, generator=format_monomial(e), colon=format_ideal(q))
            break
    r39 = r39 or ClaimResult("L3.9", HOLDS, t)

    if nxt.is_zero:
        return [ClaimResult("L3.8", VACUOUS, t), r39]
    r38 = None
    for e in gens:
        for f_ in gens:
            if e == f_:
                continue
            m = e & ~f_
            if m.bit_count() == 1 or colons[f_].contains(m):
                continue
            r38 = _failed(
                "L3.8", ctx, t,
                e=format_monomial(e), f=format_monomial(f_),
                e_colon_f=format_monomial(m), colon=format_ideal(colons[f_]),
            )
            break
        if r38:
            break
    return [r38 or ClaimResult("L3.8", HOLDS, t), r39]


@_guarded(("T3.10",), (3,))
def check_T310(g: Graph, t: int, *, ctx: GraphContext | None = None) -> list[ClaimResult]:
    """Gap-free and claw-free: every nonzero ``I_t`` has regularity ``t``."""
    if t < 3:
        raise ValueError("t must be at least 3")
    f = ctx.flags
    if not (f.gap_free and f.claw_free) or not ctx.nonzero(t):
        return [ClaimResult("T3.10", VACUOUS, t)]
    r = ctx.reg(t)
    if r != t:
        return [_failed("T3.10", ctx, t, reg_It=r)]
    return [ClaimResult("T3.10", HOLDS, t)]


# corpus runner -------------------------------------------------------------

@dataclass
class CorpusRecord:
    graph6: str
    props: dict
    ideals: list[dict]
    claims: list[ClaimResult]
    errors: list[str] = field(default_factory=list)
    cache_entries: list[dict] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(c.verdict == FAILED for c in self.claims)

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "props": self.props,
            "ideals": self.ideals,
            "claims": [c.as_dict() for c in self.claims],
            "errors": self.errors,
        }


def evaluate_graph(
    g: Graph,
    t_max: int = 5,
    claims: Iterable[str] = CLAIM_IDS,
    field_spec: FieldSpec = GF2,
    *,
    cap: int | None = DEFAULT_ENGINE_CAP,
    fault: Fault | None = None,
    cache: dict | None = None,
) -> CorpusRecord:
    wanted = set(claims)
    ctx = GraphContext(g, field_spec, cap=cap, fault=fault, cache=cache)
    results: list[ClaimResult] = []
    errors: list[str] = []
    t_top = min(t_max, g.n)

    def run(fn, *args):
        try:
            results.extend(r for r in fn(g, *args, ctx=ctx) if r.claim in wanted)
        except Exception as exc:  # engine errors stay local to the record
            errors.append(f"{fn.__name__}{args}: {type(exc).__name__}: {exc}")

    has_edge = g.edge_count() > 0
    for claim, fn in (("T2.11", check_T211), ("T2.13", check_T213)):
        if claim in wanted:
            if has_edge:
                run(fn)
            else:
                results.append(ClaimResult(claim, VACUOUS, 2))
    if wanted & {"L2.8", "L2.9"}:
        for t in range(2, max(t_top, 2) + 1):
            if "L2.8" in wanted:
                run(check_L28, t)
            if "L2.9" in wanted:
                run(check_L29, t)
    if "L3.1" in wanted:
        run(check_L31)
    if "T3.2" in wanted:
        run(check_T32)
    if "L3.3" in wanted:
        run(check_L33)
    if wanted & {"L3.4", "L3.5"}:
        run(check_L34_L35)
    if "T3.6" in wanted:
        run(check_T36)
    if wanted & {"T3.7", "T2.12"}:
        run(check_T37_T212)
    for t in range(3, t_top + 1):
        if wanted & {"L3.8", "L3.9"}:
            run(check_L38_L39, t)
        if "T3.10" in wanted:
            run(check_T310, t)

    ideals = []
    for t in range(2, t_top + 1):
        try:
            ideals.append(ctx.summary(t))
        except Exception as exc:
            errors.append(f"summary t={t}: {type(exc).__name__}: {exc}")
    return CorpusRecord(
        graph6=ctx.g6,
        props=ctx.flags.as_dict(),
        ideals=ideals,
        claims=results,
        errors=errors,
        cache_entries=ctx.new_cache_entries,
    )


def _evaluate_job(args) -> CorpusRecord:
    g6, t_max, claims, p, cap, fault, cache = args
    from .graph import parse_graph6

    return evaluate_graph(parse_graph6(g6), t_max, claims, FieldSpec(p), cap=cap, fault=fault, cache=cache)


def run_corpus(
    graphs: Iterable[Graph],
    t_max: int = 5,
    claims: Iterable[str] = CLAIM_IDS,
    field_spec: FieldSpec = GF2,
    *,
    jobs: int = 1,
    cap: int | None = DEFAULT_ENGINE_CAP,
    fault: Fault | None = None,
    cache: dict | None = None,
) -> list[CorpusRecord]:
    """Evaluate claims on every graph; records come back in input order."""
    claims = tuple(c for c in CLAIM_IDS if c in set(claims))
    if jobs <= 1:
        return [
            evaluate_graph(g, t_max, claims, field_spec, cap=cap, fault=fault, cache=cache)
            for g in graphs
        ]
    graphs = list(graphs)
    # workers get a read-only snapshot of the cache; new entries flow back in the records
    snapshot = dict(cache) if cache is not None else None
    tasks = [
        (write_graph6(g), t_max, claims, field_spec.p, cap, fault, snapshot) for g in graphs
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        records = list(pool.map(_evaluate_job, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    if cache is not None:
        for rec in records:
            for entry in rec.cache_entries:
                cache[tuple(entry["key"])] = entry["betti"]
    return records


def iter_failures(records: Iterable[CorpusRecord]) -> Iterator[dict]:
    for rec in records:
        for c in rec.claims:
            if c.verdict == FAILED:
                yield c.as_dict()


def summarize(records: list[CorpusRecord], claims: Iterable[str] = CLAIM_IDS) -> dict:
    per_claim = {c: {HOLDS: 0, VACUOUS: 0, FAILED: 0} for c in CLAIM_IDS if c in set(claims)}
    nonvacuous_graphs = {c: set() for c in per_claim}
    for rec in records:
        for c in rec.claims:
            per_claim[c.claim][c.verdict] += 1
            if c.verdict != VACUOUS:
                nonvacuous_graphs[c.claim].add(rec.graph6)
    return {
        "graphs": len(records),
        "failed": sum(rec.failed for rec in records),
        "errors": sum(bool(rec.errors) for rec in records),
        "per_claim": per_claim,
        "nonvacuous_graphs": {c: len(s) for c, s in nonvacuous_graphs.items()},
        "failures": list(iter_failures(records)),
    }


def build_report(records: list[CorpusRecord], config: dict, claims: Iterable[str] = CLAIM_IDS) -> dict:
    return {
        "version": __version__,
        "config": config,
        "summary": summarize(records, claims),
        "records": [rec.as_dict() for rec in records],
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"


# JSONL cache ---------------------------------------------------------------

def load_cache(path: str | Path) -> dict:
    cache: dict = {}
    p = Path(path)
    if not p.exists():
        return cache
    with open(p, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                entry = json.loads(line)
                cache[tuple(entry["key"])] = entry["betti"]
    return cache


class CacheWriter:
    """Appends new cache entries; the only writer of the JSONL file."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def append(self, records: Iterable[CorpusRecord]) -> int:
        lines = [
            json.dumps(entry, sort_keys=True)
            for rec in records
            for entry in rec.cache_entries
        ]
        if lines:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write("\n".join(lines) + "\n")
        return len(lines)
