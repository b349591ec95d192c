"""Exact matrix rank over GF(p) and the rationals.

Sparse rows are dicts ``{column: value}``; GF(2) rows are int bitmasks.
"""

from __future__ import annotations

from math import gcd


def rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = row
                break
            row ^= piv
    return len(pivots)


def rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[col]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def rank_rational(rows: list[dict[int, int]]) -> int:
    """Fraction-free elimination over the integers; each reduced row is
    divided by the gcd of its entries to keep coefficients small."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                break
            a, b = piv[col], row[col]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            if new:
                d = 0
                for v in new.values():
                    d = gcd(d, v)
                if d > 1:
                    new = {c: v // d for c, v in new.items()}
            row = new
    return len(pivots)
