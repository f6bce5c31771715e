"""Affine GF(2) systems over int bitsets, with provenance tracking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Solution:
    """Either ``x`` (bit ``k`` = variable ``k``) or ``inconsistent`` (a bitset
    of equation indices whose sum reads ``0 = 1``)."""

    x: int | None
    inconsistent: int | None = None


def solve(equations: Sequence[tuple[int, int]], nvars: int) -> Solution:
    """Solve ``sum_{k in mask} x_k = rhs (mod 2)`` for every ``(mask, rhs)``.

    Reduced row echelon form with the lowest-index variable as pivot; free
    variables are set to 0.  Each working row carries the set of original
    equations it is the sum of, so an inconsistent row doubles as a
    certificate.
    """
    rows = [[mask, rhs & 1, 1 << i] for i, (mask, rhs) in enumerate(equations)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(nvars):
        bit = 1 << col
        p = next((i for i in range(r, len(rows)) if rows[i][0] & bit), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pm, prhs, porig = rows[r]
        for i, row in enumerate(rows):
            if i != r and row[0] & bit:
                row[0] ^= pm
                row[1] ^= prhs
                row[2] ^= porig
        pivots.append((col, r))
        r += 1
    for mask, rhs, orig in rows[r:]:
        assert mask == 0
        if rhs:
            return Solution(None, orig)
    x = 0
    for col, i in pivots:
        # free variables are zero, so the pivot takes the right-hand side
        if rows[i][1]:
            x |= 1 << col
    return Solution(x)

