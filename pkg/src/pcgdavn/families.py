"""Named PCG states.

``phi_n`` is ``|0...0> - (all weight-2 basis vectors)`` on ``n >= 4``
qubits; ``phi_2n3`` is ``|0...0> - (all weight-(2n+2) basis vectors)`` on
``2n + 3`` qubits.  The ``fig1*`` states are small negative controls whose
condition groups are colorable (``fig1c`` is the un-colorable loop).
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .state import PAPER_COMPATIBLE, PcgState, state_from_supports

NAMES = ("ghz3", "phi4", "phi4_prime", "phi4_double_prime", "phi_n", "phi5",
         "phi_2n3", "fig1a", "fig1b", "fig1c")
PARAMETRIC = {"phi_n": 4, "phi_2n3": 1}


def phi_n(n: int) -> PcgState:
    if n < 4:
        raise ValueError(f"phi_n needs n >= 4, got {n}")
    comps = [(1, ())] + [(-1, pair) for pair in combinations(range(1, n + 1), 2)]
    state = state_from_supports(n, comps, mode=PAPER_COMPATIBLE)
    assert state.size == comb(n, 2) + 1
    return state


def phi_2n3(n: int) -> PcgState:
    if n < 1:
        raise ValueError(f"phi_2n3 needs n >= 1, got {n}")
    q = 2 * n + 3
    everyone = range(1, q + 1)
    comps = [(1, ())] + [(-1, tuple(k for k in everyone if k != i)) for i in everyone]
    return state_from_supports(q, comps, mode=PAPER_COMPATIBLE)


_FIXED = {
    "ghz3": (3, [(1, ()), (-1, (2, 3)), (-1, (1, 3)), (-1, (1, 2))]),
    "phi4_prime": (4, [(1, ()), (-1, (2, 4)), (-1, (2, 3)), (-1, (1, 4)),
                       (-1, (1, 3)), (-1, (1, 2))]),
    "phi4_double_prime": (4, [(1, ()), (1, (2, 4)), (1, (2, 3)), (1, (1, 4)),
                              (1, (1, 3)), (-1, (1, 2))]),
    "fig1a": (3, [(1, (3,)), (1, (2,)), (-1, (1,))]),
    "fig1b": (4, [(1, ()), (-1, (1, 2, 4)), (1, (3, 4))]),
    "fig1c": (3, [(1, ()), (1, (2, 3)), (-1, (1, 3)), (1, (1, 2))]),
}


def generate(name: str, parameter: int | None = None) -> PcgState:
    """Build the named state; ``parameter`` applies to ``phi_n`` and ``phi_2n3``."""
    if name not in NAMES:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(NAMES)}")
    if name in PARAMETRIC:
        k = PARAMETRIC[name] if parameter is None else parameter
        return phi_n(k) if name == "phi_n" else phi_2n3(k)
    if parameter is not None:
        raise ValueError(f"family {name!r} takes no parameter")
    if name == "phi4":
        return phi_n(4)
    if name == "phi5":
        return phi_2n3(1)
    n, comps = _FIXED[name]
    return state_from_supports(n, comps, mode=PAPER_COMPATIBLE)
