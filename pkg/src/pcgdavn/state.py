"""Exact sparse representation of PCG states.

A PCG state on ``n`` qubits is a uniform superposition of computational
basis vectors with ``+1``/``-1`` coefficients.  Each component is stored as
its sign and its *support*, the set of qubits in ``|1>``.  The common factor
``1/sqrt(|I|)`` is never materialised; every probability or marginal that
comes out of this module is a :class:`fractions.Fraction`.

Qubits are labelled ``1..n`` everywhere in the public API.  Internally a
support is also kept as a bitmask with qubit ``k`` on bit ``k - 1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

DEFAULT_MAX_QUBITS = 16

STRICT = "strict"
PAPER_COMPATIBLE = "paper-compatible"
MODES = (STRICT, PAPER_COMPATIBLE)

Assignment = Mapping[int, int]
Outcome = tuple[int, ...]


class StateValidationError(ValueError):
    """Raised when a candidate state breaks one or more PCG invariants."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def max_qubits() -> int:
    """Qubit guard, overridable through ``PCG_MAX_QUBITS``."""
    raw = os.environ.get("PCG_MAX_QUBITS")
    if raw is None:
        return DEFAULT_MAX_QUBITS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"PCG_MAX_QUBITS must be an integer, got {raw!r}") from None


def mask_of(qubits: Iterable[int]) -> int:
    m = 0
    for q in qubits:
        m |= 1 << (q - 1)
    return m


def qubits_of(mask: int) -> tuple[int, ...]:
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class Component:
    """One signed basis vector; ``support`` lists the qubits in ``|1>``."""

    support: tuple[int, ...]
    sign: int = 1

    @property
    def mask(self) -> int:
        return mask_of(self.support)


@dataclass(frozen=True)
class PcgState:
    n: int
    components: tuple[Component, ...]

    @property
    def size(self) -> int:
        """Number of components, ``|I|``."""
        return len(self.components)

    @cached_property
    def signs_by_mask(self) -> dict[int, int]:
        return {c.mask: c.sign for c in self.components}

    @property
    def qubits(self) -> range:
        return range(1, self.n + 1)

    def relabel(self, perm: Mapping[int, int]) -> "PcgState":
        """Return the state with qubit ``q`` renamed to ``perm[q]``."""
        comps = [Component(tuple(sorted(perm[q] for q in c.support)), c.sign)
                 for c in self.components]
        return PcgState(self.n, tuple(sorted(comps)))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": [{"sign": c.sign, "support": list(c.support)}
                           for c in self.components],
        }


@dataclass(frozen=True)
class ResidualState:
    """Unnormalised state left after fixing Z outcomes on some qubits.

    ``total`` is ``|I|`` of the parent state, so the squared norm of the
    residual is ``len(components) / total``.
    """

    fixed: dict[int, int]
    free: tuple[int, ...]
    components: tuple[Component, ...]
    total: int = field(default=1)

    @property
    def norm_squared(self) -> Fraction:
        return Fraction(len(self.components), self.total)

    @property
    def is_empty(self) -> bool:
        return not self.components


@dataclass(frozen=True)
class ReducedDensityMatrix:
    """Single-qubit reduced density matrix with exact rational entries."""

    p00: Fraction
    p01: Fraction
    p10: Fraction
    p11: Fraction

    @property
    def trace(self) -> Fraction:
        return self.p00 + self.p11

    @property
    def is_diagonal(self) -> bool:
        return self.p01 == 0 and self.p10 == 0

    @property
    def is_maximally_mixed(self) -> bool:
        return self.is_diagonal and self.p00 == self.p11 == Fraction(1, 2)

    def rows(self) -> list[list[Fraction]]:
        return [[self.p00, self.p01], [self.p10, self.p11]]

    def __str__(self) -> str:
        if self.is_diagonal:
            return f"diag({self.p00}, {self.p11})"
        return f"[[{self.p00}, {self.p01}], [{self.p10}, {self.p11}]]"


@dataclass(frozen=True)
class Certified:
    qubit: int
    rho: ReducedDensityMatrix

    certified = True


@dataclass(frozen=True)
class Inconclusive:
    reason: str

    certified = False


NOT_FULLY_ENTANGLED = "not fully entangled"
ALL_MAXIMALLY_MIXED = "all single-qubit marginals maximally mixed"


# -- construction and validation ---------------------------------------------

def _raw_components(raw) -> tuple[int, list]:
    if isinstance(raw, PcgState):
        return raw.n, [(c.sign, list(c.support)) for c in raw.components]
    if not isinstance(raw, Mapping):
        raise StateValidationError(["state description must be a mapping with 'n' and 'components'"])
    if "n" not in raw or "components" not in raw:
        raise StateValidationError(["state description needs both 'n' and 'components'"])
    comps = []
    for i, c in enumerate(raw["components"]):
        if isinstance(c, Mapping):
            comps.append((c.get("sign", 1), c.get("support")))
        else:
            try:
                sign, support = c
            except (TypeError, ValueError):
                raise StateValidationError([f"component #{i} is malformed: {c!r}"]) from None
            comps.append((sign, support))
    return raw["n"], comps


def validate_pcg_state(raw, mode: str = STRICT, limit: int | None = None) -> PcgState:
    """Check a candidate description and return its canonical :class:`PcgState`.

    ``raw`` is either a JSON-like mapping ``{"n": .., "components": [{"sign":
    .., "support": [..]}, ..]}`` or an existing :class:`PcgState`.  All
    violations are collected and raised together in a
    :class:`StateValidationError`.

    The pairwise no-containment rule is applied only between nonempty
    supports; the empty support may coexist with anything except a
    singleton.  In ``paper-compatible`` mode the all-ones support
    (``|S| = n``) is allowed.
    """
    if mode not in MODES:
        raise ValueError(f"unknown validation mode {mode!r}")
    n, comps = _raw_components(raw)
    violations: list[str] = []

    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise StateValidationError([f"n must be a positive integer, got {n!r}"])
    if not comps:
        raise StateValidationError(["state has no components"])
    if limit is None:
        limit = max_qubits()
    if n > limit:
        violations.append(f"n = {n} exceeds the qubit guard ({limit}); set PCG_MAX_QUBITS to override")

    parsed: list[Component] = []
    for i, (sign, support) in enumerate(comps):
        label = f"component #{i + 1}"
        if sign not in (1, -1) or isinstance(sign, bool):
            violations.append(f"{label}: sign must be +1 or -1, got {sign!r}")
            sign = 1
        if not isinstance(support, (list, tuple)) or not all(
                isinstance(q, int) and not isinstance(q, bool) for q in support):
            violations.append(f"{label}: support must be a list of integers, got {support!r}")
            continue
        bad = [q for q in support if not 1 <= q <= n]
        if bad:
            violations.append(f"{label}: qubit index out of range 1..{n}: {bad}")
            continue
        if len(set(support)) != len(support):
            violations.append(f"{label}: support {sorted(support)} repeats a qubit")
        supp = tuple(sorted(set(support)))
        if len(supp) == n and mode == STRICT:
            violations.append(f"{label}: support {list(supp)} covers all {n} qubits (|S| < n required)")
        parsed.append(Component(supp, sign))

    seen: dict[tuple[int, ...], int] = {}
    for c in parsed:
        if c.support in seen:
            if seen[c.support] == 1:
                violations.append(f"duplicate support {list(c.support)}")
            seen[c.support] += 1
        else:
            seen[c.support] = 1

    distinct = sorted({c.support for c in parsed if c.support}, key=lambda s: (len(s), s))
    for a, b in combinations(distinct, 2):
        if set(a) <= set(b):
            violations.append(f"containment: support {list(a)} is contained in {list(b)}")
    if () in seen:
        # the empty support is exempt from containment, but next to a
        # singleton it would differ in one qubit and create coherences
        for supp in distinct:
            if len(supp) == 1:
                violations.append(f"empty support and singleton {list(supp)} differ in one qubit")

    if violations:
        raise StateValidationError(violations)
    return PcgState(n, tuple(sorted(parsed)))


def state_from_supports(n: int, components: Iterable[tuple[int, Iterable[int]]],
                        mode: str = STRICT) -> PcgState:
    """Convenience constructor from ``(sign, support)`` pairs."""
    return validate_pcg_state(
        {"n": n, "components": [{"sign": s, "support": list(q)} for s, q in components]},
        mode=mode)


# -- outcomes ----------------------------------------------------------------

def outcome_to_bits(outcome: Sequence[int]) -> str:
    """``+1 -> '0'`` and ``-1 -> '1'``, qubit 1 first."""
    return "".join("0" if m == 1 else "1" for m in outcome)


def bits_to_outcome(bits: str) -> Outcome:
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"outcome must be a nonempty bitstring of 0/1, got {bits!r}")
    return tuple(1 if b == "0" else -1 for b in bits)


def outcome_of_mask(mask: int, n: int) -> Outcome:
    return tuple(-1 if mask >> k & 1 else 1 for k in range(n))


def mask_of_outcome(outcome: Sequence[int]) -> int:
    return mask_of(k + 1 for k, m in enumerate(outcome) if m == -1)


def outcome_support(state: PcgState) -> list[tuple[Outcome, Fraction]]:
    """All Z outcomes with nonzero probability, in bitstring order."""
    p = Fraction(1, state.size)
    outs = [outcome_of_mask(c.mask, state.n) for c in state.components]
    outs.sort(key=outcome_to_bits)
    return [(o, p) for o in outs]


def project_z(state: PcgState, fixed: Assignment) -> ResidualState:
    """Post-select on the Z values in ``fixed`` (qubit -> +1/-1)."""
    fixed = dict(fixed)
    for q, v in fixed.items():
        if not 1 <= q <= state.n:
            raise ValueError(f"qubit {q} out of range 1..{state.n}")
        if v not in (1, -1):
            raise ValueError(f"Z value for qubit {q} must be +1 or -1, got {v!r}")
    fixed_mask = mask_of(fixed)
    ones = mask_of(q for q, v in fixed.items() if v == -1)
    free = tuple(q for q in state.qubits if q not in fixed)
    comps = tuple(
        Component(tuple(q for q in c.support if q not in fixed), c.sign)
        for c in state.components
        if c.mask & fixed_mask == ones
    )
    return ResidualState(dict(sorted(fixed.items())), free, comps, state.size)


# -- marginals and entanglement -------------------------------------------------

def reduced_density(state: PcgState, qubit: int) -> ReducedDensityMatrix:
    """Exact partial trace onto ``qubit``.

    Off-diagonal terms come from pairs of components that differ on
    ``qubit`` alone; they are computed, not assumed away.
    """
    if not 1 <= qubit <= state.n:
        raise ValueError(f"qubit {qubit} out of range 1..{state.n}")
    bit = 1 << (qubit - 1)
    signs = state.signs_by_mask
    zeros = sum(1 for m in signs if not m & bit)
    coherence = sum(s * signs[m | bit] for m, s in signs.items()
                    if not m & bit and (m | bit) in signs)
    total = state.size
    off = Fraction(coherence, total)
    return ReducedDensityMatrix(Fraction(zeros, total), off, off,
                                Fraction(total - zeros, total))


def rational_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals by Gaussian elimination on Fractions."""
    work = [[Fraction(x) for x in r] for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        p = work[rank]
        for r in range(rank + 1, len(work)):
            f = work[r][col] / p[col]
            if f:
                work[r] = [a - f * b for a, b in zip(work[r], p)]
        rank += 1
        if rank == len(work):
            break
    return rank


def bipartition_rank(state: PcgState, part_a: Iterable[int]) -> int:
    """Schmidt rank of the state across ``part_a`` versus the rest."""
    a_mask = mask_of(part_a)
    full = (1 << state.n) - 1
    if a_mask == 0 or a_mask & ~full or a_mask == full:
        raise ValueError("part_a must be a nonempty proper subset of the qubits")
    b_mask = full & ~a_mask
    row_ix: dict[int, int] = {}
    col_ix: dict[int, int] = {}
    entries = []
    for m, s in state.signs_by_mask.items():
        r = row_ix.setdefault(m & a_mask, len(row_ix))
        c = col_ix.setdefault(m & b_mask, len(col_ix))
        entries.append((r, c, s))
    matrix = [[0] * len(col_ix) for _ in row_ix]
    for r, c, s in entries:
        matrix[r][c] = s
    return rational_rank(matrix)


def is_fully_entangled(state: PcgState) -> bool:
    """True when every bipartition has Schmidt rank above one."""
    if state.n < 2:
        return False
    # fixing qubit 1 on side A enumerates each bipartition once
    rest = state.n - 1
    for sub in range(1 << rest):
        a_mask = 1 | (sub << 1)
        if a_mask == (1 << state.n) - 1:
            continue
        if bipartition_rank(state, qubits_of(a_mask)) == 1:
            return False
    return True


def certify_nonstabilizer(state: PcgState) -> Certified | Inconclusive:
    """Non-stabilizer certificate: full entanglement plus a biased marginal.

    A fully entangled stabilizer state has every single-qubit marginal equal
    to ``I/2``, so one marginal that differs is a certificate.
    :class:`Inconclusive` does not mean the state *is* a stabilizer state.
    """
    if not is_fully_entangled(state):
        return Inconclusive(NOT_FULLY_ENTANGLED)
    for q in state.qubits:
        rho = reduced_density(state, q)
        if not rho.is_maximally_mixed:
            return Certified(q, rho)
    return Inconclusive(ALL_MAXIMALLY_MIXED)


def nonstabilizer_to_dict(result: Certified | Inconclusive) -> dict:
    if isinstance(result, Certified):
        return {
            "certified": True,
            "qubit": result.qubit,
            "rho": [[str(x) for x in row] for row in result.rho.rows()],
        }
    return {"certified": False, "reason": result.reason}
