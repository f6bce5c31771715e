"""Deterministic all-versus-nothing verdicts.

``verify_davn`` walks the whole Z-outcome support: for each outcome it
derives the Hardy-like conditions, builds the PCG and decides its
colorability.  The state yields a DAVN proof when every PCG is
un-colorable.

``lhv_consistent_assignments`` is the independent check.  It enumerates
deterministic local hidden-variable assignments ``(z, x)`` and counts those
that reproduce every certain prediction; the conditions it checks are
re-derived from conditional probabilities, not taken from the PCG path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Sequence

import numpy as np

from .coloring import (ColorabilityResult, Pcg, Uncolorable, build_pcg,
                       check_colorable, result_to_dict)
from .hardy import ConditionSet, conditional_probability, derive_conditions
from .state import (Certified, Inconclusive, Outcome, PcgState,
                    certify_nonstabilizer, nonstabilizer_to_dict,
                    outcome_of_mask, outcome_support, outcome_to_bits, qubits_of)

LHV_LIMIT = 12
Constraint = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class OutcomeRecord:
    outcome: Outcome
    probability: Fraction
    conditions: ConditionSet
    pcg: Pcg
    verdict: ColorabilityResult

    @property
    def condition_count(self) -> int:
        return len(self.conditions)

    @property
    def paradox(self) -> bool:
        return isinstance(self.verdict, Uncolorable)

    def to_dict(self) -> dict:
        out = {
            "outcome": outcome_to_bits(self.outcome),
            "probability": str(self.probability),
            "condition_count": self.condition_count,
            "edges": [{"vertices": list(v), "weight": w} for v, w in self.pcg.edges],
            "label": "HLQP paradox" if self.paradox else "no paradox",
        }
        out.update(result_to_dict(self.verdict, self.pcg))
        return out


@dataclass(frozen=True)
class DavnReport:
    state: PcgState
    records: tuple[OutcomeRecord, ...]
    nonstabilizer: Certified | Inconclusive
    lhv_consistent_count: int | None = None

    @property
    def paradox_count(self) -> int:
        return sum(r.paradox for r in self.records)

    @property
    def davn(self) -> bool:
        return self.paradox_count == len(self.records)

    @property
    def success_probability(self) -> Fraction:
        return sum((r.probability for r in self.records if r.paradox), Fraction(0))

    def to_dict(self) -> dict:
        out = {
            "davn": self.davn,
            # unreduced on purpose: "7/7" reads as seven paradoxes out of seven
            "success_probability": f"{self.paradox_count}/{len(self.records)}",
            "nonstabilizer": nonstabilizer_to_dict(self.nonstabilizer),
        }
        if self.lhv_consistent_count is not None:
            out["lhv_consistent_count"] = self.lhv_consistent_count
        out["outcomes"] = [r.to_dict() for r in self.records]
        return out


@dataclass(frozen=True)
class LhvAssignment:
    z: tuple[int, ...]
    x: tuple[int, ...]


@dataclass(frozen=True)
class LhvResult:
    count: int
    samples: tuple[LhvAssignment, ...]


def outcome_record(state: PcgState, outcome: Outcome,
                   conditioned_only: bool = False) -> OutcomeRecord:
    conditions = derive_conditions(state, outcome, conditioned_only)
    pcg = build_pcg(outcome, conditions)
    return OutcomeRecord(outcome, Fraction(1, state.size), conditions, pcg,
                         check_colorable(pcg))


def verify_davn(state: PcgState, conditioned_only: bool = False,
                with_lhv: bool = False, mapper: Callable = map) -> DavnReport:
    """Full DAVN report.  ``mapper`` may be an executor's ``map``; records
    come back in bitstring order either way."""
    outcomes = [o for o, _ in outcome_support(state)]
    work = partial(outcome_record, state, conditioned_only=conditioned_only)
    records = tuple(mapper(work, outcomes))
    lhv = None
    if with_lhv:
        lhv = lhv_consistent_assignments(state, conditioned_only=conditioned_only).count
    return DavnReport(state, records, certify_nonstabilizer(state), lhv)


def success_probability(state: PcgState) -> Fraction:
    return verify_davn(state).success_probability


# -- LHV oracle ----------------------------------------------------------------

def certain_constraints(state: PcgState, z: Sequence[int],
                        conditioned_only: bool = False) -> list[Constraint]:
    """X-product values predicted with certainty once Z reads ``z``.

    Scans every conditioning set and keeps ``(edge, alpha)`` whenever the
    conditional probability is exactly one.
    """
    full = (1 << state.n) - 1
    found = []
    for cond in range(1 << state.n):
        edge_mask = full ^ cond
        if bin(edge_mask).count("1") < 2 or (conditioned_only and cond == 0):
            continue
        conditioning = {q: z[q - 1] for q in qubits_of(cond)}
        edge = qubits_of(edge_mask)
        for alpha in (1, -1):
            if conditional_probability(state, edge, alpha, conditioning) == 1:
                found.append((edge, alpha))
                break
    return found


def count_lhv_assignments(n: int, constraints_by_z: dict[Outcome, Iterable[Constraint]],
                          limit: int | None = None) -> LhvResult:
    """Count ``(z, x)`` with ``z`` among the keys and ``x`` meeting every
    constraint listed for that ``z``."""
    idx = np.arange(1 << n, dtype=np.int64)
    # x enumerated in bitstring order: '0' (+1) first, vertex 1 most significant
    bits = [(idx >> (n - k)) & 1 for k in range(1, n + 1)]
    count = 0
    samples: list[LhvAssignment] = []
    for zmask in range(1 << n):
        z = outcome_of_mask(zmask, n)
        if z not in constraints_by_z:
            continue
        ok = np.ones(1 << n, dtype=bool)
        for edge, alpha in constraints_by_z[z]:
            parity = np.zeros(1 << n, dtype=np.int64)
            for k in edge:
                parity ^= bits[k - 1]
            ok &= parity == (1 if alpha == -1 else 0)
        hits = np.flatnonzero(ok)
        count += int(hits.size)
        if limit is not None and len(samples) < limit:
            for h in hits[: limit - len(samples)]:
                h = int(h)
                x = tuple(-1 if (h >> (n - k)) & 1 else 1 for k in range(1, n + 1))
                samples.append(LhvAssignment(z, x))
    return LhvResult(count, tuple(samples))


def lhv_constraints(state: PcgState, conditioned_only: bool = False) -> dict[Outcome, list[Constraint]]:
    return {o: certain_constraints(state, o, conditioned_only)
            for o, _ in outcome_support(state)}


def lhv_consistent_assignments(state: PcgState, limit: int | None = None,
                               allow_large: bool = False,
                               conditioned_only: bool = False) -> LhvResult:
    """Brute-force count of deterministic LHV assignments matching every
    certain quantum prediction.

    ``z`` must lie in the quantum outcome support; the constraints for ``z``
    are those whose conditioning agrees with ``z`` (all others are vacuous).
    """
    if state.n > LHV_LIMIT and not allow_large:
        raise ValueError(f"LHV enumeration is limited to n <= {LHV_LIMIT} "
                         f"(4^n assignments); got n = {state.n}")
    return count_lhv_assignments(state.n, lhv_constraints(state, conditioned_only), limit)
