"""Hardy-like conditions of a PCG state.

A Hardy-like condition says that, once Z is measured on a set of qubits and
the results match the observed outcome, the product of X over the remaining
qubits (the *edge*) takes the value ``alpha`` with certainty.  Post-selection
and the X-product test are both done exactly on the sparse component list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .state import (Assignment, Outcome, PcgState, ResidualState, mask_of,
                    mask_of_outcome, outcome_to_bits, project_z, qubits_of)


class ZeroProbabilityError(ValueError):
    """The conditioning event (or outcome) never occurs for this state."""


@dataclass(frozen=True)
class HardyCondition:
    """``P(prod_{k in edge} X_k = alpha | Z on witness) = 1``.

    ``witnesses`` holds every conditioning (as sorted ``(qubit, value)``
    pairs) from which the condition was derived.
    """

    edge: tuple[int, ...]
    alpha: int
    witnesses: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def conditioning(self) -> dict[int, int]:
        return dict(self.witnesses[0])

    def describe(self) -> str:
        xs = "".join(f"X{k}" for k in self.edge)
        zs = ",".join(f"Z{q}={v:+d}" for q, v in self.witnesses[0]) or "-"
        return f"P({xs}={self.alpha:+d} | {zs}) = 1"


@dataclass(frozen=True)
class ConditionSet:
    state: PcgState
    outcome: Outcome
    conditions: tuple[HardyCondition, ...]

    def __len__(self) -> int:
        return len(self.conditions)

    def edges(self) -> dict[tuple[int, ...], int]:
        return {c.edge: c.alpha for c in self.conditions}

    def to_dict(self) -> dict:
        return {
            "outcome": outcome_to_bits(self.outcome),
            "conditions": [
                {
                    "edge": list(c.edge),
                    "alpha": c.alpha,
                    "witnesses": [{str(q): v for q, v in w} for w in c.witnesses],
                }
                for c in self.conditions
            ],
        }


def _sign_table(residual: ResidualState) -> dict[int, int]:
    return {c.mask: c.sign for c in residual.components}


def x_product_eigenvalue(residual: ResidualState, edge: Iterable[int]) -> int | None:
    """Eigenvalue of ``prod_{k in edge} X_k`` on ``residual``, or None.

    Flipping the edge bits must map the component set onto itself with
    every sign multiplied by the same ``alpha``.
    """
    if residual.is_empty:
        raise ZeroProbabilityError("conditioning event has probability zero")
    edge = tuple(edge)
    if not set(edge) <= set(residual.free):
        raise ValueError(f"edge {list(edge)} is not within the free qubits {list(residual.free)}")
    e = mask_of(edge)
    if e == 0:
        return 1
    signs = _sign_table(residual)
    alpha = None
    for m, s in signs.items():
        partner = signs.get(m ^ e)
        if partner is None:
            return None
        ratio = partner * s
        if alpha is None:
            alpha = ratio
        elif ratio != alpha:
            return None
    return alpha


def _popcount(x: int) -> int:
    return bin(x).count("1")


def derive_conditions(state: PcgState, outcome: Sequence[int],
                      conditioned_only: bool = False) -> ConditionSet:
    """Every Hardy-like condition that holds with certainty for ``outcome``.

    Conditioning sets range over all subsets whose complement (the edge) has
    at least two qubits.  The unconditioned case (edge = all qubits) is
    included unless ``conditioned_only`` is set.
    """
    outcome = tuple(outcome)
    if len(outcome) != state.n:
        raise ValueError(f"outcome has length {len(outcome)}, state has {state.n} qubits")
    if mask_of_outcome(outcome) not in state.signs_by_mask:
        raise ZeroProbabilityError(f"outcome {outcome_to_bits(outcome)} has probability zero")
    full = (1 << state.n) - 1
    found: dict[tuple[int, ...], tuple[int, list]] = {}
    for cond_mask in range(1 << state.n):
        edge_mask = full ^ cond_mask
        if _popcount(edge_mask) < 2:
            continue
        if conditioned_only and cond_mask == 0:
            continue
        conditioning = {q: outcome[q - 1] for q in qubits_of(cond_mask)}
        residual = project_z(state, conditioning)
        edge = qubits_of(edge_mask)
        alpha = x_product_eigenvalue(residual, edge)
        if alpha is None:
            continue
        witness = tuple(sorted(conditioning.items()))
        if edge in found:
            prev, witnesses = found[edge]
            assert prev == alpha, f"edge {edge} derived with both signs"
            witnesses.append(witness)
        else:
            found[edge] = (alpha, [witness])
    conditions = tuple(HardyCondition(edge, alpha, tuple(ws))
                       for edge, (alpha, ws) in sorted(found.items()))
    return ConditionSet(state, outcome, conditions)


def conditional_probability(state: PcgState, edge: Iterable[int], alpha: int,
                            conditioning: Assignment) -> Fraction:
    """``P(prod_{k in edge} X_k = alpha | conditioning)`` as an exact fraction."""
    if alpha not in (1, -1):
        raise ValueError(f"alpha must be +1 or -1, got {alpha!r}")
    edge = tuple(edge)
    if set(edge) & set(conditioning):
        raise ValueError("edge and conditioning qubits must be disjoint")
    residual = project_z(state, conditioning)
    if residual.is_empty:
        raise ZeroProbabilityError("conditioning event has probability zero")
    e = mask_of(edge)
    signs = _sign_table(residual)
    overlap = sum(s * signs[m ^ e] for m, s in signs.items() if (m ^ e) in signs)
    expectation = Fraction(overlap, len(signs))
    return (1 + alpha * expectation) / 2


def joint_z_probability(state: PcgState, outcome: Sequence[int]) -> Fraction:
    if len(outcome) != state.n:
        raise ValueError(f"outcome has length {len(outcome)}, state has {state.n} qubits")
    if mask_of_outcome(outcome) in state.signs_by_mask:
        return Fraction(1, state.size)
    return Fraction(0)
