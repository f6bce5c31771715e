from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pcgdavn.families import generate
from pcgdavn.state import (ALL_MAXIMALLY_MIXED, NOT_FULLY_ENTANGLED, PAPER_COMPATIBLE,
                           Certified, Component, Inconclusive, PcgState,
                           StateValidationError, bipartition_rank, bits_to_outcome,
                           certify_nonstabilizer, outcome_support, outcome_to_bits,
                           project_z, reduced_density, state_from_supports,
                           validate_pcg_state)

from conftest import pcg_states
from oracles import partial_trace, schmidt_rank


def raw(n, comps):
    return {"n": n, "components": [{"sign": s, "support": list(q)} for s, q in comps]}


class TestValidate:
    def test_ghz3_valid(self):
        s = validate_pcg_state(raw(3, [(1, ()), (-1, (2, 3)), (-1, (1, 3)), (-1, (1, 2))]))
        assert s.size == 4
        assert [c.support for c in s.components] == [(), (1, 2), (1, 3), (2, 3)]

    def test_containment(self):
        with pytest.raises(StateValidationError) as exc:
            validate_pcg_state(raw(4, [(1, (1, 2)), (1, (1, 2, 3))]))
        assert exc.value.violations == ["containment: support [1, 2] is contained in [1, 2, 3]"]

    def test_duplicate(self):
        with pytest.raises(StateValidationError) as exc:
            validate_pcg_state(raw(3, [(1, (1, 2)), (1, (1, 2))]))
        assert exc.value.violations == ["duplicate support [1, 2]"]

    def test_full_support_strict_only(self):
        with pytest.raises(StateValidationError) as exc:
            validate_pcg_state(raw(3, [(1, (1, 2, 3))]))
        assert "covers all 3 qubits" in exc.value.violations[0]
        s = validate_pcg_state(raw(3, [(1, (1, 2, 3))]), mode=PAPER_COMPATIBLE)
        assert s.components == (Component((1, 2, 3), 1),)

    def test_ghz_with_all_ones_paper_compatible(self):
        s = validate_pcg_state(raw(3, [(1, ()), (1, (1, 2, 3))]), mode=PAPER_COMPATIBLE)
        assert s.size == 2

    def test_out_of_range(self):
        with pytest.raises(StateValidationError) as exc:
            validate_pcg_state(raw(2, [(1, (0, 3))]))
        assert "out of range" in exc.value.violations[0]

    def test_collects_every_violation(self):
        with pytest.raises(StateValidationError) as exc:
            validate_pcg_state(raw(3, [(1, (1,)), (1, (1,)), (2, (1, 2)), (1, (1, 2, 3))]))
        v = exc.value.violations
        assert any("sign" in x for x in v)
        assert any("duplicate" in x for x in v)
        assert any("covers all" in x for x in v)
        assert sum("containment" in x for x in v) >= 2

    def test_empty_support_is_exempt(self, phi4):
        assert () in [c.support for c in phi4.components]

    def test_empty_support_beside_singleton(self):
        with pytest.raises(StateValidationError) as exc:
            validate_pcg_state(raw(2, [(1, ()), (1, (1,))]))
        assert exc.value.violations == ["empty support and singleton [1] differ in one qubit"]

    def test_guard(self, monkeypatch):
        big = raw(17, [(1, ())])
        with pytest.raises(StateValidationError, match="qubit guard"):
            validate_pcg_state(big)
        monkeypatch.setenv("PCG_MAX_QUBITS", "20")
        assert validate_pcg_state(big).n == 17

    def test_rejects_nonsense(self):
        with pytest.raises(StateValidationError):
            validate_pcg_state({"n": 0, "components": [{"sign": 1, "support": []}]})
        with pytest.raises(StateValidationError):
            validate_pcg_state({"n": 2, "components": []})
        with pytest.raises(StateValidationError):
            validate_pcg_state([1, 2])

    def test_canonical_round_trip(self):
        s = validate_pcg_state(raw(3, [(-1, (3, 2)), (1, ()), (-1, (2, 1))]))
        d = s.to_dict()
        assert d["components"][1] == {"sign": -1, "support": [1, 2]}
        assert validate_pcg_state(d).to_dict() == d


def test_bitstrings():
    assert bits_to_outcome("0110") == (1, -1, -1, 1)
    assert outcome_to_bits((1, -1, -1, 1)) == "0110"
    with pytest.raises(ValueError):
        bits_to_outcome("012")


class TestOutcomes:
    def test_ghz3(self, ghz3):
        out = outcome_support(ghz3)
        assert [outcome_to_bits(o) for o, _ in out] == ["000", "011", "101", "110"]
        assert all(p == Fraction(1, 4) for _, p in out)

    def test_phi4(self, phi4):
        out = outcome_support(phi4)
        assert len(out) == 7 and {p for _, p in out} == {Fraction(1, 7)}

    def test_single_component(self):
        s = state_from_supports(2, [(1, ())])
        assert outcome_support(s) == [((1, 1), Fraction(1))]


class TestProject:
    def test_z1_plus(self, ghz3):
        r = project_z(ghz3, {1: 1})
        assert r.free == (2, 3)
        assert r.components == (Component((), 1), Component((2, 3), -1))
        assert r.norm_squared == Fraction(1, 2)

    def test_z1_minus(self, ghz3):
        r = project_z(ghz3, {1: -1})
        assert sorted(r.components) == [Component((2,), -1), Component((3,), -1)]

    def test_empty(self, ghz3):
        assert project_z(ghz3, {1: -1, 2: -1, 3: -1}).is_empty


class TestReducedDensity:
    def test_phi4(self, phi4):
        rho = reduced_density(phi4, 1)
        assert (rho.p00, rho.p11) == (Fraction(4, 7), Fraction(3, 7))
        assert rho.is_diagonal

    def test_phi5(self, phi5):
        rho = reduced_density(phi5, 2)
        assert (rho.p00, rho.p11) == (Fraction(1, 3), Fraction(2, 3))

    def test_ghz3(self, ghz3):
        assert reduced_density(ghz3, 1).is_maximally_mixed

    def test_coherence_when_components_differ_in_one_qubit(self):
        # not a PCG state: |00> + |01> has a containment, so off-diagonals appear
        s = PcgState(2, (Component((), 1), Component((2,), 1)))
        rho = reduced_density(s, 2)
        assert rho.rows() == partial_trace(s, 2)
        assert rho.p01 == Fraction(1, 2)


class TestRank:
    def test_ghz3(self, ghz3):
        assert bipartition_rank(ghz3, {1}) == 2

    def test_product(self):
        s = state_from_supports(3, [(1, ()), (-1, (2, 3))])
        assert bipartition_rank(s, {1}) == 1

    def test_phi4(self, phi4):
        # frozen from the sympy oracle
        assert bipartition_rank(phi4, {1, 2}) == 3

    def test_bad_partition(self, ghz3):
        with pytest.raises(ValueError):
            bipartition_rank(ghz3, set())
        with pytest.raises(ValueError):
            bipartition_rank(ghz3, {1, 2, 3})


class TestCertify:
    def test_phi4(self, phi4):
        r = certify_nonstabilizer(phi4)
        assert isinstance(r, Certified) and r.qubit == 1
        assert (r.rho.p00, r.rho.p11) == (Fraction(4, 7), Fraction(3, 7))

    def test_ghz3(self, ghz3):
        assert certify_nonstabilizer(ghz3) == Inconclusive(ALL_MAXIMALLY_MIXED)

    def test_phi5(self, phi5):
        r = certify_nonstabilizer(phi5)
        assert r.qubit == 1 and (r.rho.p00, r.rho.p11) == (Fraction(1, 3), Fraction(2, 3))

    def test_single_component(self):
        s = state_from_supports(3, [(1, (1,))])
        assert certify_nonstabilizer(s) == Inconclusive(NOT_FULLY_ENTANGLED)


@settings(max_examples=150, deadline=None)
@given(pcg_states())
def test_outcome_probabilities_exact(state):
    out = outcome_support(state)
    assert len(out) == state.size
    assert all(p == Fraction(1, state.size) for _, p in out)
    assert sum(p for _, p in out) == 1
    for o, _ in out:
        assert len(project_z(state, dict(enumerate(o, start=1))).components) == 1


@settings(max_examples=150, deadline=None)
@given(pcg_states())
def test_reduced_density_matches_dense_partial_trace(state):
    for q in state.qubits:
        rho = reduced_density(state, q)
        assert rho.rows() == partial_trace(state, q)
        assert rho.trace == 1
        assert rho.is_diagonal
        zeros = sum(1 for c in state.components if q not in c.support)
        assert rho.p00 == Fraction(zeros, state.size)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.sampled_from((1, -1)), st.sets(st.integers(1, n))),
             min_size=1, max_size=6))))
def test_every_accepted_state_has_diagonal_marginals(candidate):
    n, comps = candidate
    try:
        state = validate_pcg_state(raw(n, comps), mode=PAPER_COMPATIBLE)
    except StateValidationError:
        assume(False)
    for q in state.qubits:
        assert reduced_density(state, q).is_diagonal


@settings(max_examples=100, deadline=None)
@given(pcg_states(max_n=5))
def test_rank_matches_sympy_and_is_symmetric(state):
    everyone = set(state.qubits)
    for a_mask in range(1, (1 << state.n) - 1):
        a = [q for q in state.qubits if a_mask >> (q - 1) & 1]
        r = bipartition_rank(state, a)
        assert r == schmidt_rank(state, a)
        assert r == bipartition_rank(state, everyone - set(a))


@settings(max_examples=100, deadline=None)
@given(pcg_states())
def test_single_component_never_certified(state):
    single = PcgState(state.n, state.components[:1])
    assert not certify_nonstabilizer(single).certified
