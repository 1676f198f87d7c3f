import math

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from spacetime_born.physics.energy_field import NODE_EPSILON, evaluate_field, pointwise_energy, two_state_pointwise
from spacetime_born.physics.models import Superposition, TwoStateSpec
from spacetime_born.physics.well import eigen_function

PI2 = math.pi**2


@pytest.mark.parametrize("n", [1, 2, 5])
def test_eigenstate_energy_is_constant(n):
    s = Superposition.from_pairs([(n, 1.0)])
    x = np.linspace(0.0, 1.0, 100)
    t = np.linspace(0.0, 2.0, 100)

    energy, psi_sq = evaluate_field(s, x, t)

    assert energy.shape == (100, 100)
    defined = ~np.isnan(energy)
    np.testing.assert_array_equal(defined, psi_sq >= NODE_EPSILON)
    # Only the wall columns are nodes on this grid
    assert defined.sum() == 98 * 100
    np.testing.assert_allclose(energy[defined], n * n * PI2, rtol=1e-10)


def test_pointwise_energy_eigenstate():
    sample = pointwise_energy(Superposition.from_pairs([(3, 1.0)]), 0.1, 0.7)
    assert sample.defined
    assert sample.value == pytest.approx(9 * PI2, rel=1e-10)


@pytest.mark.parametrize("x, t", [(0.5, 0.0), (0.0, 0.3), (1.0, 1.2)])
def test_pointwise_energy_undefined_at_nodes(x, t):
    sample = pointwise_energy(Superposition.from_pairs([(2, 1.0)]), x, t)
    assert not sample.defined
    assert sample.psi_sq < NODE_EPSILON


@pytest.mark.parametrize("t", [0.0, 0.1, 0.37, 1.9])
def test_two_states_at_node_of_second(equal_pair, t):
    sample = pointwise_energy(equal_pair, 0.5, t)
    assert sample.defined
    assert sample.value == pytest.approx(PI2, rel=1e-10)


def test_two_states_with_equal_amplitudes(equal_pair):
    sample = pointwise_energy(equal_pair, 1.0 / 3.0, 0.0)
    assert sample.value == pytest.approx(2.5 * PI2, rel=1e-10)


def test_energy_is_not_bounded_by_eigenvalues(equal_pair):
    # Near a node of psi the field leaves [e1, e2]
    energy, _ = evaluate_field(equal_pair, np.linspace(0.01, 0.99, 99), np.linspace(0.0, 2.0 / (3.0 * math.pi), 64))
    defined = energy[~np.isnan(energy)]
    assert defined.min() < PI2 or defined.max() > 4 * PI2


def test_two_state_pointwise_identities():
    e1, e2 = PI2, 4 * PI2
    assert two_state_pointwise(e1, e2, 0.7, 0.7, 0.3).value == pytest.approx(0.5 * (e1 + e2))
    for phase in (0.0, 1.0, 2.5):
        assert two_state_pointwise(e1, e2, 0.9, 0.0, phase).value == pytest.approx(e1)
    assert two_state_pointwise(5.0, 5.0, 0.4, 1.3, 0.8).value == pytest.approx(5.0)


def test_two_state_pointwise_undefined():
    assert not two_state_pointwise(1.0, 2.0, 0.0, 0.0, 0.3).defined
    # f = g with opposite phase cancels psi exactly
    sample = two_state_pointwise(1.0, 2.0, 1.0, 1.0, math.pi)
    assert not sample.defined
    assert sample.psi_sq < NODE_EPSILON


@given(
    n1=st.integers(min_value=1, max_value=5),
    n2=st.integers(min_value=1, max_value=5),
    p=st.floats(min_value=0.05, max_value=0.95),
    x=st.floats(min_value=0.01, max_value=0.99),
    t=st.floats(min_value=0.0, max_value=0.2),
)
@settings(max_examples=200, deadline=None)
def test_closed_form_matches_general_field(n1, n2, p, x, t):
    assume(n1 != n2)
    spec = TwoStateSpec(n1=n1, n2=n2, p=p)
    e1, e2 = spec.energy_pair()
    f = spec.c1 * eigen_function(n1, x)
    g = spec.c2 * eigen_function(n2, x)

    general = pointwise_energy(spec.superposition(), x, t)
    closed = two_state_pointwise(e1, e2, f, g, (e2 - e1) * t)

    assume(general.defined and closed.defined and general.psi_sq > 0.1)
    assert general.value == pytest.approx(closed.value, rel=1e-9, abs=1e-8 * e2)
    assert general.psi_sq == pytest.approx(closed.psi_sq, rel=1e-9)


@given(
    factor=st.sampled_from([-4.0, -0.5, 0.25, 2.0, 8.0]),
    x=st.floats(min_value=0.0, max_value=1.0),
    t=st.floats(min_value=0.0, max_value=3.0),
)
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_field_is_scale_invariant(three_state, factor, x, t):
    sample = pointwise_energy(three_state, x, t)
    scaled = pointwise_energy(three_state.scaled(factor), x, t)
    if sample.defined and scaled.defined:
        assert scaled.value == pytest.approx(sample.value, rel=1e-12)
