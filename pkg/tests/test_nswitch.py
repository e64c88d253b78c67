import json

import numpy as np
import pytest

from icofridge import nswitch, thermal
from icofridge.nswitch import OrderSet, SwitchOutput, branch_stats, qudit_branch_stats, switch_bruteforce, switch_closed_form, weighted_energy
from icofridge.qmat import dagger
from icofridge.thermal import ThermalSpec


def gibbs(r, dim=2):
    return thermal.gibbs_state(ThermalSpec.degenerate(dim, r))


def matpow(t, k):
    return np.linalg.matrix_power(t, k)


# ---------------------------------------------------------------------------
# order sets
# ---------------------------------------------------------------------------


def test_cyclic_order_set():
    oset = OrderSet.cyclic(4)
    assert oset.orders == ((1, 2, 3, 4), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3))
    assert oset.is_latin_square()


def test_order_set_validation():
    with pytest.raises(ValueError):
        OrderSet(orders=((1, 2), (2, 2)))
    with pytest.raises(ValueError):
        OrderSet(orders=())


def test_order_set_json_round_trip():
    oset = nswitch.noncyclic_order_set(4)
    assert OrderSet.from_json(oset.to_json()) == oset


# ---------------------------------------------------------------------------
# closed form
# ---------------------------------------------------------------------------


def test_closed_form_two_channels_structure():
    r = 0.3
    t = gibbs(r)
    out = switch_closed_form(2, t, t)
    t3 = matpow(t, 3)
    assert np.max(np.abs(out.block(0, 0) - t / 2)) < 1e-15
    assert np.max(np.abs(out.block(1, 1) - t / 2)) < 1e-15
    assert np.max(np.abs(out.block(0, 1) - t3 / 2)) < 1e-15
    assert np.max(np.abs(out.block(1, 0) - t3 / 2)) < 1e-15


def test_closed_form_three_channels_offdiagonals():
    t = gibbs(0.5)
    out = switch_closed_form(3, t, t)
    t3 = matpow(t, 3)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert np.max(np.abs(out.block(i, j) - t3 / 3)) < 1e-15


def test_closed_form_maximally_mixed():
    t = np.eye(2, dtype=complex) / 2
    out = switch_closed_form(4, t, t)
    for i in range(4):
        for j in range(4):
            want = t / 4 if i == j else np.eye(2) / 8 / 4
            assert np.max(np.abs(out.block(i, j) - want)) < 1e-15


def test_closed_form_unit_trace_hermitian():
    t = gibbs(0.2)
    out = switch_closed_form(5, t, t)
    assert abs(np.trace(out.joint).real - 1.0) < 1e-14
    assert np.max(np.abs(out.joint - dagger(out.joint))) < 1e-14


# ---------------------------------------------------------------------------
# brute force oracle
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("dim", [2, 3])
@pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
def test_bruteforce_matches_closed_form(n, dim, r):
    spec = ThermalSpec.degenerate(dim, r)
    t = thermal.gibbs_state(spec)
    bf = switch_bruteforce(OrderSet.cyclic(n), t, spec)
    cf = switch_closed_form(n, t, t)
    assert np.max(np.abs(bf.joint - cf.joint)) < 1e-10


def test_bruteforce_arbitrary_working_state():
    rng = np.random.default_rng(0)
    spec = ThermalSpec.qubit(0.35)
    t = thermal.gibbs_state(spec)
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    rho = m @ dagger(m)
    rho /= np.trace(rho).real
    bf = switch_bruteforce(OrderSet.cyclic(3), rho, spec)
    cf = switch_closed_form(3, rho, t)
    assert np.max(np.abs(bf.joint - cf.joint)) < 1e-10


def test_bruteforce_reproduces_two_channel_form():
    spec = ThermalSpec.qubit(0.3)
    t = thermal.gibbs_state(spec)
    out = switch_bruteforce(OrderSet(orders=((1, 2), (2, 1))), t, spec)
    t3 = matpow(t, 3)
    assert np.max(np.abs(out.block(0, 1) - t3 / 2)) < 1e-12


def test_bruteforce_diagonal_blocks_fully_thermalized():
    spec = ThermalSpec.qubit(0.45)
    rng = np.random.default_rng(1)
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    rho = m @ dagger(m)
    rho /= np.trace(rho).real
    t = thermal.gibbs_state(spec)
    out = switch_bruteforce(nswitch.noncyclic_order_set(3), rho, spec)
    for i in range(3):
        assert np.max(np.abs(out.block(i, i) - t / 3)) < 1e-12


def test_noncyclic_three_channels_gives_t_cubed():
    for r in (0.3, 0.8):
        spec = ThermalSpec.qubit(r)
        t = thermal.gibbs_state(spec)
        out = switch_bruteforce(nswitch.noncyclic_order_set(3), t, spec)
        assert nswitch.offdiagonal_blocks_equal(out)
        t3 = matpow(t, 3)
        for i in range(3):
            for j in range(3):
                if i != j:
                    assert np.max(np.abs(out.block(i, j) - t3 / 3)) < 1e-10


def test_noncyclic_four_channels_gives_t_fifth():
    for r in (0.3, 0.7):
        spec = ThermalSpec.qubit(r)
        t = thermal.gibbs_state(spec)
        out = switch_bruteforce(nswitch.noncyclic_order_set(4), t, spec)
        assert nswitch.offdiagonal_blocks_equal(out)
        t5 = matpow(t, 5)
        for i in range(4):
            for j in range(4):
                if i != j:
                    assert np.max(np.abs(out.block(i, j) - t5 / 4)) < 1e-10


def test_latin_square_offdiagonals_pairwise_equal():
    # the pinned order-set families yield one common off-diagonal block
    # (not every Latin square does; see noncyclic_order_set)
    spec = ThermalSpec.qubit(0.6)
    t = thermal.gibbs_state(spec)
    for oset in (OrderSet.cyclic(3), nswitch.noncyclic_order_set(3), nswitch.noncyclic_order_set(4)):
        assert oset.is_latin_square()
        out = switch_bruteforce(oset, t, spec)
        assert nswitch.offdiagonal_blocks_equal(out)


def test_bruteforce_budget_guard():
    spec = ThermalSpec.qubit(0.5)
    t = thermal.gibbs_state(spec)
    with pytest.raises(ValueError, match="budget"):
        switch_bruteforce(OrderSet.cyclic(12), t, spec)


# ---------------------------------------------------------------------------
# branch statistics
# ---------------------------------------------------------------------------


def test_branch_probability_hot_limit():
    stats = branch_stats(2, ThermalSpec.qubit(1.0))
    assert abs(stats.p_heating_total - 0.375) < 1e-15


def test_infinite_temperature_branches_are_maximally_mixed():
    for n in (2, 5):
        stats = branch_stats(n, ThermalSpec.qubit(1.0))
        assert np.max(np.abs(stats.rho_h - np.eye(2) / 2)) < 1e-15
        assert np.max(np.abs(stats.rho_c - np.eye(2) / 2)) < 1e-15
        de_h, _ = weighted_energy(n, 2, 1.0)
        assert abs(de_h) < 1e-15


def test_many_reservoirs_low_temperature():
    # direct trace evaluation: p_H = 0.99 * tr(T - T^3) at r = 0.1
    stats = branch_stats(100, ThermalSpec.qubit(0.1))
    t = gibbs(0.1)
    expected = 0.99 * float(np.trace(t - matpow(t, 3)).real)
    assert abs(stats.p_heating_total - expected) < 1e-14
    assert abs(stats.p_heating_total - 0.245455) < 1e-6
    assert abs(stats.p_c - 0.754545) < 1e-6


def test_probability_closure_across_grid():
    for n in (2, 3, 10, 100):
        for r in (0.05, 0.5, 1.0):
            stats = branch_stats(n, ThermalSpec.qubit(r))
            assert abs(stats.p_c + (n - 1) * stats.p_h - 1.0) < 1e-12


def test_heating_branch_independent_of_n():
    for r in (0.1, 0.5, 0.9):
        spec = ThermalSpec.qubit(r)
        ref = branch_stats(2, spec).rho_h
        for n in (3, 10, 1000):
            assert np.max(np.abs(branch_stats(n, spec).rho_h - ref)) < 1e-12


def test_qudit_reduces_to_qubit():
    for n in (2, 7):
        for r in (0.2, 0.9):
            a = qudit_branch_stats(n, 2, r)
            b = branch_stats(n, ThermalSpec.qubit(r))
            assert abs(a.p_c - b.p_c) < 1e-15
            assert np.max(np.abs(a.rho_h - b.rho_h)) < 1e-15


def test_qudit_low_temperature_asymptote():
    r = 1e-4
    stats = qudit_branch_stats(2, 3, r)
    approx = 3 * (2 - 1) / 2 * (3 - 1) * r
    assert abs(stats.p_heating_total / approx - 1.0) < 0.01


def test_qudit_improvement_factor():
    r = 1e-4
    base = weighted_energy(2, 2, r)[0]
    for dim, n in ((3, 2), (5, 10), (10, 2)):
        factor = weighted_energy(n, dim, r)[0] / base
        ideal = 2 * (dim - 1) * (n - 1) / n
        assert abs(factor / ideal - 1.0) < 0.05


def test_weighted_energy_value():
    # r(1-r) / (2 (1+r)^3) at r = 0.5 is 1/27
    de_h, de_c = weighted_energy(2, 2, 0.5)
    assert abs(de_h - 1.0 / 27.0) < 1e-15
    assert de_c == -de_h


def test_weighted_energy_doubling():
    for r in (0.1, 0.3, 0.5):
        ratio = weighted_energy(10**6, 2, r)[0] / weighted_energy(2, 2, r)[0]
        assert 1.99 <= ratio <= 2.0


def test_switch_output_marginals():
    # control marginal is uniform, target marginal is the Gibbs state: the
    # switch moves no energy on average, only the measurement sorts it
    from icofridge import qmat

    for n, r in ((2, 0.3), (4, 0.8)):
        t = gibbs(r)
        out = switch_closed_form(n, t, t)
        target = qmat.partial_trace(out.joint, (n, 2), {1})
        assert np.max(np.abs(target - t)) < 1e-12
        control = qmat.partial_trace(out.joint, (n, 2), {0})
        assert np.max(np.abs(np.diag(control) - 1.0 / n)) < 1e-12


def test_energy_bookkeeping_from_branches():
    # branch-averaged working-system energy equals the thermal input energy
    for n in (2, 4):
        for r in (0.2, 0.7):
            spec = ThermalSpec.qubit(r)
            stats = branch_stats(n, spec)
            h = thermal.hamiltonian(spec)
            avg = stats.p_c * thermal.mean_energy(stats.rho_c, h) + stats.p_heating_total * thermal.mean_energy(stats.rho_h, h)
            assert abs(avg - thermal.mean_energy(gibbs(r), h)) < 1e-12


def test_switch_output_json_round_trip():
    t = gibbs(0.4)
    out = switch_closed_form(3, t, t)
    again = SwitchOutput.from_json(out.to_json())
    assert again.control_dim == 3 and again.target_dim == 2
    assert np.max(np.abs(again.joint - out.joint)) == 0.0
    parsed = json.loads(out.to_json())
    assert set(parsed) == {"control_dim", "target_dim", "re", "im"}
