import math

import numpy as np
import pytest

from icofridge import fridge
from icofridge.fridge import ReservoirEnsemble, cop, lowest_r, register_entropy, run_cycles, stop_ratio, work_cost


def test_register_entropy_hot_two_channel():
    s = register_entropy(2, 1.0, "ico")
    expected = -(5 / 8) * math.log(5 / 8) - (3 / 8) * math.log(3 / 8)
    assert abs(s - expected) < 1e-15
    assert abs(s - 0.6616) < 1e-4


def test_register_entropy_deterministic_limit():
    # near absolute zero the cooling branch is near-certain
    assert register_entropy(2, 1e-9, "ico") < 1e-6


def test_register_entropy_counts_heating_outcomes_individually():
    n, r = 8, 0.5
    p_c, p_h, *_ = fridge._point("ico", n, 2, r)
    s = register_entropy(n, r, "ico")
    assert abs(s - (-p_c * math.log(p_c) - (n - 1) * p_h * math.log(p_h))) < 1e-15
    # coarse record plus leftover control mixedness reproduces it
    p_heating = (n - 1) * p_h
    coarse = -p_c * math.log(p_c) - p_heating * math.log(p_heating)
    assert abs(s - (coarse + p_heating * math.log(n - 1))) < 1e-12


def test_work_cost():
    assert work_cost(0.0, 2.0) == 0.0
    assert abs(work_cost(math.log(2), 1.0) - math.log(2)) < 1e-15
    assert abs(work_cost(register_entropy(2, 1.0, "ico"), 1.0) - 0.6616) < 1e-4
    with pytest.raises(ValueError):
        work_cost(-0.1, 1.0)


def test_cop_zero_at_stop_point():
    for scheme in ("ico", "cswap", "traj"):
        for n in (2, 4):
            for r in (0.2, 0.5, 0.9):
                r_hot = stop_ratio(n, 2, r, scheme)
                assert abs(cop(n, 2, r, r_hot, 1.0, scheme)) < 1e-10


def test_traj_stop_point_is_infinite_temperature():
    assert abs(stop_ratio(3, 2, 0.4, "traj") - 1.0) < 1e-12


def test_cop_optimal_case_values():
    # optimal case r_hot = r: COP = weighted energy over erasure work
    for scheme in ("ico", "traj"):
        for n in (2, 5):
            r = 0.3
            expected = fridge.weighted_energy_scheme(n, 2, r, scheme) / register_entropy(n, r, scheme)
            assert abs(cop(n, 2, r, r, 1.0, scheme) - expected) < 1e-14


def test_cop_zero_at_infinite_temperature():
    assert cop(2, 2, 1.0, 1.0, 1.0, "ico") == 0.0


def test_cop_nonnegative_in_refrigeration_region():
    for scheme in ("ico", "cswap", "traj"):
        for r in (0.2, 0.6, 0.95):
            for r_hot in np.linspace(0.01, r, 8):
                assert cop(3, 2, r, float(r_hot), 1.0, scheme) >= 0.0


def test_cswap_cop_tripled():
    for n in (2, 3, 7):
        for r in (0.1, 0.5, 0.9):
            ratio = cop(n, 2, r, r, 1.0, "cswap") / cop(n, 2, r, r, 1.0, "ico")
            assert abs(ratio - 3.0) < 1e-9


def test_ico_traj_weighted_energy_agree():
    # the two schemes move the same average heat; the efficiency gain of the
    # trajectory fridge comes from its cheaper register
    for n in (2, 10):
        for r in (0.1, 0.5):
            assert abs(
                fridge.weighted_energy_scheme(n, 2, r, "ico")
                - fridge.weighted_energy_scheme(n, 2, r, "traj")
            ) < 1e-15
            assert register_entropy(n, r, "traj") < register_entropy(n, r, "ico")


def test_lowest_r_closed_forms():
    assert lowest_r("ico", 0.2, 1.0) == 0.0
    assert abs(lowest_r("ico", 0.6, 1e6) - 0.142857) < 1e-3
    assert lowest_r("traj", 0.25, 1.0) == 0.0  # raw value -0.0909 clamps
    for r in (0.3, 0.7, 0.99):
        assert lowest_r("traj", r, 1e6) == 0.0
    assert abs(lowest_r("ico", 1.0, 3.0) - 1.0) < 1e-12
    with pytest.raises(ValueError):
        lowest_r("cswap", 0.5, 1.0)
    with pytest.raises(ValueError):
        lowest_r("ico", 0.5, 0.0)


def test_run_cycles_reaches_absolute_zero_boundary():
    ens = ReservoirEnsemble.from_ratio(1.0, 0.2, n_cold=16)
    trace = run_cycles("ico", ens, n=2, seed=1)
    assert trace.final_r_cold < 1e-3


def test_run_cycles_matches_closed_form():
    for scheme in ("ico", "traj"):
        for k in (0.5, 5.0):
            for r0 in (0.35, 0.75):
                ens = ReservoirEnsemble.from_ratio(k, r0, n_cold=16)
                trace = run_cycles(scheme, ens, n=2, seed=2)
                assert abs(trace.final_r_cold - lowest_r(scheme, r0, k)) < 1e-3


def test_run_cycles_infinite_temperature_is_inert():
    ens = ReservoirEnsemble.from_ratio(1.0, 1.0, n_cold=16)
    trace = run_cycles("ico", ens, n=2, seed=3)
    assert trace.stop_reason == "converged"
    assert abs(trace.final_r_cold - 1.0) < 1e-10


def test_traj_outcools_ico():
    k, r0 = 5.0, 0.8
    cold = {}
    for scheme in ("ico", "traj"):
        ens = ReservoirEnsemble.from_ratio(k, r0, n_cold=16)
        cold[scheme] = run_cycles(scheme, ens, n=2, seed=4).final_r_cold
    assert cold["traj"] < cold["ico"] - 1e-3


def test_first_law_audit():
    for scheme in ("ico", "cswap", "traj"):
        ens = ReservoirEnsemble.from_ratio(2.0, 0.6, n_cold=16)
        trace = run_cycles(scheme, ens, n=3, seed=5, max_cycles=5000)
        assert trace.audit_defect() < 1e-10


def test_run_cycles_budget_stop():
    ens = ReservoirEnsemble.from_ratio(1.0, 0.5, n_cold=16)
    trace = run_cycles("ico", ens, n=2, seed=6, max_cycles=3)
    assert trace.stop_reason == "budget"
    assert len(trace.cycles) == 3


def test_trace_csv_format():
    ens = ReservoirEnsemble.from_ratio(1.0, 0.5, n_cold=16)
    trace = run_cycles("ico", ens, n=2, seed=7, max_cycles=5)
    lines = trace.to_csv().strip().splitlines()
    assert lines[0].startswith("# config: command=cycle scheme=ico")
    assert lines[1] == "cycle,branch,r_cold,r_hot,heat_cold,heat_hot,work,entropy"
    assert len(lines) == 2 + 5


def test_trace_deterministic_given_seed():
    ens = ReservoirEnsemble.from_ratio(1.0, 0.5, n_cold=16)
    a = run_cycles("ico", ens, n=2, seed=8, max_cycles=50)
    b = run_cycles("ico", ens, n=2, seed=8, max_cycles=50)
    assert a.branches == b.branches
    assert a.r_cold == b.r_cold


def test_sampled_branch_frequencies_follow_probabilities():
    ens = ReservoirEnsemble.from_ratio(1.0, 0.9, n_cold=1e12)  # quasi-static
    trace = run_cycles("ico", ens, n=2, seed=9, max_cycles=4000)
    p_c = fridge._point("ico", 2, 2, 0.9)[0]
    freq = trace.branches.count("cooling") / len(trace.branches)
    assert abs(freq - p_c) < 4 * math.sqrt(p_c * (1 - p_c) / len(trace.branches))


def test_ensemble_validation():
    with pytest.raises(ValueError):
        ReservoirEnsemble(n_cold=0, n_hot=1, r_cold=0.5, r_hot=0.5)
    with pytest.raises(ValueError):
        ReservoirEnsemble(n_cold=1, n_hot=1, r_cold=0.0, r_hot=0.5)
    assert ReservoirEnsemble.from_ratio(2.5, 0.5, n_cold=10).k == 2.5


def test_point_validation():
    with pytest.raises(ValueError):
        fridge._point("bogus", 2, 2, 0.5)
    with pytest.raises(ValueError):
        fridge._point("traj", 2, 3, 0.5)
    with pytest.raises(ValueError):
        fridge._point("ico", 1, 2, 0.5)
    with pytest.raises(ValueError):
        fridge._point("ico", 2, 2, 0.0)


def test_qudit_ico_cycle_runs():
    ens = ReservoirEnsemble.from_ratio(2.0, 0.4, n_cold=16)
    trace = run_cycles("ico", ens, n=2, dim=3, seed=10, max_cycles=20_000)
    assert trace.final_r_cold < 0.4
    assert trace.audit_defect() < 1e-10
