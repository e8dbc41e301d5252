import math

import pytest

import ramansim as rs


def test_distributions():
    fock = rs.fock_dist(5)
    assert fock.n_max == 5
    assert fock.weights[5] == 1.0
    assert fock.tail_bound == 0.0

    coh = rs.coherent_dist(10.5)
    assert coh.n_max == 40
    assert coh.weight_sum() >= 1.0 - 1e-12
    assert abs(coh.mean_occupation() - 10.5) < 1e-9

    th = rs.thermal_dist(1.0)
    assert th.weights[0] == pytest.approx(0.5, abs=1e-15)

    with pytest.raises(ValueError):
        rs.coherent_dist(1.0, 2.0)


def test_point_observables():
    params = rs.ModelParams(r=1.023, delta_over_g1=10.0)
    assert rs.rabi_frequency(0, 0, rs.ModelParams(r=1.0)) == pytest.approx(0.05, abs=1e-15)

    w0 = rs.atomic_inversion(rs.fock_dist(5), rs.coherent_dist(5.0), params, 0.0)
    assert w0 == -1.0
    assert rs.negativity(5, 5.0, params, 0.0) == 0.0
    assert rs.linear_entropy(5, 5.0, params, 0.0) == 0.0

    k = rs.evolution_coeffs(1, 0, rs.ModelParams(r=1.0), 5 * math.pi)
    assert abs(k.k1) < 1e-14
    assert abs(abs(k.k2) - 1.0) < 1e-14


def test_negativity_against_numpy_partial_transpose():
    np = pytest.importorskip("numpy")
    params = rs.ModelParams(r=1.023, delta_over_g1=10.0)
    N = 5
    for tau in (7.0, 31.0, 55.5):
        state = rs.reduced_atom_mode1(N, 5.0, params, tau)
        # two-branch atom-mode1 state embedded in C^2 (x) C^(N+1)
        d = N + 1
        rho = np.zeros((2 * d, 2 * d), complex)
        rho[N, N] = state.pop_1n
        rho[d + N - 1, d + N - 1] = state.pop_2nm1
        rho[N, d + N - 1] = state.coherence
        rho[d + N - 1, N] = np.conj(state.coherence)
        pt = rho.reshape(2, d, 2, d).transpose(2, 1, 0, 3).reshape(2 * d, 2 * d)
        evals = np.linalg.eigvalsh(pt)
        reference = -evals[evals < 0].sum()
        assert rs.negativity(N, 5.0, params, tau) == pytest.approx(reference, abs=1e-12)


def test_semiclassical():
    rp = math.sqrt(2.0)
    period = rs.semiclassical_period(2, rp)
    assert rs.semiclassical_inversion(2, rp, period / 2) == pytest.approx(1.0, abs=1e-12)
    assert rs.semiclassical_negativity(2, rp, period / 4) == pytest.approx(0.5, abs=1e-12)
    assert rs.semiclassical_negativity(2, rp, period / 2) <= 1e-12
    with pytest.raises(ValueError):
        rs.semiclassical_negativity(0, 1.0, 1.0)


def test_run_scenario_and_presets():
    assert set(rs.preset_names()) == {"fig1a", "fig1b", "fig2", "fig3a", "fig3b", "fig4"}
    scenario = rs.preset_scenario("fig2")
    scenario.steps = 32
    series = rs.run_scenario(scenario)
    assert len(series.tau) == 32
    inversion = series.columns["inversion"]
    assert inversion[0] == -1.0
    assert all(-1.0 <= w <= 1.0 for w in inversion)

    bad = rs.preset_scenario("fig3a")
    bad.mode2 = rs.PrepSpec("thermal:5")
    with pytest.raises(ValueError):
        rs.run_scenario(bad)


def test_verify_scenario():
    scenario = rs.Scenario()
    scenario.mode1 = rs.PrepSpec("fock:2")
    scenario.mode2 = rs.PrepSpec("coherent:1.5")
    scenario.ratio = 1.1
    scenario.steps = 120
    scenario.observables = [
        rs.ObservableKind.inversion,
        rs.ObservableKind.negativity,
        rs.ObservableKind.linear_entropy,
    ]
    report = rs.verify_scenario(scenario)
    assert report.ok()
    assert report.worst() < 1e-9
    assert {e.observable for e in report.entries} == {
        "inversion",
        "negativity",
        "linear-entropy",
    }

    with pytest.raises(rs.TruncationError):
        rs.verify_scenario(scenario, 0, 2)


def test_detect_revivals():
    tau = [0.05 * i for i in range(1500)]
    values = [math.sin(t) for t in tau]
    times = rs.detect_revivals(tau, values, 40)
    assert len(times) >= 8
    spacing = [b - a for a, b in zip(times, times[1:])]
    assert max(spacing) - min(spacing) < 0.2
    with pytest.raises(ValueError):
        rs.detect_revival_indices([1.0, 2.0], 10)
