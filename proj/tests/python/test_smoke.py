"""Smoke tests for the ellipsoidlab extension module."""

import math

import pytest

import ellipsoidlab as el


def test_model_basics():
    m = el.SemiAxisModel.polynomial(1.0, 1.0)
    assert m.semi_axis(5) == pytest.approx(0.2)
    assert m.counting_function(0.3) == 3
    assert m.max_semi_axis() == pytest.approx(1.0)
    assert m.truncate_at(0.3) == pytest.approx([1.0, 0.5, 1.0 / 3.0])
    assert m.elasticity_index == 1.0


def test_model_json_round_trip():
    m = el.SemiAxisModel.from_json('{"kind": "explicit", "values": [1, 0.5, 0.25]}')
    assert m.counting_function(0.5) == 2
    again = el.SemiAxisModel.from_json(m.to_json())
    assert again.counting_function(0.5) == 2
    with pytest.raises(el.EllipsoidError):
        el.SemiAxisModel.from_json('{"kind": "nope"}')


def test_integrals_and_entropy():
    one = el.SemiAxisModel.explicit_axes([1.0])
    assert el.integral_exact(one, 1.0, 0.5).value == pytest.approx(math.log(2.0))
    assert el.integral_exact(one, 2.0, 0.5).value == pytest.approx(1.0)
    q = el.integral_quadrature(one, 2.0, 0.5, 1e-10)
    assert q.value == pytest.approx(1.0, abs=1e-9)
    assert q.method == el.IntegralMethod.quadrature

    lo, hi = el.mityagin_bounds(one, 0.4)
    assert lo == pytest.approx(math.log(2.5))
    assert hi == pytest.approx(math.log(5.0) + 2.0 * math.log(2.0))
    assert el.exact_entropy_single_axis(1.0, 0.4) == pytest.approx(math.log(3.0))


def test_risk_closed_form():
    one = el.SemiAxisModel.explicit_axes([1.0])
    sol = el.linear_minimax_risk(one, 1.0)
    assert sol.linear_risk == pytest.approx(0.5, rel=1e-10)
    assert sol.critical_radius == pytest.approx(0.5, rel=1e-10)
    assert sol.bracket_high == sol.linear_risk
    assert el.linear_risk_variational(one, 1.0) == pytest.approx(0.5, rel=1e-8)
    assert el.pinsker_weights(one, 1.0, 1) == pytest.approx([0.5])
    assert el.lambert_w(math.e) == pytest.approx(1.0, abs=1e-14)


def test_predictions():
    poly = el.SemiAxisModel.polynomial(1.0, 1.0)
    assert el.predict_entropy(poly, 0.01) == pytest.approx(100.0)
    ratio = el.linear_minimax_risk(poly, 1e-3).linear_risk / el.predict_linear_risk(
        poly, 1e-3
    )
    assert 0.95 < ratio < 1.05
    assert el.predict_critical_radius(poly, 1e-3) == pytest.approx(
        (1e-6 / 6.0) ** (1.0 / 3.0)
    )


def test_sobolev_spectrum():
    box = el.BoxDomain([1.0])
    evs = el.dirichlet_eigenvalues(box, 50.0)
    assert evs == pytest.approx([math.pi**2, 4 * math.pi**2])
    axes = el.sobolev_semi_axes(box, 1, 1e-3)
    assert axes.semi_axis(1) == pytest.approx(1.0 / math.sqrt(1.0 + math.pi**2))
    assert el.pinsker_constant(1) == pytest.approx(
        3.0 ** (1 / 3) * (2 * math.pi) ** (-2 / 3)
    )
    assert el.weyl_counting(
        el.BoxDomain([1.0, 1.0]), 1e5, el.WeylOrder.one_term
    ) == pytest.approx(1e5 / (4 * math.pi))


def test_simulation_reproducible():
    m = el.SemiAxisModel.explicit_axes([1.0])
    config = el.SimConfig()
    config.sigma = 1.0
    config.trials = 5000
    config.seed = 42
    config.n_trunc = 9
    x = el.densify(el.worst_case_vector(m, 1.0), 9)
    a = el.empirical_mse(m, 1.0, x, config)
    b = el.empirical_mse(m, 1.0, x, config)
    assert a.mean == b.mean
    assert a.std_error == b.std_error
    assert abs(a.mean - a.analytic) < 5 * a.std_error
