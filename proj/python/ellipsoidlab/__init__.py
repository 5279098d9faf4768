"""Compactness measures of l^2 ellipsoids.

Counting functions and type-tau integrals of semi-axis sequences,
metric-entropy bounds, the exact Pinsker linear minimax risk with its
linear-to-nonlinear bracket, Sobolev/Weyl spectral asymptotics, and a
reproducible Monte Carlo validator for the Gaussian sequence model.
"""

from ._core import (
    BoxDomain,
    EllipsoidError,
    EntropyBounds,
    IntegralMethod,
    IntegralResult,
    MseEstimate,
    PinskerSolution,
    RiskBracket,
    SemiAxisModel,
    SimConfig,
    SobolevPrediction,
    SobolevRiskPrediction,
    SpectralConstants,
    WeylOrder,
    analytic_mse,
    chi_r,
    critical_radius,
    densify,
    dirichlet_eigenvalue_count,
    dirichlet_eigenvalues,
    empirical_mse,
    entropy_estimate,
    entropy_lower_bound,
    exact_entropy_single_axis,
    integral_exact,
    integral_quadrature,
    lambert_w,
    linear_minimax_risk,
    linear_risk_variational,
    merge_truncated,
    mityagin_bounds,
    nonlinear_risk_bracket,
    pinsker_constant,
    pinsker_weights,
    predict_bias_variance,
    predict_critical_radius,
    predict_entropy,
    predict_entropy_multi_term,
    predict_linear_risk,
    predict_risk_two_term,
    psi,
    riesz_mean,
    riesz_mean_prediction,
    run_verify_suite,
    sobolev_entropy_prediction,
    sobolev_risk_prediction,
    sobolev_semi_axes,
    transfer_residual,
    unit_ball_volume,
    weyl_counting,
    worst_case_vector,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
