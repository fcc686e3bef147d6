#pragma once

#include <vector>

#include "fracgreen/operator_spec.hpp"
#include "fracgreen/power_series.hpp"

namespace fracgreen {

/// Truncation control for the Neumann iterations. Convergence is declared
/// when a whole layer's coefficient-weight bound on the window
/// [target_T/10, target_T] drops below tail_tol (layer sums are the
/// convergent unit of the series; a per-term rule would stop too early).
struct TruncationPolicy {
    int max_layers = 40;
    double target_T = 1.0;
    double tail_tol = 1e-10;
    bool use_majorant = true;  // also evaluate the Mittag-Leffler majorant
};

/// Truncated Neumann series for an initial value problem, with the individual
/// layers kept for diagnostics. layers[0] is the leading term (homogeneous
/// case) or the order-0 iterate (particular case); series is their sum.
struct SeriesSolution {
    GeneralizedPowerSeries series;
    std::vector<GeneralizedPowerSeries> layers;
    bool converged = false;
    double tail_bound = 0.0;  // weight bound of the last computed layer
    double majorant = 0.0;    // Mittag-Leffler majorant at target_T (0 if not requested)
};

/// Same for the Green's function series in (t, tau).
struct GreenSolution {
    BivariatePowerSeries series;
    std::vector<BivariatePowerSeries> layers;
    bool converged = false;
    double tail_bound = 0.0;
    double majorant = 0.0;
};

/// Homogeneous solution with unit highest initial condition:
///   y = t^{a0-1}/Gamma(a0)
///       + sum_k (-1)^{k+1} I^{a0} [sum_h a_h I^{a0-a_h}]^k sum_h a_h t^{a0-a_h-1}/Gamma(a0-a_h),
/// built exactly in the power algebra. Requires polynomial coefficients.
SeriesSolution homogeneous_solution(const OperatorSpec& op, const TruncationPolicy& policy);

/// Particular solution of L y = h with zero initial conditions, for a
/// right-hand side that is a power sum (exponents > -1):
///   y = sum_k (-1)^k I^{a0} [sum_h a_h I^{a0-a_h}]^k h.
SeriesSolution particular_solution(const OperatorSpec& op, const GeneralizedPowerSeries& rhs,
                                   const TruncationPolicy& policy);

/// Green's function series with origin tau:
///   G(t,tau) = (t-tau)^{a0-1}/Gamma(a0)
///              + sum_k (-1)^{k+1} I^{a0}_{tau+} [sum_h a_h(t) I^{a0-a_h}_{tau+}]^k
///                sum_h a_h(t) (t-tau)^{a0-a_h-1}/Gamma(a0-a_h),
/// with polynomial coefficients re-expanded about tau at every application.
GreenSolution greens_function(const OperatorSpec& op, const TruncationPolicy& policy);

/// Constant-coefficient closed form (multi-index series); equals
/// t^{a0-1} * E_{(a0-a1,..,a0-am),a0}(-A_1 t^{a0-a1}, .., -A_m t^{a0-am}).
double constant_coeff_solution(const OperatorSpec& op, double t);

/// The same value reorganized through derivatives of the two-parameter
/// Mittag-Leffler function:
///   y(t) = sum_l ((-1)^l / prod beta_i!) prod A_i^{beta_i}
///          * t^{(a0-a1) l + a0 + c - 1} * E^{(l)}_{a0-a1, a0+c}(-A_1 t^{a0-a1}),
/// c = sum_{j>=2} (a1-aj) beta_j over compositions beta_2+..+beta_m = l.
/// Requires m >= 1 and constant coefficients.
double constant_coeff_solution_ml(const OperatorSpec& op, double t);

/// Green's function of a constant-coefficient operator: the closed form is
/// translation invariant, G(t, tau) = constant_coeff_solution at t - tau.
double constant_coeff_green(const OperatorSpec& op, double t, double tau);

/// The convergence majorant: with A_h = max_{[0,T]} |a_h|, returns
/// E_{(a0-a1,..,a0-am),1}(A_1 T^{a0-a1}, .., A_m T^{a0-am}); 1 for m = 0.
/// Polynomial coefficients get an exact critical-point scan, sampled ones a
/// grid scan.
double majorant_bound(const OperatorSpec& op, double T);

}  // namespace fracgreen
