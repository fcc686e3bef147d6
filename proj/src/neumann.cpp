#include "fracgreen/neumann.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracgreen/errors.hpp"
#include "fracgreen/special_functions.hpp"

namespace fracgreen {

namespace {

void require_polynomial(const OperatorSpec& op, const char* who) {
    if (!op.all_polynomial())
        throw std::invalid_argument(std::string(who) +
                                    ": all coefficients must be polynomial for the symbolic path");
}

double coefficient_bound(const Coefficient& c, double T) {
    if (c.is_polynomial()) return c.poly->max_abs_on(0.0, T);
    constexpr int kScan = 4096;
    double best = 0.0;
    for (int i = 0; i <= kScan; ++i) {
        const double t = T * i / kScan;
        best = std::max(best, std::abs(c(t)));
    }
    return best;
}

double evaluate_majorant(const OperatorSpec& op, double T) {
    if (op.m() == 0) return 1.0;
    MLParams params;
    std::vector<double> z;
    for (int h = 1; h <= op.m(); ++h) {
        const double gap = op.alpha0() - op.order(h);
        params.alphas.push_back(gap);
        z.push_back(coefficient_bound(op.coeff(h), T) * std::pow(T, gap));
    }
    params.beta = 1.0;
    return ml_multivariate(params, z);
}

// sum_h a_h(t) * I^{a0-a_h} applied to a univariate series (origin 0)
GeneralizedPowerSeries apply_operator_once(const OperatorSpec& op,
                                           const GeneralizedPowerSeries& v) {
    GeneralizedPowerSeries out;
    for (int h = 1; h <= op.m(); ++h)
        out += poly_multiply(rl_integral(v, op.alpha0() - op.order(h)), *op.coeff(h).poly);
    return out;
}

BivariatePowerSeries apply_operator_once(const OperatorSpec& op,
                                         const BivariatePowerSeries& v) {
    BivariatePowerSeries out;
    for (int h = 1; h <= op.m(); ++h)
        out += bi_poly_multiply(bi_rl_integral(v, op.alpha0() - op.order(h)), *op.coeff(h).poly);
    return out;
}

}  // namespace

SeriesSolution homogeneous_solution(const OperatorSpec& op, const TruncationPolicy& policy) {
    require_polynomial(op, "homogeneous_solution");
    const double a0 = op.alpha0();

    SeriesSolution result;
    GeneralizedPowerSeries leading(0.0, {{1.0 / gamma(a0), a0 - 1.0}});
    result.layers.push_back(leading);
    result.series = leading;
    if (policy.use_majorant) result.majorant = evaluate_majorant(op, policy.target_T);

    // w_0 = sum_h a_h(t) t^{a0-a_h-1}/Gamma(a0-a_h)
    GeneralizedPowerSeries w;
    for (int h = 1; h <= op.m(); ++h) {
        const double gap = a0 - op.order(h);
        GeneralizedPowerSeries seed(0.0, {{1.0 / gamma(gap), gap - 1.0}});
        w += poly_multiply(seed, *op.coeff(h).poly);
    }
    if (w.empty()) {  // m = 0 or identically zero coefficients
        result.converged = true;
        return result;
    }

    double sign = -1.0;  // (-1)^{k+1} starting at k = 0
    for (int k = 0; k < policy.max_layers; ++k) {
        GeneralizedPowerSeries increment = rl_integral(w, a0) * sign;
        result.layers.push_back(increment);
        result.series += increment;
        result.tail_bound = increment.window_sup_bound(policy.target_T);
        if (result.tail_bound < policy.tail_tol) {
            result.converged = true;
            return result;
        }
        w = apply_operator_once(op, w);
        sign = -sign;
    }
    return result;  // converged stays false; tail_bound reports the last layer
}

SeriesSolution particular_solution(const OperatorSpec& op, const GeneralizedPowerSeries& rhs,
                                   const TruncationPolicy& policy) {
    require_polynomial(op, "particular_solution");
    if (rhs.origin() != 0.0)
        throw std::invalid_argument("particular_solution: rhs must have origin 0");
    const double a0 = op.alpha0();

    SeriesSolution result;
    if (policy.use_majorant) result.majorant = evaluate_majorant(op, policy.target_T);
    if (rhs.empty()) {
        result.converged = true;
        return result;
    }

    GeneralizedPowerSeries v = rhs;
    double sign = 1.0;  // (-1)^k starting at k = 0
    for (int k = 0; k < policy.max_layers; ++k) {
        GeneralizedPowerSeries increment = rl_integral(v, a0) * sign;
        result.layers.push_back(increment);
        result.series += increment;
        result.tail_bound = increment.window_sup_bound(policy.target_T);
        if (result.tail_bound < policy.tail_tol) {
            result.converged = true;
            return result;
        }
        if (op.m() == 0) {  // D^{a0} alone: y = I^{a0} h exactly
            result.converged = true;
            return result;
        }
        v = apply_operator_once(op, v);
        sign = -sign;
    }
    return result;
}

GreenSolution greens_function(const OperatorSpec& op, const TruncationPolicy& policy) {
    require_polynomial(op, "greens_function");
    const double a0 = op.alpha0();

    GreenSolution result;
    BivariatePowerSeries leading({{1.0 / gamma(a0), 0, a0 - 1.0}});
    result.layers.push_back(leading);
    result.series = leading;
    if (policy.use_majorant) result.majorant = evaluate_majorant(op, policy.target_T);

    BivariatePowerSeries w;
    for (int h = 1; h <= op.m(); ++h) {
        const double gap = a0 - op.order(h);
        BivariatePowerSeries seed({{1.0 / gamma(gap), 0, gap - 1.0}});
        w += bi_poly_multiply(seed, *op.coeff(h).poly);
    }
    if (w.empty()) {
        result.converged = true;
        return result;
    }

    double sign = -1.0;
    for (int k = 0; k < policy.max_layers; ++k) {
        BivariatePowerSeries increment = bi_rl_integral(w, a0) * sign;
        result.layers.push_back(increment);
        result.series += increment;
        result.tail_bound = increment.window_sup_bound(policy.target_T);
        if (result.tail_bound < policy.tail_tol) {
            result.converged = true;
            return result;
        }
        w = apply_operator_once(op, w);
        sign = -sign;
    }
    return result;
}

double constant_coeff_solution(const OperatorSpec& op, double t) {
    if (!op.all_constant())
        throw std::invalid_argument("constant_coeff_solution: coefficients must be constant");
    if (!(t > 0.0)) throw std::domain_error("constant_coeff_solution: t must be positive");
    const double a0 = op.alpha0();
    if (op.m() == 0) return std::pow(t, a0 - 1.0) / gamma(a0);

    MLParams params;
    std::vector<double> z;
    for (int h = 1; h <= op.m(); ++h) {
        const double gap = a0 - op.order(h);
        const double A = (*op.coeff(h).poly)(0.0);
        params.alphas.push_back(gap);
        z.push_back(-A * std::pow(t, gap));
    }
    params.beta = a0;
    return std::pow(t, a0 - 1.0) * ml_multivariate(params, z);
}

double constant_coeff_solution_ml(const OperatorSpec& op, double t) {
    if (!op.all_constant())
        throw std::invalid_argument("constant_coeff_solution_ml: coefficients must be constant");
    if (op.m() < 1)
        throw std::invalid_argument("constant_coeff_solution_ml: needs at least one lower term");
    if (!(t > 0.0)) throw std::domain_error("constant_coeff_solution_ml: t must be positive");

    const double a0 = op.alpha0();
    const double a1 = op.order(1);
    const double A1 = (*op.coeff(1).poly)(0.0);
    const int rest = op.m() - 1;  // number of beta_2..beta_m slots
    const double z1 = -A1 * std::pow(t, a0 - a1);

    if (rest == 0)
        return std::pow(t, a0 - 1.0) * ml_two_param_deriv(a0 - a1, a0, 0, z1);

    std::vector<double> logA(static_cast<size_t>(rest));
    std::vector<double> signA(static_cast<size_t>(rest));
    for (int j = 0; j < rest; ++j) {
        const double A = (*op.coeff(j + 2).poly)(0.0);
        logA[static_cast<size_t>(j)] = A == 0.0 ? 0.0 : std::log(std::abs(A));
        signA[static_cast<size_t>(j)] = A < 0.0 ? -1.0 : 1.0;
    }

    constexpr int kMaxL = 1000;
    long double sum = 0.0L;
    int small_streak = 0;
    for (int l = 0; l < kMaxL; ++l) {
        long double layer = 0.0L;
        for_each_composition(l, rest, [&](const std::vector<int>& beta) {
            double c = 0.0;       // sum_{j>=2} (a1 - a_j) beta_j
            double logmag = 0.0;  // log of prod A_i^{beta_i} / prod beta_i!
            double sign = (l % 2 == 0) ? 1.0 : -1.0;
            for (int j = 0; j < rest; ++j) {
                const int bj = beta[static_cast<size_t>(j)];
                if (bj == 0) continue;
                const double A = (*op.coeff(j + 2).poly)(0.0);
                if (A == 0.0) {
                    sign = 0.0;
                    return;
                }
                c += (a1 - op.order(j + 2)) * bj;
                logmag += bj * logA[static_cast<size_t>(j)] -
                          log_abs_gamma(static_cast<double>(bj) + 1.0);
                if (bj % 2 == 1 && signA[static_cast<size_t>(j)] < 0.0) sign = -sign;
            }
            const double texp = (a0 - a1) * l + a0 + c - 1.0;
            const double ml = ml_two_param_deriv(a0 - a1, a0 + c, l, z1);
            layer += static_cast<long double>(sign * std::exp(logmag + texp * std::log(t)) * ml);
        });
        sum += layer;
        if (std::abs(static_cast<double>(layer)) <
            1e-16 * (1.0 + std::abs(static_cast<double>(sum)))) {
            if (++small_streak >= 3) return static_cast<double>(sum);
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("constant_coeff_solution_ml: no convergence within " +
                           std::to_string(kMaxL) + " layers");
}

double constant_coeff_green(const OperatorSpec& op, double t, double tau) {
    if (!(t > tau) || !(tau >= 0.0))
        throw std::domain_error("constant_coeff_green: requires t > tau >= 0");
    return constant_coeff_solution(op, t - tau);
}

double majorant_bound(const OperatorSpec& op, double T) {
    if (!(T > 0.0)) throw std::domain_error("majorant_bound: T must be positive");
    return evaluate_majorant(op, T);
}

}  // namespace fracgreen
