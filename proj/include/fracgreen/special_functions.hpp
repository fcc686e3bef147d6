#pragma once

#include <vector>

namespace fracgreen {

// Gamma-family and Mittag-Leffler-family evaluation. Everything here is a
// pure function of its arguments and safe to call from any thread.

/// Gamma function by Lanczos approximation (g = 7, 9 terms), reflection for
/// x < 0.5. Relative error below ~1e-13 on [0.1, 170].
/// Throws std::domain_error at the poles x = 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)|; if sign is non-null it receives the sign of Gamma(x).
double log_abs_gamma(double x, int* sign = nullptr);

/// Gamma(num)/Gamma(den) formed in log space, stable for arguments up to ~1e4.
double gamma_ratio(double num, double den);

/// Two-parameter Mittag-Leffler function
///   E_{alpha,beta}(z) = sum_{i>=0} z^i / Gamma(alpha*i + beta),  alpha > 0.
/// Terms are summed until three consecutive terms fall below
/// 1e-16 * (1 + |partial sum|); throws ConvergenceError past 1e5 terms.
double ml_two_param(double alpha, double beta, double z);

/// l-th derivative of the two-parameter Mittag-Leffler function,
///   E^{(l)}_{alpha,beta}(z) = sum_{i>=0} (i+l)!/i! * z^i / Gamma(alpha*(i+l) + beta).
double ml_two_param_deriv(double alpha, double beta, int l, double z);

/// Parameters of the multivariate Mittag-Leffler function: weight exponents
/// (all > 0) and the single second parameter.
struct MLParams {
    std::vector<double> alphas;
    double beta = 1.0;
};

/// Multivariate Mittag-Leffler function
///   E_{(a_1..a_m),b}(z) = sum_{k>=0} sum_{|beta|=k} k!/(beta_1!..beta_m!)
///                         * prod z_j^{beta_j} / Gamma(sum a_j beta_j + b).
/// Summed layer by layer in k; stops when two consecutive layers contribute
/// less than 1e-16 * (1 + |partial sum|). Layer cap 1e4 (ConvergenceError).
double ml_multivariate(const MLParams& params, const std::vector<double>& z);

/// Partial sums after each multi-index layer, ending at the converged value.
/// Exposed for the majorant monotonicity checks.
std::vector<double> ml_multivariate_layer_sums(const MLParams& params,
                                               const std::vector<double>& z);

/// All compositions of k into m nonnegative parts (|beta| = k), lexicographic.
std::vector<std::vector<int>> compositions(int k, int m);

/// Visit compositions of k into m parts without materializing them.
/// Visitor: void(const std::vector<int>& beta).
template <typename F>
void for_each_composition(int k, int m, F&& visit) {
    if (m <= 0) return;
    std::vector<int> beta(static_cast<size_t>(m), 0);
    beta[0] = k;
    while (true) {
        visit(beta);
        int i = m - 2;
        while (i >= 0 && beta[static_cast<size_t>(i)] == 0) --i;
        if (i < 0) break;
        const int tail = beta[static_cast<size_t>(m - 1)];
        beta[static_cast<size_t>(i)] -= 1;
        beta[static_cast<size_t>(i + 1)] = tail + 1;
        if (i + 1 != m - 1) beta[static_cast<size_t>(m - 1)] = 0;
    }
}

}  // namespace fracgreen
