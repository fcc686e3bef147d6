#include "fracgreen/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracgreen/errors.hpp"

namespace fracgreen {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// Lanczos g = 7, 9-term coefficient set (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

double lanczos_sum(double x) {
    // x >= 0.5; series in the shifted variable x - 1
    double s = kLanczos[0];
    for (int k = 1; k < 9; ++k) s += kLanczos[k] / (x - 1.0 + k);
    return s;
}

double gamma_positive(double x) {
    const double z = x - 1.0;
    const double base = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(base, z + 0.5) * std::exp(-base) * lanczos_sum(x);
}

// 1/Gamma(x) with the series convention that terms hitting a Gamma pole vanish.
double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 171.0) {
        int sign = 1;
        const double lg = fracgreen::log_abs_gamma(x, &sign);
        return sign * std::exp(-lg);
    }
    return 1.0 / fracgreen::gamma(x);
}

}  // namespace

double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma: pole at nonpositive integer x = " + std::to_string(x));
    if (x >= 0.5) return gamma_positive(x);
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
}

double log_abs_gamma(double x, int* sign) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("log_abs_gamma: pole at nonpositive integer x = " +
                                std::to_string(x));
    if (x >= 0.5) {
        if (sign) *sign = 1;
        const double z = x - 1.0;
        const double base = z + kLanczosG + 0.5;
        return kLogSqrt2Pi + (z + 0.5) * std::log(base) - base + std::log(lanczos_sum(x));
    }
    // reflection in log form; Gamma is negative on (-1,0), (-3,-2), ...
    const double s = std::sin(kPi * x);
    if (sign) *sign = s < 0.0 ? -1 : 1;
    return std::log(kPi / std::abs(s)) - log_abs_gamma(1.0 - x, nullptr);
}

double gamma_ratio(double num, double den) {
    int sn = 1, sd = 1;
    const double ln = log_abs_gamma(num, &sn);
    const double ld = log_abs_gamma(den, &sd);
    return static_cast<double>(sn * sd) * std::exp(ln - ld);
}

namespace {

constexpr double kSeriesRelTol = 1e-16;
constexpr long kMaxSeriesTerms = 100000;
constexpr long kMaxLayers = 10000;

double ml_series(double alpha, double beta, int l, double z) {
    if (alpha <= 0.0) throw std::domain_error("ml: alpha must be positive");
    if (l < 0) throw std::domain_error("ml: derivative order must be nonnegative");

    // term_i = (i+l)!/i! * z^i / Gamma(alpha*(i+l) + beta).  Accumulate in
    // extended precision: the alternating case (z < 0) cancels heavily.
    long double sum = 0.0L;
    long double zpow = 1.0L;
    long double ffac = 1.0L;
    for (int j = 2; j <= l; ++j) ffac *= j;
    const double log_abs_z = z == 0.0 ? 0.0 : std::log(std::abs(z));
    int small_streak = 0;
    for (long i = 0; i < kMaxSeriesTerms; ++i) {
        const double garg = alpha * (static_cast<double>(i) + l) + beta;
        long double term;
        if (garg <= 171.0 && std::abs(static_cast<double>(zpow)) < 1e280 && ffac < 1e280L) {
            term = ffac * zpow * static_cast<long double>(reciprocal_gamma(garg));
        } else {
            // far tail or huge numerators: form the magnitude in log space
            const double logmag = static_cast<double>(i) * log_abs_z +
                                  std::log(static_cast<double>(ffac)) - log_abs_gamma(garg);
            term = (z < 0.0 && i % 2 == 1 ? -1.0L : 1.0L) * std::exp(static_cast<long double>(logmag));
            if (z == 0.0 && i > 0) term = 0.0L;
        }
        sum += term;
        if (std::abs(static_cast<double>(term)) <
            kSeriesRelTol * (1.0 + std::abs(static_cast<double>(sum)))) {
            if (++small_streak >= 3) return static_cast<double>(sum);
        } else {
            small_streak = 0;
        }
        zpow *= z;
        ffac *= static_cast<long double>(i + l + 1) / static_cast<long double>(i + 1);
    }
    throw ConvergenceError("ml series: no convergence within " +
                           std::to_string(kMaxSeriesTerms) + " terms");
}

}  // namespace

double ml_two_param(double alpha, double beta, double z) {
    return ml_series(alpha, beta, 0, z);
}

double ml_two_param_deriv(double alpha, double beta, int l, double z) {
    return ml_series(alpha, beta, l, z);
}

std::vector<double> ml_multivariate_layer_sums(const MLParams& params,
                                               const std::vector<double>& z) {
    const size_t m = params.alphas.size();
    if (m == 0) throw std::domain_error("ml_multivariate: needs at least one alpha");
    if (z.size() != m)
        throw std::domain_error("ml_multivariate: dimension mismatch, " + std::to_string(m) +
                                " alphas vs " + std::to_string(z.size()) + " arguments");
    for (double a : params.alphas)
        if (a <= 0.0) throw std::domain_error("ml_multivariate: alphas must be positive");

    std::vector<double> sums;
    long double total = 0.0L;
    int small_streak = 0;
    std::vector<double> log_abs_z(m);
    for (size_t j = 0; j < m; ++j) log_abs_z[j] = z[j] == 0.0 ? 0.0 : std::log(std::abs(z[j]));

    for (long k = 0; k < kMaxLayers; ++k) {
        long double layer = 0.0L;
        for_each_composition(static_cast<int>(k), static_cast<int>(m),
                             [&](const std::vector<int>& beta) {
                                 double garg = params.beta;
                                 double logmag = log_abs_gamma(static_cast<double>(k) + 1.0);
                                 double sign = 1.0;
                                 for (size_t j = 0; j < m; ++j) {
                                     const int bj = beta[j];
                                     if (bj == 0) continue;
                                     if (z[j] == 0.0) return;  // z_j^bj = 0
                                     garg += params.alphas[j] * bj;
                                     logmag += bj * log_abs_z[j] -
                                               log_abs_gamma(static_cast<double>(bj) + 1.0);
                                     if (bj % 2 == 1 && z[j] < 0.0) sign = -sign;
                                 }
                                 if (is_nonpositive_integer(garg)) return;
                                 int gsign = 1;
                                 logmag -= log_abs_gamma(garg, &gsign);
                                 layer += static_cast<long double>(sign * gsign) *
                                          std::exp(static_cast<long double>(logmag));
                             });
        total += layer;
        sums.push_back(static_cast<double>(total));
        if (std::abs(static_cast<double>(layer)) <
            kSeriesRelTol * (1.0 + std::abs(static_cast<double>(total)))) {
            if (++small_streak >= 2) return sums;
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("ml_multivariate: no convergence within " +
                           std::to_string(kMaxLayers) + " layers");
}

double ml_multivariate(const MLParams& params, const std::vector<double>& z) {
    return ml_multivariate_layer_sums(params, z).back();
}

std::vector<std::vector<int>> compositions(int k, int m) {
    std::vector<std::vector<int>> out;
    for_each_composition(k, m, [&](const std::vector<int>& beta) { out.push_back(beta); });
    return out;
}

}  // namespace fracgreen
