#pragma once

#include <string>
#include <vector>

#include "fracgreen/polynomial.hpp"

namespace fracgreen {

/// One term c * s^mu, s = t - origin. Local integrability near the origin
/// requires mu > -1.
struct PowerTerm {
    double coeff = 0.0;
    double exponent = 0.0;
};

/// Finite sum of power terms with real exponents, the closed algebra of the
/// symbolic solver path. Terms are kept sorted by exponent; exponents within
/// 1e-12 of each other are merged, zero coefficients pruned.
class GeneralizedPowerSeries {
public:
    static constexpr double kExponentMergeTol = 1e-12;
    static constexpr double kCoeffPruneTol = 1e-300;
    static constexpr size_t kMaxTerms = 20000;

    GeneralizedPowerSeries() = default;
    explicit GeneralizedPowerSeries(double origin) : origin_(origin) {}
    GeneralizedPowerSeries(double origin, std::vector<PowerTerm> terms);

    double origin() const { return origin_; }
    const std::vector<PowerTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Value at t > origin (terms summed in ascending exponent order).
    double operator()(double t) const;

    double lowest_exponent() const;  // throws on empty series
    /// Coefficient of the term whose exponent matches `exponent` within the
    /// merge tolerance; 0 if absent.
    double coefficient_at(double exponent) const;

    GeneralizedPowerSeries& operator+=(const GeneralizedPowerSeries& other);
    GeneralizedPowerSeries operator*(double scale) const;
    GeneralizedPowerSeries operator-() const { return *this * -1.0; }

    /// sum_j |c_j| * T^{mu_j}; majorizes |value| on (0, T] when exponents are
    /// nonnegative.
    double abs_weight_sum(double T) const;
    /// sum_j |c_j| * max(T^{mu_j}, (T/10)^{mu_j}); finite majorant of the sup
    /// norm on the window [T/10, T] for any valid exponents.
    double window_sup_bound(double T) const;

    /// One term per line: "coeff * t^mu" (origin 0) or "coeff * (t-a)^mu".
    std::string to_text() const;

private:
    void normalize();

    double origin_ = 0.0;
    std::vector<PowerTerm> terms_;
};

/// Sum many series (same origin) zeroing coefficients that are pure floating
/// point cancellation residue: a merged coefficient is dropped when its
/// magnitude is below cancellation_tol times the sum of the magnitudes that
/// went into it.
GeneralizedPowerSeries merged_sum(const std::vector<GeneralizedPowerSeries>& parts,
                                  double cancellation_tol);

/// Riemann-Liouville fractional integral of order alpha > 0 under the power
/// rule: c*s^mu -> c * Gamma(mu+1)/Gamma(mu+1+alpha) * s^{mu+alpha}. Exact.
GeneralizedPowerSeries rl_integral(const GeneralizedPowerSeries& series, double alpha);

/// Riemann-Liouville fractional derivative of order alpha >= 0:
/// c*s^mu -> c * Gamma(mu+1)/Gamma(mu+1-alpha) * s^{mu-alpha}. Terms whose
/// mapped coefficient hits a Gamma pole (mu - alpha a negative integer within
/// 1e-10) vanish identically. alpha = 0 is the identity. Throws
/// std::domain_error if a surviving exponent would be <= -1.
GeneralizedPowerSeries rl_derivative(const GeneralizedPowerSeries& series, double alpha);

/// Multiply by a polynomial in t. Requires origin 0 (t = s); use the bivariate
/// variant for origin tau.
GeneralizedPowerSeries poly_multiply(const GeneralizedPowerSeries& series,
                                     const Polynomial& poly);

/// One term c * tau^nu * s^mu with s = t - tau; nu a nonnegative integer from
/// binomial re-expansion of polynomial coefficients about tau, mu > -1.
struct BiTerm {
    double coeff = 0.0;
    int tau_exp = 0;
    double s_exp = 0.0;
};

/// Finite sum of bivariate terms; houses Green's-function partial sums for
/// polynomial coefficients.
class BivariatePowerSeries {
public:
    BivariatePowerSeries() = default;
    explicit BivariatePowerSeries(std::vector<BiTerm> terms);

    const std::vector<BiTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Value at t > tau >= 0.
    double operator()(double t, double tau) const;

    /// Freeze tau: collapse tau^nu numerically into the coefficients, giving a
    /// univariate series in s = t - tau with origin tau.
    GeneralizedPowerSeries at_tau(double tau) const;

    BivariatePowerSeries& operator+=(const BivariatePowerSeries& other);
    BivariatePowerSeries operator*(double scale) const;

    double lowest_s_exponent() const;
    /// sum |c| * T^{nu+mu}: coefficient weight used by truncation control.
    double abs_weight_sum(double T) const;
    double window_sup_bound(double T) const;

    /// One term per line: "coeff * tau^nu * (t-tau)^mu", 17 significant digits.
    std::string to_text() const;

private:
    void normalize();

    std::vector<BiTerm> terms_;
};

/// I^alpha with origin tau, treating tau^nu as constant:
/// c*tau^nu*s^mu -> c * Gamma(mu+1)/Gamma(mu+1+alpha) * tau^nu * s^{mu+alpha}.
BivariatePowerSeries bi_rl_integral(const BivariatePowerSeries& series, double alpha);

/// D^alpha with origin tau (power rule in s; same annihilation behavior as the
/// univariate rl_derivative).
BivariatePowerSeries bi_rl_derivative(const BivariatePowerSeries& series, double alpha);

/// Multiply by a polynomial in t, re-expanding each monomial t^n = (tau + s)^n
/// by the binomial theorem. Exact.
BivariatePowerSeries bi_poly_multiply(const BivariatePowerSeries& series,
                                      const Polynomial& poly);

}  // namespace fracgreen
