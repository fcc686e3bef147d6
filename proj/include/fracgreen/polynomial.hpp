#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fracgreen {

/// Real polynomial in t, coefficients stored by ascending degree.
/// Trailing (highest-degree) zeros are trimmed on construction.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double c) { return Polynomial({c}); }

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    double operator()(double t) const;
    Polynomial derivative() const;

    /// max over [lo, hi] of |p(t)|, exact up to the bisection tolerance on the
    /// derivative's roots.
    double max_abs_on(double lo, double hi) const;

    /// Canonical rendering, e.g. "3*t^2 + 0.5*t - 1".
    std::string to_string() const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<double> coeffs_;
};

}  // namespace fracgreen
