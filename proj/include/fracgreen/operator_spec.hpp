#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracgreen/polynomial.hpp"

namespace fracgreen {

/// Coefficient a_h(t): either an explicit polynomial (symbolic path capable)
/// or an arbitrary continuous function (numeric path only). Both forms are
/// evaluable; `source` keeps the original text for rendering.
struct Coefficient {
    std::optional<Polynomial> poly;
    std::function<double(double)> fn;
    std::string source;

    static Coefficient polynomial(Polynomial p);
    static Coefficient function(std::function<double(double)> f, std::string source_text);
    static Coefficient constant(double c) { return polynomial(Polynomial::constant(c)); }

    bool is_polynomial() const { return poly.has_value(); }
    double operator()(double t) const { return fn(t); }
};

/// The operator D^{alpha_0} + sum_h a_h(t) D^{alpha_h} with strictly
/// decreasing orders alpha_0 > alpha_1 > ... > alpha_m >= 0, alpha_0 > 0.
class OperatorSpec {
public:
    OperatorSpec(std::vector<double> orders, std::vector<Coefficient> coeffs);

    const std::vector<double>& orders() const { return orders_; }
    double alpha0() const { return orders_.front(); }
    int m() const { return static_cast<int>(orders_.size()) - 1; }
    double order(int h) const { return orders_[static_cast<size_t>(h)]; }  // h in 1..m
    const Coefficient& coeff(int h) const { return coeffs_[static_cast<size_t>(h - 1)]; }

    /// Smallest integer n0 with n0 - 1 < alpha_0 <= n0.
    int n0() const { return n0_; }

    bool all_polynomial() const;
    bool all_constant() const;

private:
    std::vector<double> orders_;
    std::vector<Coefficient> coeffs_;
    int n0_ = 1;
};

}  // namespace fracgreen
