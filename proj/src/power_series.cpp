#include "fracgreen/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fracgreen/errors.hpp"
#include "fracgreen/special_functions.hpp"

namespace fracgreen {

namespace {

constexpr double kPoleTol = 1e-10;

// Gamma(mu+1)/Gamma(mu+1+shift), the power-rule factor.
double power_rule_factor(double mu, double shift) {
    return gamma_ratio(mu + 1.0, mu + 1.0 + shift);
}

// true when x lies within tol of a nonpositive integer (a Gamma pole)
bool near_gamma_pole(double x, double tol) {
    const double r = std::round(x);
    return r <= 0.5 && std::abs(x - r) <= tol;
}

void check_exponent(double mu) {
    if (!(mu > -1.0))
        throw std::domain_error("power series: exponent " + std::to_string(mu) +
                                " is not > -1 (not locally integrable)");
    if (!std::isfinite(mu)) throw std::domain_error("power series: non-finite exponent");
}

char* append_g17(char* p, double v) {
    return p + std::snprintf(p, 64, "%.17g", v);
}

}  // namespace

GeneralizedPowerSeries::GeneralizedPowerSeries(double origin, std::vector<PowerTerm> terms)
    : origin_(origin), terms_(std::move(terms)) {
    normalize();
}

void GeneralizedPowerSeries::normalize() {
    for (const PowerTerm& t : terms_) {
        check_exponent(t.exponent);
        if (!std::isfinite(t.coeff))
            throw std::domain_error("power series: non-finite coefficient");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
    std::vector<PowerTerm> merged;
    merged.reserve(terms_.size());
    for (const PowerTerm& t : terms_) {
        if (!merged.empty() && t.exponent - merged.back().exponent <= kExponentMergeTol) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const PowerTerm& t) {
                                    return std::abs(t.coeff) < kCoeffPruneTol;
                                }),
                 merged.end());
    if (merged.size() > kMaxTerms)
        throw TermOverflowError("power series: " + std::to_string(merged.size()) +
                                " terms exceed the cap of " + std::to_string(kMaxTerms));
    terms_ = std::move(merged);
}

double GeneralizedPowerSeries::operator()(double t) const {
    const double s = t - origin_;
    if (!(s > 0.0))
        throw std::domain_error("power series: evaluation requires t > origin");
    double v = 0.0;
    for (const PowerTerm& term : terms_) v += term.coeff * std::pow(s, term.exponent);
    return v;
}

double GeneralizedPowerSeries::lowest_exponent() const {
    if (terms_.empty()) throw std::domain_error("power series: empty series has no exponent");
    return terms_.front().exponent;
}

double GeneralizedPowerSeries::coefficient_at(double exponent) const {
    for (const PowerTerm& t : terms_) {
        if (std::abs(t.exponent - exponent) <= kExponentMergeTol) return t.coeff;
        if (t.exponent > exponent + kExponentMergeTol) break;
    }
    return 0.0;
}

GeneralizedPowerSeries& GeneralizedPowerSeries::operator+=(const GeneralizedPowerSeries& other) {
    if (!other.terms_.empty() && !terms_.empty() && other.origin_ != origin_)
        throw std::invalid_argument("power series: adding series with different origins");
    if (terms_.empty()) origin_ = other.origin_;
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

GeneralizedPowerSeries GeneralizedPowerSeries::operator*(double scale) const {
    GeneralizedPowerSeries out = *this;
    for (PowerTerm& t : out.terms_) t.coeff *= scale;
    out.normalize();
    return out;
}

double GeneralizedPowerSeries::abs_weight_sum(double T) const {
    double sum = 0.0;
    for (const PowerTerm& t : terms_) sum += std::abs(t.coeff) * std::pow(T, t.exponent);
    return sum;
}

double GeneralizedPowerSeries::window_sup_bound(double T) const {
    double sum = 0.0;
    for (const PowerTerm& t : terms_)
        sum += std::abs(t.coeff) *
               std::max(std::pow(T, t.exponent), std::pow(0.1 * T, t.exponent));
    return sum;
}

std::string GeneralizedPowerSeries::to_text() const {
    std::string out;
    char buf[256];
    for (const PowerTerm& t : terms_) {
        char* p = buf;
        p = append_g17(p, t.coeff);
        if (origin_ == 0.0) {
            p += std::snprintf(p, 32, " * t^");
        } else {
            p += std::snprintf(p, 32, " * (t-");
            p = append_g17(p, origin_);
            p += std::snprintf(p, 8, ")^");
        }
        p = append_g17(p, t.exponent);
        *p++ = '\n';
        out.append(buf, static_cast<size_t>(p - buf));
    }
    return out;
}

GeneralizedPowerSeries merged_sum(const std::vector<GeneralizedPowerSeries>& parts,
                                  double cancellation_tol) {
    double origin = 0.0;
    std::vector<PowerTerm> all;
    for (const GeneralizedPowerSeries& s : parts) {
        if (!s.empty()) origin = s.origin();
        all.insert(all.end(), s.terms().begin(), s.terms().end());
    }
    std::sort(all.begin(), all.end(),
              [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
    std::vector<PowerTerm> out;
    size_t i = 0;
    while (i < all.size()) {
        double coeff = all[i].coeff;
        double mass = std::abs(all[i].coeff);
        const double exp0 = all[i].exponent;
        size_t j = i + 1;
        while (j < all.size() &&
               all[j].exponent - all[j - 1].exponent <=
                   GeneralizedPowerSeries::kExponentMergeTol) {
            coeff += all[j].coeff;
            mass += std::abs(all[j].coeff);
            ++j;
        }
        if (std::abs(coeff) > cancellation_tol * mass) out.push_back({coeff, exp0});
        i = j;
    }
    return GeneralizedPowerSeries(origin, std::move(out));
}

GeneralizedPowerSeries rl_integral(const GeneralizedPowerSeries& series, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("rl_integral: alpha must be positive");
    std::vector<PowerTerm> out;
    out.reserve(series.size());
    for (const PowerTerm& t : series.terms())
        out.push_back({t.coeff * power_rule_factor(t.exponent, alpha), t.exponent + alpha});
    return GeneralizedPowerSeries(series.origin(), std::move(out));
}

GeneralizedPowerSeries rl_derivative(const GeneralizedPowerSeries& series, double alpha) {
    if (alpha == 0.0) return series;
    if (alpha < 0.0) throw std::invalid_argument("rl_derivative: alpha must be >= 0");
    std::vector<PowerTerm> out;
    out.reserve(series.size());
    for (const PowerTerm& t : series.terms()) {
        const double target = t.exponent + 1.0 - alpha;  // Gamma argument downstairs
        if (near_gamma_pole(target, kPoleTol)) continue;  // annihilated exactly
        if (target <= 0.0 && t.exponent - alpha <= -1.0)
            throw std::domain_error(
                "rl_derivative: term exponent " + std::to_string(t.exponent) +
                " maps below -1 under order " + std::to_string(alpha));
        out.push_back({t.coeff * power_rule_factor(t.exponent, -alpha), t.exponent - alpha});
    }
    return GeneralizedPowerSeries(series.origin(), std::move(out));
}

GeneralizedPowerSeries poly_multiply(const GeneralizedPowerSeries& series,
                                     const Polynomial& poly) {
    if (series.origin() != 0.0)
        throw std::invalid_argument("poly_multiply: series origin must be 0 (t = s)");
    std::vector<PowerTerm> out;
    const auto& c = poly.coeffs();
    out.reserve(series.size() * c.size());
    for (const PowerTerm& t : series.terms())
        for (size_t n = 0; n < c.size(); ++n)
            if (c[n] != 0.0) out.push_back({t.coeff * c[n], t.exponent + static_cast<double>(n)});
    return GeneralizedPowerSeries(0.0, std::move(out));
}

// ---------------------------------------------------------------------------
// bivariate series
// ---------------------------------------------------------------------------

BivariatePowerSeries::BivariatePowerSeries(std::vector<BiTerm> terms)
    : terms_(std::move(terms)) {
    normalize();
}

void BivariatePowerSeries::normalize() {
    for (const BiTerm& t : terms_) {
        check_exponent(t.s_exp);
        if (t.tau_exp < 0)
            throw std::domain_error("bivariate series: tau exponent must be nonnegative");
        if (!std::isfinite(t.coeff))
            throw std::domain_error("bivariate series: non-finite coefficient");
    }
    std::sort(terms_.begin(), terms_.end(), [](const BiTerm& a, const BiTerm& b) {
        if (a.s_exp != b.s_exp) return a.s_exp < b.s_exp;
        return a.tau_exp < b.tau_exp;
    });
    // merge within runs of near-equal s exponents, keyed by the tau exponent
    std::vector<BiTerm> merged;
    merged.reserve(terms_.size());
    size_t i = 0;
    while (i < terms_.size()) {
        size_t j = i + 1;
        while (j < terms_.size() && terms_[j].s_exp - terms_[j - 1].s_exp <=
                                        GeneralizedPowerSeries::kExponentMergeTol)
            ++j;
        std::sort(terms_.begin() + static_cast<long>(i), terms_.begin() + static_cast<long>(j),
                  [](const BiTerm& a, const BiTerm& b) { return a.tau_exp < b.tau_exp; });
        for (size_t k = i; k < j; ++k) {
            if (k > i && terms_[k].tau_exp == merged.back().tau_exp) {
                merged.back().coeff += terms_[k].coeff;
            } else {
                BiTerm t = terms_[k];
                t.s_exp = terms_[i].s_exp;
                merged.push_back(t);
            }
        }
        i = j;
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const BiTerm& t) {
                                    return std::abs(t.coeff) <
                                           GeneralizedPowerSeries::kCoeffPruneTol;
                                }),
                 merged.end());
    if (merged.size() > GeneralizedPowerSeries::kMaxTerms)
        throw TermOverflowError("bivariate series: " + std::to_string(merged.size()) +
                                " terms exceed the cap of " +
                                std::to_string(GeneralizedPowerSeries::kMaxTerms));
    terms_ = std::move(merged);
}

double BivariatePowerSeries::operator()(double t, double tau) const {
    if (!(tau >= 0.0) || !(t > tau))
        throw std::domain_error("bivariate series: evaluation requires t > tau >= 0");
    const double s = t - tau;
    double v = 0.0;
    for (const BiTerm& term : terms_)
        v += term.coeff * std::pow(tau, term.tau_exp) * std::pow(s, term.s_exp);
    return v;
}

GeneralizedPowerSeries BivariatePowerSeries::at_tau(double tau) const {
    if (!(tau >= 0.0)) throw std::domain_error("bivariate series: tau must be >= 0");
    std::vector<PowerTerm> out;
    out.reserve(terms_.size());
    for (const BiTerm& t : terms_) {
        const double w = t.tau_exp == 0 ? 1.0 : std::pow(tau, t.tau_exp);
        if (w == 0.0) continue;
        out.push_back({t.coeff * w, t.s_exp});
    }
    return GeneralizedPowerSeries(tau, std::move(out));
}

BivariatePowerSeries& BivariatePowerSeries::operator+=(const BivariatePowerSeries& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

BivariatePowerSeries BivariatePowerSeries::operator*(double scale) const {
    BivariatePowerSeries out = *this;
    for (BiTerm& t : out.terms_) t.coeff *= scale;
    out.normalize();
    return out;
}

double BivariatePowerSeries::lowest_s_exponent() const {
    if (terms_.empty())
        throw std::domain_error("bivariate series: empty series has no exponent");
    return terms_.front().s_exp;
}

double BivariatePowerSeries::abs_weight_sum(double T) const {
    double sum = 0.0;
    for (const BiTerm& t : terms_)
        sum += std::abs(t.coeff) * std::pow(T, t.tau_exp + t.s_exp);
    return sum;
}

double BivariatePowerSeries::window_sup_bound(double T) const {
    double sum = 0.0;
    for (const BiTerm& t : terms_)
        sum += std::abs(t.coeff) * std::pow(T, t.tau_exp) *
               std::max(std::pow(T, t.s_exp), std::pow(0.1 * T, t.s_exp));
    return sum;
}

std::string BivariatePowerSeries::to_text() const {
    std::string out;
    char buf[256];
    for (const BiTerm& t : terms_) {
        char* p = buf;
        p = append_g17(p, t.coeff);
        p += std::snprintf(p, 48, " * tau^%d * (t-tau)^", t.tau_exp);
        p = append_g17(p, t.s_exp);
        *p++ = '\n';
        out.append(buf, static_cast<size_t>(p - buf));
    }
    return out;
}

BivariatePowerSeries bi_rl_integral(const BivariatePowerSeries& series, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("bi_rl_integral: alpha must be positive");
    std::vector<BiTerm> out;
    out.reserve(series.size());
    for (const BiTerm& t : series.terms())
        out.push_back({t.coeff * power_rule_factor(t.s_exp, alpha), t.tau_exp, t.s_exp + alpha});
    return BivariatePowerSeries(std::move(out));
}

BivariatePowerSeries bi_rl_derivative(const BivariatePowerSeries& series, double alpha) {
    if (alpha == 0.0) return series;
    if (alpha < 0.0) throw std::invalid_argument("bi_rl_derivative: alpha must be >= 0");
    std::vector<BiTerm> out;
    out.reserve(series.size());
    for (const BiTerm& t : series.terms()) {
        const double target = t.s_exp + 1.0 - alpha;
        if (near_gamma_pole(target, kPoleTol)) continue;
        if (target <= 0.0 && t.s_exp - alpha <= -1.0)
            throw std::domain_error("bi_rl_derivative: term exponent " +
                                    std::to_string(t.s_exp) + " maps below -1 under order " +
                                    std::to_string(alpha));
        out.push_back({t.coeff * power_rule_factor(t.s_exp, -alpha), t.tau_exp,
                       t.s_exp - alpha});
    }
    return BivariatePowerSeries(std::move(out));
}

BivariatePowerSeries bi_poly_multiply(const BivariatePowerSeries& series,
                                      const Polynomial& poly) {
    const auto& c = poly.coeffs();
    std::vector<BiTerm> out;
    for (const BiTerm& t : series.terms()) {
        for (size_t n = 0; n < c.size(); ++n) {
            if (c[n] == 0.0) continue;
            // t^n = (tau + s)^n = sum_j C(n,j) tau^j s^{n-j}
            double binom = 1.0;
            for (size_t j = 0; j <= n; ++j) {
                out.push_back({t.coeff * c[n] * binom, t.tau_exp + static_cast<int>(j),
                               t.s_exp + static_cast<double>(n - j)});
                binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
            }
        }
    }
    return BivariatePowerSeries(std::move(out));
}

}  // namespace fracgreen
