#include "fracgreen/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fracgreen {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double t) const {
    double v = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
    return v;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

double Polynomial::max_abs_on(double lo, double hi) const {
    if (coeffs_.empty()) return 0.0;
    double best = std::max(std::abs((*this)(lo)), std::abs((*this)(hi)));
    const Polynomial d = derivative();
    if (d.is_zero()) return best;

    // bracket sign changes of p' on a scan grid, bisect each to 1e-12
    constexpr int kScan = 256;
    double prev_t = lo, prev_v = d(lo);
    for (int i = 1; i <= kScan; ++i) {
        const double t = lo + (hi - lo) * i / kScan;
        const double v = d(t);
        if (v == 0.0) best = std::max(best, std::abs((*this)(t)));
        if (prev_v * v < 0.0) {
            double a = prev_t, b = t, fa = prev_v;
            while (b - a > 1e-12 * std::max(1.0, std::abs(b))) {
                const double mid = 0.5 * (a + b);
                const double fm = d(mid);
                if (fa * fm <= 0.0) {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            best = std::max(best, std::abs((*this)(0.5 * (a + b))));
        }
        prev_t = t;
        prev_v = v;
    }
    return best;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    char buf[64];
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const double c = coeffs_[i];
        if (c == 0.0 && coeffs_.size() > 1) continue;
        const double mag = out.empty() ? c : std::abs(c);
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        if (i == 0) {
            std::snprintf(buf, sizeof buf, "%.17g", mag);
            out += buf;
        } else {
            if (mag != 1.0) {
                std::snprintf(buf, sizeof buf, "%.17g*", mag);
                out += buf;
            }
            out += (i == 1) ? "t" : ("t^" + std::to_string(i));
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace fracgreen
