#include "fracgreen/operator_spec.hpp"

#include <cmath>

#include "fracgreen/errors.hpp"

namespace fracgreen {

Coefficient Coefficient::polynomial(Polynomial p) {
    Coefficient c;
    c.source = p.to_string();
    c.fn = [p](double t) { return p(t); };
    c.poly = std::move(p);
    return c;
}

Coefficient Coefficient::function(std::function<double(double)> f, std::string source_text) {
    Coefficient c;
    c.fn = std::move(f);
    c.source = std::move(source_text);
    return c;
}

OperatorSpec::OperatorSpec(std::vector<double> orders, std::vector<Coefficient> coeffs)
    : orders_(std::move(orders)), coeffs_(std::move(coeffs)) {
    if (orders_.empty()) throw ValidationError("operator: needs at least the leading order");
    if (!(orders_.front() > 0.0)) throw ValidationError("operator: alpha_0 must be positive");
    for (size_t i = 1; i < orders_.size(); ++i)
        if (!(orders_[i] < orders_[i - 1]))
            throw ValidationError("operator: orders must be strictly decreasing");
    if (orders_.back() < 0.0) throw ValidationError("operator: orders must be >= 0");
    if (coeffs_.size() + 1 != orders_.size())
        throw ValidationError("operator: expected " + std::to_string(orders_.size() - 1) +
                              " coefficients, got " + std::to_string(coeffs_.size()));
    const double a0 = orders_.front();
    n0_ = static_cast<int>(std::ceil(a0));
    if (n0_ < 1) n0_ = 1;
}

bool OperatorSpec::all_polynomial() const {
    for (const Coefficient& c : coeffs_)
        if (!c.is_polynomial()) return false;
    return true;
}

bool OperatorSpec::all_constant() const {
    for (const Coefficient& c : coeffs_)
        if (!c.is_polynomial() || !c.poly->is_constant()) return false;
    return true;
}

}  // namespace fracgreen
