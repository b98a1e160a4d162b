#include "logphg/exact_scalar.hpp"

#include <cmath>

namespace logphg {

GaussRat ExactScalar::rational_part() const {
    GaussRat out;
    for (const auto& [q2, c] : terms_) {
        if (q2 != 0) fail(errc::invalid_argument, "scalar is not pi-free: " + str());
        out = c;
    }
    return out;
}

ExactScalar ExactScalar::scaled(const GaussRat& s) const {
    ExactScalar out;
    if (s.is_zero()) return out;
    for (const auto& [q2, c] : terms_) out.terms_.emplace(q2, c * s);
    return out;
}

ExactScalar ExactScalar::cconj() const {
    ExactScalar out;
    for (const auto& [q2, c] : terms_) out.terms_.emplace(q2, c.cconj());
    return out;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar out = a;
    for (const auto& [q2, c] : b.terms_) out.add_term(q2, c);
    return out;
}

ExactScalar operator-(const ExactScalar& a) {
    ExactScalar out;
    for (const auto& [q2, c] : a.terms_) out.terms_.emplace(q2, -c);
    return out;
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar out;
    for (const auto& [qa, ca] : a.terms_)
        for (const auto& [qb, cb] : b.terms_) out.add_term(qa + qb, ca * cb);
    return out;
}

std::complex<double> ExactScalar::to_complex() const {
    std::complex<double> v{0.0, 0.0};
    for (const auto& [q2, c] : terms_)
        v += c.to_complex() * std::pow(M_PI, 0.5 * static_cast<double>(q2));
    return v;
}

double ExactScalar::to_real() const {
    for (const auto& [q2, c] : terms_)
        if (!c.is_real()) fail(errc::invalid_argument, "scalar has imaginary part: " + str());
    return to_complex().real();
}

std::string ExactScalar::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [q2, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ")";
        if (q2 != 0) {
            s += "*pi";
            if (q2 != 2) s += "^(" + std::to_string(q2) + "/2)";
        }
    }
    return s;
}

} // namespace logphg
