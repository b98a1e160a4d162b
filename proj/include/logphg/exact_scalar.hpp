#ifndef LOGPHG_EXACT_SCALAR_HPP
#define LOGPHG_EXACT_SCALAR_HPP

#include <complex>
#include <map>
#include <string>

#include "logphg/gaussian.hpp"

namespace logphg {

// Finite sum of Gaussian-rational multiples of half-integer powers of pi,
// keyed by 2q so exponents stay integral. Sphere integrals produce q >= 0;
// residue densities carry (2pi)^{-n} and need q < 0 as well.
class ExactScalar {
public:
    ExactScalar() = default;
    explicit ExactScalar(GaussRat c) { add_term(0, std::move(c)); }
    explicit ExactScalar(long v) { add_term(0, GaussRat(v)); }

    static ExactScalar pi_power(long q2, GaussRat coeff = GaussRat(1)) {
        ExactScalar s;
        s.add_term(q2, std::move(coeff));
        return s;
    }

    void add_term(long q2, GaussRat c) {
        if (c.is_zero()) return;
        auto it = terms_.find(q2);
        if (it == terms_.end()) {
            terms_.emplace(q2, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<long, GaussRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Exact rational value if the scalar is pi-free; throws otherwise.
    GaussRat rational_part() const;

    ExactScalar scaled(const GaussRat& s) const;
    ExactScalar cconj() const;

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator-(const ExactScalar& a);
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
    ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
    ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }

    std::complex<double> to_complex() const;
    double to_real() const;  // throws if the imaginary part is nonzero

    std::string str() const;

private:
    std::map<long, GaussRat> terms_;
};

} // namespace logphg

#endif
