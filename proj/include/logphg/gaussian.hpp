#ifndef LOGPHG_GAUSSIAN_HPP
#define LOGPHG_GAUSSIAN_HPP

#include <complex>
#include <string>

#include "logphg/rational.hpp"

namespace logphg {

// Gaussian rational: re + i*im with exact rational parts. Doubles as the
// coefficient field and as a (complex rational) degree.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(rat(r)) {}
    GaussRat(long r, long i) : re(rat(r)), im(rat(i)) {}

    static GaussRat zero() { return GaussRat(); }
    static GaussRat i_unit() { return GaussRat(rat(0), rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat cconj() const { return {re, -im}; }
    GaussRat scaled(const GaussRat& s) const { return *this * s; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

    GaussRat inverse() const {
        Rat n = re * re + im * im;
        if (n == 0) fail(errc::invalid_argument, "inverse of zero Gaussian rational");
        return {re / n, -im / n};
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const {
        if (im == 0) return re.get_str();
        return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
    }
};

inline GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }

inline GaussRat gpow_int(const GaussRat& base, long e) {
    GaussRat acc(1);
    GaussRat b = e < 0 ? base.inverse() : base;
    long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) acc *= b;
    return acc;
}

// i^(-k) for composition/adjoint expansion terms.
inline GaussRat i_pow_neg(unsigned k) {
    switch (k % 4) {
        case 0: return GaussRat(1);
        case 1: return GaussRat(0, -1);
        case 2: return GaussRat(-1);
        default: return GaussRat(0, 1);
    }
}

// Total order (lexicographic on re, im); used only for canonical storage.
inline bool gauss_less(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

} // namespace logphg

#endif
