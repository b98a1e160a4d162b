#include "logphg/sphere.hpp"

namespace logphg {

namespace {

// Gamma(j/2) for j >= 1 as r * sqrt(pi)^e with e in {0,1}:
//   j even: (j/2 - 1)!        j odd: (j-1)! / (4^{(j-1)/2} ((j-1)/2)!) * sqrt(pi)
struct HalfGamma {
    Rat r;
    int sqrt_pi;
};

HalfGamma gamma_half(long j) {
    if (j <= 0) fail(errc::invalid_argument, "gamma_half needs positive argument");
    if (j % 2 == 0) return {Rat(factorial(static_cast<unsigned>(j / 2 - 1))), 0};
    long m = (j - 1) / 2;  // Gamma(m + 1/2)
    Rat r = Rat(factorial(static_cast<unsigned>(2 * m))) /
            (pow_int(Rat(4), m) * Rat(factorial(static_cast<unsigned>(m))));
    return {r, 1};
}

} // namespace

ExactScalar sphere_integral_monomial(const MultiIndex& beta, int n) {
    if (n < 1 || static_cast<int>(beta.size()) != n)
        fail(errc::invalid_argument, "dimension mismatch in sphere integral");
    for (int b : beta) {
        if (b < 0) fail(errc::invalid_argument, "negative multi-index entry");
        if (b % 2 != 0) return ExactScalar{};
    }
    Rat num(2);
    int sqrt_pis = 0;
    for (int b : beta) {
        HalfGamma g = gamma_half(b + 1);
        num *= g.r;
        sqrt_pis += g.sqrt_pi;
    }
    HalfGamma den = gamma_half(n + mi_order(beta));
    num /= den.r;
    sqrt_pis -= den.sqrt_pi;
    return ExactScalar::pi_power(sqrt_pis, GaussRat(num));
}

ExactScalar sphere_volume(int n) { return sphere_integral_monomial(mi_zero(n), n); }

} // namespace logphg
