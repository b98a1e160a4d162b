#ifndef LOGPHG_RATIONAL_HPP
#define LOGPHG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "logphg/errors.hpp"

namespace logphg {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) fail(errc::invalid_argument, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num" or "num/den"; canonicalizes.
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rat rat_from_pair(const std::string& num, const std::string& den) {
    Int n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0 || d == 0)
        fail(errc::parse_error, "bad rational pair " + num + "/" + den);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Rat pow_int(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat p;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), a);
    p.canonicalize();
    if (e < 0) {
        if (p == 0) fail(errc::invalid_argument, "inverse of zero");
        p = 1 / p;
    }
    return p;
}

// Exact base^(p/q) when it is rational; nullopt otherwise. base > 0.
inline std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& expo) {
    if (base <= 0) return std::nullopt;
    if (base == 1) return Rat(1);
    Rat e = expo;
    e.canonicalize();
    if (!e.get_num().fits_slong_p() || !e.get_den().fits_ulong_p()) return std::nullopt;
    long p = e.get_num().get_si();
    unsigned long q = e.get_den().get_ui();
    Rat bp = pow_int(base, p);
    if (q == 1) return bp;
    Int rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), bp.get_num_mpz_t(), q);
    int exact_d = mpz_root(rd.get_mpz_t(), bp.get_den_mpz_t(), q);
    if (!exact_n || !exact_d) return std::nullopt;
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }

} // namespace logphg

#endif
