#include "logphg/symbol.hpp"

#include <cmath>

namespace logphg {

SymbolExpansion operator+(const SymbolExpansion& a, const SymbolExpansion& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.dim_ != b.dim_) fail(errc::invalid_argument, "dimension mismatch");
    if (a.order_ != b.order_) fail(errc::degree_mismatch, "adding symbols of different order");
    SymbolExpansion out = a;
    for (const auto& [j, c] : b.comps_) out.accumulate(j, c);
    return out;
}

SymbolExpansion operator-(const SymbolExpansion& a) {
    SymbolExpansion out(a.dim_, a.order_);
    for (const auto& [j, c] : a.comps_) out.comps_.emplace(j, -c);
    return out;
}

SymbolExpansion operator-(const SymbolExpansion& a, const SymbolExpansion& b) { return a + (-b); }

bool operator==(const SymbolExpansion& a, const SymbolExpansion& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.is_zero() || b.is_zero()) return false;
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.comps_ == b.comps_;
}

std::complex<double> SymbolExpansion::eval(const std::vector<double>& x,
                                           const std::vector<double>& xi) const {
    std::complex<double> total{0.0, 0.0};
    auto ceval = [&x](const TrigPoly& c) { return c.eval(x); };
    for (const auto& [j, c] : comps_) total += c.eval_with(ceval, xi);
    return total;
}

SymbolComponent deriv_x(const SymbolComponent& f, int j) {
    SymbolComponent out(f.dim(), f.degree());
    for (int l = 0; l <= f.log_degree(); ++l) {
        const auto& h = f.component(l);
        if (h.is_zero()) continue;
        HomogeneousFn<TrigPoly> hd(h.dim(), h.degree());
        for (const auto& [beta, c] : h.terms()) hd.add_term(beta, c.deriv_x(j));
        if (!hd.is_zero()) out.set_component(l, std::move(hd));
    }
    out.trim();
    return out;
}

namespace {

// d^alpha tables keyed by multi-index, built by extending one axis at a time
using DerivTable = std::map<MultiIndex, SymbolComponent>;

DerivTable build_table(const SymbolComponent& base, int max_order, bool in_xi) {
    DerivTable table;
    table.emplace(mi_zero(base.dim()), base);
    for (int t = 1; t <= max_order; ++t) {
        for (const auto& alpha : mi_all_of_order(base.dim(), t)) {
            int axis = 0;
            while (alpha[static_cast<size_t>(axis)] == 0) ++axis;
            MultiIndex parent = alpha;
            parent[static_cast<size_t>(axis)] -= 1;
            const SymbolComponent& p = table.at(parent);
            SymbolComponent d = in_xi ? p.deriv(axis) : deriv_x(p, axis);
            table.emplace(alpha, std::move(d));
        }
    }
    return table;
}

int default_offset(const SymbolExpansion& A, const SymbolExpansion& B) {
    (void)A;
    (void)B;
    return 6;  // depth m+m'-6 unless overridden
}

int offset_from_depth(const GaussRat& top, const Rat& depth) {
    // retain degrees top - j with Re(top) - j >= depth
    Rat span = top.re - depth;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
    if (!fl.fits_sint_p()) fail(errc::invalid_argument, "depth out of range");
    int j = static_cast<int>(fl.get_si());
    return j < 0 ? -1 : j;
}

} // namespace

SymbolExpansion compose_to_offset(const SymbolExpansion& A, const SymbolExpansion& B,
                                  int max_offset) {
    if (A.dim() != B.dim()) fail(errc::invalid_argument, "dimension mismatch");
    const int n = A.dim();
    SymbolExpansion out(n, A.order() + B.order());
    if (A.is_zero() || B.is_zero()) return out;

    std::map<int, DerivTable> a_tables;  // xi-derivatives of A's components
    std::map<int, DerivTable> b_tables;  // x-derivatives of B's components
    for (const auto& [ja, ca] : A.components()) {
        if (ja > max_offset) break;
        a_tables.emplace(ja, build_table(ca, max_offset - ja, true));
    }
    for (const auto& [jb, cb] : B.components()) {
        if (jb > max_offset) break;
        b_tables.emplace(jb, build_table(cb, max_offset - jb, false));
    }

    for (const auto& [ja, ta] : a_tables) {
        for (const auto& [jb, tb] : b_tables) {
            int budget = max_offset - ja - jb;
            if (budget < 0) continue;
            for (int t = 0; t <= budget; ++t) {
                GaussRat phase = i_pow_neg(static_cast<unsigned>(t));
                for (const auto& alpha : mi_all_of_order(n, t)) {
                    const SymbolComponent& da = ta.at(alpha);
                    if (da.is_zero()) continue;
                    const SymbolComponent& db = tb.at(alpha);
                    if (db.is_zero()) continue;
                    GaussRat coef = phase * GaussRat(Rat(1) / Rat(mi_factorial(alpha)));
                    out.accumulate(ja + jb + t, (da * db).scaled(coef));
                }
            }
        }
    }
    return out;
}

SymbolExpansion compose(const SymbolExpansion& A, const SymbolExpansion& B) {
    return compose_to_offset(A, B, default_offset(A, B));
}

SymbolExpansion compose(const SymbolExpansion& A, const SymbolExpansion& B, const Rat& depth) {
    return compose_to_offset(A, B, offset_from_depth(A.order() + B.order(), depth));
}

SymbolExpansion adjoint(const SymbolExpansion& A) {
    const int n = A.dim();
    SymbolExpansion out(n, A.order().cconj());
    if (A.is_zero()) return out;
    const int J = A.max_offset();
    for (const auto& [l, cl] : A.components()) {
        SymbolComponent conj = cl.conjugated();
        // d_xi^alpha d_x^alpha: build a combined table on the conjugate
        DerivTable xi_table = build_table(conj, J - l, true);
        for (int t = 0; t + l <= J; ++t) {
            GaussRat phase = i_pow_neg(static_cast<unsigned>(t));
            for (const auto& alpha : mi_all_of_order(n, t)) {
                SymbolComponent d = xi_table.at(alpha);
                for (int axis = 0; axis < n; ++axis)
                    for (int p = 0; p < alpha[static_cast<size_t>(axis)]; ++p)
                        d = deriv_x(d, axis);
                if (d.is_zero()) continue;
                GaussRat coef = phase * GaussRat(Rat(1) / Rat(mi_factorial(alpha)));
                out.accumulate(l + t, d.scaled(coef));
            }
        }
    }
    return out;
}

SymbolExpansion commutator(const SymbolExpansion& A, const SymbolExpansion& B, int max_offset) {
    return compose_to_offset(A, B, max_offset) - compose_to_offset(B, A, max_offset);
}

SymbolExpansion commutator(const SymbolExpansion& A, const SymbolExpansion& B) {
    return commutator(A, B, default_offset(A, B));
}

const SymbolComponent& leading_symbol(const SymbolExpansion& A) {
    if (A.is_zero()) fail(errc::empty_symbol, "leading symbol of the zero symbol");
    return A.components().begin()->second;
}

SymbolComponent poisson_bracket(const SymbolComponent& f, const SymbolComponent& g) {
    if (f.dim() != g.dim()) fail(errc::invalid_argument, "dimension mismatch");
    SymbolComponent acc(f.dim(), f.degree() + g.degree() - GaussRat(1));
    for (int j = 0; j < f.dim(); ++j) {
        SymbolComponent t = f.deriv(j) * deriv_x(g, j) - deriv_x(f, j) * g.deriv(j);
        acc = acc.is_zero() ? t : acc + t;
    }
    return acc;
}

ResidueDensity residue_density(const SymbolExpansion& A, int k) {
    const int n = A.dim();
    const GaussRat target(-static_cast<long>(n));
    ExactTrigPoly sphere_part(n);
    for (const auto& [j, c] : A.components()) {
        if (c.degree() != target) continue;
        sphere_part = sphere_part + c.sphere_integral_level(k);
    }
    // (k+1)! / (2pi)^n
    GaussRat norm(Rat(factorial(static_cast<unsigned>(k + 1))) / pow_int(Rat(2), n));
    ExactScalar factor = ExactScalar::pi_power(-2L * n, norm);
    return sphere_part.scaled_by(factor);
}

ExactScalar higher_residue(const SymbolExpansion& A, int k) {
    ExactScalar m0 = residue_density(A, k).mode0();
    // times vol(T^n) = (2pi)^n
    return m0 * ExactScalar::pi_power(2L * A.dim(), GaussRat(pow_int(Rat(2), A.dim())));
}

void check_scalar_positive_leading(const SymbolExpansion& P) {
    if (P.is_zero()) fail(errc::empty_symbol, "P has no leading symbol");
    if (!P.order().is_real() || P.order().re <= 0)
        fail(errc::invalid_argument, "P must have positive real order");
    const SymbolComponent& top = leading_symbol(P);
    if (top.log_degree() != 0) fail(errc::invalid_argument, "P must be classical (log-degree 0)");
    const auto& h = top.component(0);
    if (h.term_count() != 1) fail(errc::invalid_argument, "leading part of P must be c|xi|^m");
    const auto& [beta, coeff] = *h.terms().begin();
    if (mi_order(beta) != 0) fail(errc::invalid_argument, "leading part of P must be radial");
    if (coeff.modes().size() != 1) fail(errc::invalid_argument, "leading part of P must be scalar");
    const auto& [mode, g] = *coeff.modes().begin();
    if (mi_order(mode) != 0 || !g.is_real() || g.re <= 0)
        fail(errc::invalid_argument, "leading coefficient of P must be a positive constant");
}

SymbolExpansion nabla_P(const SymbolExpansion& A, const SymbolExpansion& P, int iterations,
                        const Rat& depth) {
    check_scalar_positive_leading(P);
    SymbolExpansion cur = A;
    for (int i = 0; i < iterations; ++i) {
        int J = offset_from_depth(P.order() + cur.order(), depth);
        cur = commutator(P, cur, J);
    }
    return cur;
}

namespace {

TrigPoly remap_modes(const TrigPoly& p, const RatMatrix& O, const Rat& c) {
    TrigPoly out(p.dim());
    const int n = p.dim() == 0 ? O.n : p.dim();
    for (const auto& [m, coeff] : p.modes()) {
        std::vector<int> mp(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            Rat v(0);
            for (int j = 0; j < n; ++j) v += O.at(i, j) * Rat(m[static_cast<size_t>(j)]);
            v /= c;
            v.canonicalize();
            if (!is_integer(v) || !v.get_num().fits_sint_p())
                fail(errc::unsupported_transform, "x-mode does not map to the lattice");
            mp[static_cast<size_t>(i)] = static_cast<int>(v.get_num().get_si());
        }
        out.add_mode(mp, coeff);
    }
    return out;
}

SymbolComponent remap_x(const SymbolComponent& f, const RatMatrix& O, const Rat& c) {
    SymbolComponent out(f.dim(), f.degree());
    for (int l = 0; l <= f.log_degree(); ++l) {
        const auto& h = f.component(l);
        if (h.is_zero()) continue;
        HomogeneousFn<TrigPoly> hr(h.dim(), h.degree());
        for (const auto& [beta, coeff] : h.terms()) hr.add_term(beta, remap_modes(coeff, O, c));
        out.set_component(l, std::move(hr));
    }
    out.trim();
    return out;
}

} // namespace

TransformedSymbol pushforward_linear(const SymbolExpansion& A, const RatMatrix& O, const Rat& c) {
    const int n = A.dim();
    if (O.n != n) fail(errc::invalid_argument, "matrix dimension mismatch");
    if (!O.is_orthogonal()) fail(errc::unsupported_transform, "matrix must be c * orthogonal");
    if (c <= 0) fail(errc::unsupported_transform, "scale must be positive");

    TransformedSymbol out;
    out.scale = c;
    out.det_abs = pow_int(c, n);

    int tmax = (c == 1) ? 0 : A.log_degree();
    out.parts.assign(static_cast<size_t>(tmax) + 1, SymbolExpansion(n, A.order()));
    for (const auto& [j, comp] : A.components()) {
        SymbolComponent moved = remap_x(comp, O, c);
        // eta-side: f((cO) eta) graded by powers of log c
        auto graded = compose_scaled_orthogonal(moved, O.transposed(), c);
        for (size_t t = 0; t < graded.size() && t < out.parts.size(); ++t)
            out.parts[t].accumulate(j, graded[t]);
    }
    return out;
}

std::complex<double> TransformedSymbol::eval(const std::vector<double>& y,
                                             const std::vector<double>& eta) const {
    std::complex<double> total{0.0, 0.0};
    double lc = std::log(to_double(scale));
    double pw = 1.0;
    for (const auto& part : parts) {
        total += part.eval(y, eta) * pw;
        pw *= lc;
    }
    return total;
}

ExactScalar higher_residue(const TransformedSymbol& T, int k) {
    // (log c)^t parts with t >= 1 have log-degree <= k-t and cannot reach
    // log-level k at degree -n; only the log-free part contributes.
    ExactScalar r = T.parts.empty() ? ExactScalar{} : higher_residue(T.parts[0], k);
    return r.scaled(GaussRat(T.det_abs));
}

} // namespace logphg
