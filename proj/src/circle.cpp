#include "logphg/circle.hpp"

namespace logphg {

namespace {

void fs_add(FourierSeries& s, int m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = s.find(m);
    if (it == s.end()) {
        s.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) s.erase(it);
    }
}

FourierSeries fs_mul(const FourierSeries& a, const FourierSeries& b) {
    FourierSeries out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) fs_add(out, ma + mb, ca * cb);
    return out;
}

GaussRat fs_mean(const FourierSeries& s) {
    auto it = s.find(0);
    return it == s.end() ? GaussRat() : it->second;
}

} // namespace

FourierSeries restrict_to_circle(const ScalarHom& h) {
    if (h.dim() != 2) fail(errc::unsupported_dimension, "circle restriction needs n = 2");
    // cos = (z + z^-1)/2, sin = (z - z^-1)/(2i) with z = e^{i theta}
    const FourierSeries cosf{{1, GaussRat(rat(1, 2))}, {-1, GaussRat(rat(1, 2))}};
    const FourierSeries sinf{{1, GaussRat(rat(0), rat(-1, 2))}, {-1, GaussRat(rat(0), rat(1, 2))}};
    FourierSeries out;
    for (const auto& [beta, c] : h.terms()) {
        FourierSeries t{{0, c}};
        for (int p = 0; p < beta[0]; ++p) t = fs_mul(t, cosf);
        for (int p = 0; p < beta[1]; ++p) t = fs_mul(t, sinf);
        for (const auto& [m, v] : t) fs_add(out, m, v);
    }
    return out;
}

ScalarHom fourier_to_homogeneous(const FourierSeries& modes, const GaussRat& degree) {
    ScalarHom out(2, degree);
    for (const auto& [m, c] : modes) {
        // (xi_1 + sgn(m) i xi_2)^{|m|} |xi|^{degree - |m|}
        int am = m < 0 ? -m : m;
        GaussRat iunit = m < 0 ? GaussRat(rat(0), rat(-1)) : GaussRat::i_unit();
        GaussRat ipow(1);
        for (int j = 0; j <= am; ++j) {
            MultiIndex beta{am - j, j};
            out.add_term(beta, c * GaussRat(Rat(binomial(static_cast<unsigned>(am),
                                                         static_cast<unsigned>(j)))) *
                                   ipow);
            ipow *= iunit;
        }
    }
    out.normalize();
    return out;
}

std::vector<ScalarLph> divergence_decompose(const ScalarLph& f) {
    if (f.dim() != 2) fail(errc::unsupported_dimension, "divergence decomposition needs n = 2");
    if (f.is_zero()) return {ScalarLph(2, GaussRat(-1)), ScalarLph(2, GaussRat(-1))};
    if (f.degree() != GaussRat(-2)) fail(errc::degree_mismatch, "input must have degree -2");

    const int k = f.log_degree();
    std::vector<FourierSeries> g(static_cast<size_t>(k) + 1);
    for (int l = 0; l <= k; ++l) g[static_cast<size_t>(l)] = restrict_to_circle(f.component(l));

    if (!fs_mean(g[static_cast<size_t>(k)]).is_zero())
        fail(errc::residue_obstruction, "res_k(f) != 0");

    // Log-reduction when res_{k-1} is in the way: subtract c |x|^{-2} log^{k-1}
    // and add back its explicit primitive (c/k) x_j |x|^{-2} log^k.
    std::vector<ScalarLph> extra;
    ScalarLph fprime = f;
    if (k >= 1) {
        GaussRat c = fs_mean(g[static_cast<size_t>(k) - 1]);
        if (!c.is_zero()) {
            fprime = f - ScalarLph::norm_power(2, GaussRat(-2), c, k - 1);
            GaussRat ck = c * GaussRat(rat(1, k));
            for (int j = 0; j < 2; ++j) {
                MultiIndex e = mi_zero(2);
                e[static_cast<size_t>(j)] = 1;
                extra.push_back(ScalarLph::monomial(2, GaussRat(-1), e, ck, k));
            }
            for (int l = 0; l <= k; ++l)
                g[static_cast<size_t>(l)] = restrict_to_circle(fprime.component(l));
        }
    }

    // Circle Laplacian system, solved top-down: Delta_S F_j = g_j + (j+1)(j+2) F_{j+2}.
    // At j <= k-2 the free constant of F_{j+2} makes the right-hand side mean
    // free; the bottom constants stay 0.
    std::vector<FourierSeries> F(static_cast<size_t>(k) + 1);
    for (int j = k; j >= 0; --j) {
        FourierSeries rhs = g[static_cast<size_t>(j)];
        if (j + 2 <= k) {
            GaussRat w(rat(static_cast<long>(j + 1) * (j + 2)));
            // fix the mean of F_{j+2} first
            GaussRat need = -fs_mean(rhs) / w;
            fs_add(F[static_cast<size_t>(j) + 2], 0, need - fs_mean(F[static_cast<size_t>(j) + 2]));
            for (const auto& [m, v] : F[static_cast<size_t>(j) + 2]) fs_add(rhs, m, v * w);
        }
        if (!fs_mean(rhs).is_zero())
            fail(errc::residue_obstruction, "obstructed level in circle Laplacian solve");
        FourierSeries sol;
        for (const auto& [m, v] : rhs) {
            if (m == 0) continue;
            sol.emplace(m, v * GaussRat(rat(1, static_cast<long>(m) * m)));
        }
        F[static_cast<size_t>(j)] = std::move(sol);
    }

    ScalarLph Fl(2, GaussRat(0));
    for (int j = 0; j <= k; ++j) {
        ScalarHom h = fourier_to_homogeneous(F[static_cast<size_t>(j)], GaussRat(0));
        if (!h.is_zero()) Fl.set_component(j, std::move(h));
    }

    std::vector<ScalarLph> out;
    for (int j = 0; j < 2; ++j) {
        ScalarLph fj = -Fl.deriv(j);
        if (!extra.empty())
            fj = fj.is_zero() ? extra[static_cast<size_t>(j)]
                              : fj + extra[static_cast<size_t>(j)];
        out.push_back(std::move(fj));
    }

    if (!(divergence(out) == f))
        fail(errc::invalid_argument, "internal: decomposition failed to re-differentiate");
    return out;
}

} // namespace logphg
