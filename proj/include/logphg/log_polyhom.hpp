#ifndef LOGPHG_LOG_POLYHOM_HPP
#define LOGPHG_LOG_POLYHOM_HPP

#include "logphg/homogeneous.hpp"

namespace logphg {

// Element of P^{a,k}: f = sum_{l=0..k} f_l(xi) log^l|xi| with every f_l
// homogeneous of the same degree a. Trailing zero components are trimmed so
// the stored log-degree is minimal (Lemma-level uniqueness of the
// representation makes equality canonical).
template <class C>
class LogPolyhomFn {
public:
    LogPolyhomFn() = default;
    LogPolyhomFn(int dim, GaussRat degree) : dim_(dim), degree_(std::move(degree)) {}

    static LogPolyhomFn from_homogeneous(HomogeneousFn<C> h, int logpow = 0) {
        LogPolyhomFn f(h.dim(), h.degree());
        f.comps_.resize(static_cast<size_t>(logpow) + 1, HomogeneousFn<C>(h.dim(), h.degree()));
        f.comps_[static_cast<size_t>(logpow)] = std::move(h);
        f.trim();
        return f;
    }

    // c * xi^beta * |xi|^{a-|beta|} * log^l|xi|
    static LogPolyhomFn monomial(int dim, GaussRat degree, const MultiIndex& beta, C coeff,
                                 int logpow = 0) {
        return from_homogeneous(HomogeneousFn<C>::monomial(dim, degree, beta, std::move(coeff)),
                                logpow);
    }

    static LogPolyhomFn norm_power(int dim, GaussRat a, C coeff, int logpow = 0) {
        return monomial(dim, std::move(a), mi_zero(dim), std::move(coeff), logpow);
    }

    int dim() const { return dim_; }
    const GaussRat& degree() const { return degree_; }
    int log_degree() const { return static_cast<int>(comps_.size()) - 1; }
    bool is_zero() const { return comps_.empty(); }

    const HomogeneousFn<C>& component(int l) const {
        static const HomogeneousFn<C> empty{};
        if (l < 0 || l >= static_cast<int>(comps_.size())) return empty;
        return comps_[static_cast<size_t>(l)];
    }

    void set_component(int l, HomogeneousFn<C> h) {
        if (static_cast<int>(comps_.size()) <= l)
            comps_.resize(static_cast<size_t>(l) + 1, HomogeneousFn<C>(dim_, degree_));
        comps_[static_cast<size_t>(l)] = std::move(h);
        trim();
    }

    void trim() {
        while (!comps_.empty() && comps_.back().is_zero()) comps_.pop_back();
    }

    friend LogPolyhomFn operator+(const LogPolyhomFn& a, const LogPolyhomFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.dim_ != b.dim_) fail(errc::invalid_argument, "dimension mismatch");
        if (a.degree_ != b.degree_) fail(errc::degree_mismatch, "adding different degrees");
        LogPolyhomFn out = a;
        if (out.comps_.size() < b.comps_.size())
            out.comps_.resize(b.comps_.size(), HomogeneousFn<C>(a.dim_, a.degree_));
        for (size_t l = 0; l < b.comps_.size(); ++l) {
            if (b.comps_[l].is_zero()) continue;
            out.comps_[l] = out.comps_[l].is_zero() ? b.comps_[l] : out.comps_[l] + b.comps_[l];
        }
        out.trim();
        return out;
    }

    friend LogPolyhomFn operator-(const LogPolyhomFn& a) {
        LogPolyhomFn out = a;
        for (auto& h : out.comps_) h = -h;
        return out;
    }

    friend LogPolyhomFn operator-(const LogPolyhomFn& a, const LogPolyhomFn& b) {
        return a + (-b);
    }

    // exact Cauchy product over log powers; type (a,k)x(b,l) -> (a+b, k+l)
    friend LogPolyhomFn operator*(const LogPolyhomFn& a, const LogPolyhomFn& b) {
        LogPolyhomFn out(a.dim_ ? a.dim_ : b.dim_, a.degree_ + b.degree_);
        if (a.is_zero() || b.is_zero()) return out;
        out.comps_.resize(a.comps_.size() + b.comps_.size() - 1,
                          HomogeneousFn<C>(out.dim_, out.degree_));
        for (size_t i = 0; i < a.comps_.size(); ++i) {
            if (a.comps_[i].is_zero()) continue;
            for (size_t j = 0; j < b.comps_.size(); ++j) {
                if (b.comps_[j].is_zero()) continue;
                HomogeneousFn<C> p = a.comps_[i] * b.comps_[j];
                out.comps_[i + j] = out.comps_[i + j].is_zero() ? p : out.comps_[i + j] + p;
            }
        }
        out.trim();
        return out;
    }

    friend bool operator==(const LogPolyhomFn& a, const LogPolyhomFn& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.is_zero() || b.is_zero()) return false;
        if (a.dim_ != b.dim_ || a.degree_ != b.degree_ || a.comps_.size() != b.comps_.size())
            return false;
        for (size_t l = 0; l < a.comps_.size(); ++l)
            if (!(a.comps_[l] == b.comps_[l])) return false;
        return true;
    }
    friend bool operator!=(const LogPolyhomFn& a, const LogPolyhomFn& b) { return !(a == b); }

    LogPolyhomFn scaled(const GaussRat& s) const {
        LogPolyhomFn out(dim_, degree_);
        if (s.is_zero()) return out;
        out.comps_.reserve(comps_.size());
        for (const auto& h : comps_) out.comps_.push_back(h.scaled(s));
        out.trim();
        return out;
    }

    // d/dxi_j f: per log level, (d f_l) + (l+1) f_{l+1} xi_j |xi|^{-2}.
    // Log-degree does not increase; degree drops by exactly one.
    LogPolyhomFn deriv(int j) const {
        LogPolyhomFn out(dim_, degree_ - GaussRat(1));
        if (is_zero()) return out;
        out.comps_.resize(comps_.size(), HomogeneousFn<C>(dim_, out.degree_));
        HomogeneousFn<C> radial;  // xi_j |xi|^{-2}, assembled lazily
        for (size_t l = 0; l < comps_.size(); ++l) {
            HomogeneousFn<C> d = comps_[l].is_zero() ? HomogeneousFn<C>(dim_, out.degree_)
                                                     : comps_[l].deriv(static_cast<int>(j));
            if (l + 1 < comps_.size() && !comps_[l + 1].is_zero()) {
                MultiIndex e = mi_zero(dim_);
                e[static_cast<size_t>(j)] = 1;
                auto shift = HomogeneousFn<GaussRat>::monomial(dim_, GaussRat(-1), e,
                                                               GaussRat(static_cast<long>(l + 1)));
                HomogeneousFn<C> t = mixed_mul(comps_[l + 1], shift);
                d = d.is_zero() ? t : d + t;
            }
            out.comps_[l] = d;
        }
        out.trim();
        return out;
    }

    LogPolyhomFn coord_mul(int j) const {
        LogPolyhomFn out(dim_, degree_ + GaussRat(1));
        out.comps_.reserve(comps_.size());
        for (const auto& h : comps_) out.comps_.push_back(h.coord_mul(j));
        out.trim();
        return out;
    }

    // sum_j xi_j d/dxi_j f, computed honestly term by term. Equals
    // a*f + sum_{l>=1} l f_l log^{l-1} exactly.
    LogPolyhomFn euler_applied() const {
        LogPolyhomFn acc(dim_, degree_);
        for (int j = 0; j < dim_; ++j) {
            LogPolyhomFn t = deriv(j).coord_mul(j);
            acc = acc.is_zero() ? t : acc + t;
        }
        return acc;
    }

    LogPolyhomFn conjugated() const {
        LogPolyhomFn out(dim_, degree_.cconj());
        out.comps_.reserve(comps_.size());
        for (const auto& h : comps_) out.comps_.push_back(h.conjugated());
        out.trim();
        return out;
    }

    typename sphere_lift_traits<C>::type sphere_integral_level(int l) const {
        return component(l).sphere_integral();
    }

    template <class CoeffEval>
    std::complex<double> eval_with(CoeffEval&& coeff_eval, const std::vector<double>& xi) const {
        double r2 = 0;
        for (double v : xi) r2 += v * v;
        double logr = 0.5 * std::log(r2);
        std::complex<double> total{0.0, 0.0};
        double lp = 1.0;
        for (size_t l = 0; l < comps_.size(); ++l) {
            if (!comps_[l].is_zero()) total += comps_[l].eval_with(coeff_eval, xi) * lp;
            lp *= logr;
        }
        return total;
    }

private:
    // multiply a C-coefficient function by a scalar-coefficient one
    static HomogeneousFn<C> mixed_mul(const HomogeneousFn<C>& a, const HomogeneousFn<GaussRat>& b) {
        HomogeneousFn<C> out(a.dim(), a.degree() + b.degree());
        for (const auto& [ba, ca] : a.terms())
            for (const auto& [bb, cb] : b.terms()) out.add_term(mi_add(ba, bb), ca.scaled(cb));
        out.normalize();
        return out;
    }

    int dim_ = 0;
    GaussRat degree_{};
    std::vector<HomogeneousFn<C>> comps_;
};

using ScalarLph = LogPolyhomFn<GaussRat>;
using ScalarHom = HomogeneousFn<GaussRat>;

// --- homogeneous_core operations on scalar-coefficient functions ---

// res_j(f) for f in P^{-n,k}: exact sphere integral of the j-th log component.
inline ExactScalar res_level(const ScalarLph& f, int j) {
    if (f.is_zero()) return ExactScalar{};
    if (f.degree() != GaussRat(-static_cast<long>(f.dim())))
        fail(errc::degree_mismatch, "res_j needs degree exactly -n");
    return f.sphere_integral_level(j);
}

// res at the top stored log level (the k of P^{a,k} after trimming).
inline ExactScalar res_top(const ScalarLph& f) { return res_level(f, f.log_degree()); }

// Radial primitive: F in P^{a,k} with sum_j d/dx_j (x_j F) = f, for a != -n.
// F_j = sum_{l>=j} f_l (-1)^{l-j} l! / (j! (n+a)^{l-j+1}).
template <class C>
LogPolyhomFn<C> radial_primitive(const LogPolyhomFn<C>& f) {
    const int n = f.dim();
    GaussRat na = f.degree() + GaussRat(static_cast<long>(n));
    if (na.is_zero()) fail(errc::degenerate_degree, "radial primitive at degree -n");
    GaussRat inv_na = na.inverse();
    LogPolyhomFn<C> out(f.dim(), f.degree());
    for (int j = 0; j <= f.log_degree(); ++j) {
        HomogeneousFn<C> acc(f.dim(), f.degree());
        for (int l = j; l <= f.log_degree(); ++l) {
            if (f.component(l).is_zero()) continue;
            GaussRat coef = GaussRat(Rat(factorial(static_cast<unsigned>(l))) /
                                     Rat(factorial(static_cast<unsigned>(j))));
            if ((l - j) % 2 != 0) coef = -coef;
            coef *= gpow_int(inv_na, l - j + 1);
            HomogeneousFn<C> t = f.component(l).scaled(coef);
            acc = acc.is_zero() ? t : acc + t;
        }
        if (!acc.is_zero()) out.set_component(j, std::move(acc));
    }
    out.trim();
    return out;
}

// sum_j d/dx_j (x_j F), for checking the radial-primitive identity.
template <class C>
LogPolyhomFn<C> divergence_of_radial(const LogPolyhomFn<C>& F) {
    LogPolyhomFn<C> acc(F.dim(), F.degree());
    for (int j = 0; j < F.dim(); ++j) {
        LogPolyhomFn<C> t = F.coord_mul(j).deriv(j);
        acc = acc.is_zero() ? t : acc + t;
    }
    return acc;
}

// sum_j d/dx_j f_j for a vector field given componentwise.
template <class C>
LogPolyhomFn<C> divergence(const std::vector<LogPolyhomFn<C>>& fs) {
    LogPolyhomFn<C> acc;
    for (size_t j = 0; j < fs.size(); ++j) {
        LogPolyhomFn<C> t = fs[j].deriv(static_cast<int>(j));
        acc = acc.is_zero() ? t : acc + t;
    }
    return acc;
}

// f(c O xi) re-expanded in the basis. Output is graded by powers of log c:
// result[t] collects the coefficient of (log c)^t, each an exact element of
// P^{a, k-t}. For c = 1 the list has a single entry.
template <class C>
std::vector<LogPolyhomFn<C>> compose_scaled_orthogonal(const LogPolyhomFn<C>& f,
                                                       const RatMatrix& O, const Rat& c) {
    if (!O.is_orthogonal()) fail(errc::unsupported_transform, "matrix is not orthogonal");
    if (c <= 0) fail(errc::unsupported_transform, "scale must be positive");
    if (!f.degree().is_real())
        fail(errc::unsupported_transform, "scaled transform needs a real degree");
    auto cpow = rat_pow_exact(c, f.degree().re);
    if (!cpow) fail(errc::unsupported_transform, "c^degree is not rational");
    const int k = f.log_degree();
    std::vector<LogPolyhomFn<C>> out;
    if (f.is_zero()) return {f};
    int tmax = (c == 1) ? 0 : k;
    for (int t = 0; t <= tmax; ++t) {
        LogPolyhomFn<C> g(f.dim(), f.degree());
        for (int j = 0; t + j <= k; ++j) {
            const auto& src = f.component(j + t);
            if (src.is_zero()) continue;
            GaussRat coef = GaussRat(Rat(binomial(static_cast<unsigned>(j + t),
                                                  static_cast<unsigned>(t))) * *cpow);
            g.set_component(j, src.compose_orthogonal(O).scaled(coef));
        }
        g.trim();
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace logphg

#endif
