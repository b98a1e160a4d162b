#ifndef LOGPHG_HOMOGENEOUS_HPP
#define LOGPHG_HOMOGENEOUS_HPP

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "logphg/linear.hpp"
#include "logphg/multi_index.hpp"
#include "logphg/sphere.hpp"

namespace logphg {

// Lifts a coefficient against an exact sphere-integral value. Specialized for
// GaussRat (-> ExactScalar) here and for TrigPoly (-> ExactTrigPoly) in
// trig_poly.hpp.
template <class C>
struct sphere_lift_traits;

template <>
struct sphere_lift_traits<GaussRat> {
    using type = ExactScalar;
    static type lift(const GaussRat& c, const ExactScalar& s) { return s.scaled(c); }
    static void accumulate(type& acc, const type& v) { acc += v; }
};

// Homogeneous function of (complex rational) degree a on R^n \ {0}, stored as
// sum of c * xi^beta * |xi|^{a-|beta|}. Canonical form: coefficients nonzero,
// terms keyed by beta in lexicographic order, and the last-variable exponent
// reduced below 2 via xi_n^2 = |xi|^2 - sum_{j<n} xi_j^2 (the monomials are
// not independent without this; equality must be equality of functions).
template <class C>
class HomogeneousFn {
public:
    HomogeneousFn() = default;
    HomogeneousFn(int dim, GaussRat degree) : dim_(dim), degree_(std::move(degree)) {}

    static HomogeneousFn monomial(int dim, GaussRat degree, const MultiIndex& beta, C coeff) {
        HomogeneousFn f(dim, std::move(degree));
        f.add_term(beta, std::move(coeff));
        f.normalize();
        return f;
    }

    // |xi|^a
    static HomogeneousFn norm_power(int dim, GaussRat a, C coeff) {
        return monomial(dim, std::move(a), mi_zero(dim), std::move(coeff));
    }

    int dim() const { return dim_; }
    const GaussRat& degree() const { return degree_; }
    const std::map<MultiIndex, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const MultiIndex& beta, C coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(beta);
        if (it == terms_.end()) {
            terms_.emplace(beta, std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void normalize() {
        if (dim_ < 1) return;
        std::map<MultiIndex, C> work;
        work.swap(terms_);
        const size_t last = static_cast<size_t>(dim_) - 1;
        while (!work.empty()) {
            auto node = work.extract(work.begin());
            MultiIndex beta = node.key();
            C coeff = std::move(node.mapped());
            if (coeff.is_zero()) continue;
            if (beta[last] < 2) {
                add_term(beta, std::move(coeff));
                continue;
            }
            // xi_n^2 -> |xi|^2 - sum_{j<n} xi_j^2
            beta[last] -= 2;
            merge_into(work, beta, coeff);
            for (size_t j = 0; j < last; ++j) {
                MultiIndex b2 = beta;
                b2[j] += 2;
                merge_into(work, b2, -coeff);
            }
        }
    }

    friend HomogeneousFn operator+(const HomogeneousFn& a, const HomogeneousFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.dim_ != b.dim_) fail(errc::invalid_argument, "dimension mismatch");
        if (a.degree_ != b.degree_) fail(errc::degree_mismatch, "adding different degrees");
        HomogeneousFn out = a;
        for (const auto& [beta, c] : b.terms_) out.add_term(beta, c);
        return out;
    }

    friend HomogeneousFn operator-(const HomogeneousFn& a) {
        HomogeneousFn out(a.dim_, a.degree_);
        for (const auto& [beta, c] : a.terms_) out.terms_.emplace(beta, -c);
        return out;
    }

    friend HomogeneousFn operator-(const HomogeneousFn& a, const HomogeneousFn& b) {
        return a + (-b);
    }

    friend HomogeneousFn operator*(const HomogeneousFn& a, const HomogeneousFn& b) {
        if (a.is_zero() || b.is_zero())
            return HomogeneousFn(a.dim_ ? a.dim_ : b.dim_, a.degree_ + b.degree_);
        if (a.dim_ != b.dim_) fail(errc::invalid_argument, "dimension mismatch");
        HomogeneousFn out(a.dim_, a.degree_ + b.degree_);
        for (const auto& [ba, ca] : a.terms_)
            for (const auto& [bb, cb] : b.terms_) out.add_term(mi_add(ba, bb), ca * cb);
        out.normalize();
        return out;
    }

    friend bool operator==(const HomogeneousFn& a, const HomogeneousFn& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomogeneousFn& a, const HomogeneousFn& b) { return !(a == b); }

    HomogeneousFn scaled(const GaussRat& s) const {
        HomogeneousFn out(dim_, degree_);
        if (s.is_zero()) return out;
        for (const auto& [beta, c] : terms_) out.add_term(beta, c.scaled(s));
        return out;
    }

    // d/dxi_j: c xi^beta |xi|^{a-|beta|} ->
    //   c beta_j xi^{beta-e_j} |xi|^{a-|beta|} + c (a-|beta|) xi^{beta+e_j} |xi|^{a-|beta|-2}
    HomogeneousFn deriv(int j) const {
        HomogeneousFn out(dim_, degree_ - GaussRat(1));
        for (const auto& [beta, c] : terms_) {
            GaussRat s = degree_ - GaussRat(mi_order(beta));
            if (beta[static_cast<size_t>(j)] > 0) {
                MultiIndex b = beta;
                b[static_cast<size_t>(j)] -= 1;
                out.add_term(b, c.scaled(GaussRat(beta[static_cast<size_t>(j)])));
            }
            if (!s.is_zero()) {
                MultiIndex b = beta;
                b[static_cast<size_t>(j)] += 1;
                out.add_term(b, c.scaled(s));
            }
        }
        out.normalize();
        return out;
    }

    // multiplication by the coordinate xi_j (degree goes up by one)
    HomogeneousFn coord_mul(int j) const {
        HomogeneousFn out(dim_, degree_ + GaussRat(1));
        for (const auto& [beta, c] : terms_) {
            MultiIndex b = beta;
            b[static_cast<size_t>(j)] += 1;
            out.add_term(b, c);
        }
        out.normalize();
        return out;
    }

    HomogeneousFn conjugated() const {
        HomogeneousFn out(dim_, degree_.cconj());
        for (const auto& [beta, c] : terms_) out.add_term(beta, c.cconj());
        return out;
    }

    // f(O xi) for an exactly orthogonal rational matrix O (|O xi| = |xi|).
    HomogeneousFn compose_orthogonal(const RatMatrix& O) const {
        HomogeneousFn out(dim_, degree_);
        for (const auto& [beta, c] : terms_) {
            // (O xi)^beta as a scalar polynomial of homogeneity |beta|
            auto poly = HomogeneousFn<GaussRat>::norm_power(dim_, GaussRat(0), GaussRat(1));
            for (int j = 0; j < dim_; ++j) {
                HomogeneousFn<GaussRat> lin(dim_, GaussRat(1));
                for (int i = 0; i < dim_; ++i) {
                    MultiIndex e = mi_zero(dim_);
                    e[static_cast<size_t>(i)] = 1;
                    lin.add_term(e, GaussRat(O.at(j, i)));
                }
                lin.normalize();
                for (int p = 0; p < beta[static_cast<size_t>(j)]; ++p) poly = poly * lin;
            }
            // the norm factor |xi|^{a-|beta|} rides along unchanged
            for (const auto& [g, pc] : poly.terms()) out.add_term(g, c.scaled(pc));
        }
        out.normalize();
        return out;
    }

    typename sphere_lift_traits<C>::type sphere_integral() const {
        typename sphere_lift_traits<C>::type acc{};
        for (const auto& [beta, c] : terms_) {
            ExactScalar ival = sphere_integral_monomial(beta, dim_);
            if (ival.is_zero()) continue;
            sphere_lift_traits<C>::accumulate(acc, sphere_lift_traits<C>::lift(c, ival));
        }
        return acc;
    }

    // Euler check helper: sum_j xi_j d/dxi_j equals degree * f for true
    // homogeneous functions; kept honest by computing the left-hand side.
    HomogeneousFn euler_applied() const {
        HomogeneousFn acc(dim_, degree_);
        for (int j = 0; j < dim_; ++j) {
            HomogeneousFn t = deriv(j).coord_mul(j);
            acc = acc.is_zero() ? t : acc + t;
        }
        return acc;
    }

    template <class CoeffEval>
    std::complex<double> eval_with(CoeffEval&& coeff_eval, const std::vector<double>& xi) const {
        double r2 = 0;
        for (double v : xi) r2 += v * v;
        std::complex<double> total{0.0, 0.0};
        std::complex<double> a = degree_.to_complex();
        double logr = 0.5 * std::log(r2);
        for (const auto& [beta, c] : terms_) {
            double mono = 1.0;
            for (size_t i = 0; i < beta.size(); ++i)
                for (int p = 0; p < beta[i]; ++p) mono *= xi[i];
            std::complex<double> npow = std::exp((a - std::complex<double>(mi_order(beta))) * logr);
            total += coeff_eval(c) * mono * npow;
        }
        return total;
    }

private:
    static void merge_into(std::map<MultiIndex, C>& m, const MultiIndex& beta, const C& c) {
        if (c.is_zero()) return;
        auto it = m.find(beta);
        if (it == m.end()) {
            m.emplace(beta, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    int dim_ = 0;
    GaussRat degree_{};
    std::map<MultiIndex, C> terms_;
};

} // namespace logphg

#endif
