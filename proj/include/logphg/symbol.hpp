#ifndef LOGPHG_SYMBOL_HPP
#define LOGPHG_SYMBOL_HPP

#include "logphg/log_polyhom.hpp"
#include "logphg/trig_poly.hpp"

namespace logphg {

// One log-polyhomogeneous component a_{m-j}(x,xi) of a torus symbol: a
// function in P^{m-j,k} whose monomial coefficients are trig polynomials in x.
using SymbolComponent = LogPolyhomFn<TrigPoly>;

using ResidueDensity = ExactTrigPoly;

// Finite log-polyhomogeneous symbol on T^n: components at degrees order - j,
// at most one per integer offset j >= 0. Finite by design; truncation depth is
// an explicit argument of the calculus operations.
class SymbolExpansion {
public:
    SymbolExpansion() = default;
    SymbolExpansion(int dim, GaussRat order) : dim_(dim), order_(std::move(order)) {}

    static SymbolExpansion single(SymbolComponent c) {
        SymbolExpansion s(c.dim(), c.degree());
        if (!c.is_zero()) s.comps_.emplace(0, std::move(c));
        return s;
    }

    int dim() const { return dim_; }
    const GaussRat& order() const { return order_; }
    const std::map<int, SymbolComponent>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    const SymbolComponent& component(int offset) const {
        static const SymbolComponent empty{};
        auto it = comps_.find(offset);
        return it == comps_.end() ? empty : it->second;
    }

    void set_component(int offset, SymbolComponent c) {
        if (offset < 0) fail(errc::invalid_argument, "negative degree offset");
        if (c.is_zero()) {
            comps_.erase(offset);
            return;
        }
        if (c.dim() != dim_) fail(errc::invalid_argument, "dimension mismatch");
        if (c.degree() != order_ - GaussRat(offset))
            fail(errc::degree_mismatch, "component degree must be order - offset");
        comps_[offset] = std::move(c);
    }

    void accumulate(int offset, const SymbolComponent& c) {
        if (c.is_zero()) return;
        auto it = comps_.find(offset);
        if (it == comps_.end()) {
            set_component(offset, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    int max_offset() const { return comps_.empty() ? -1 : comps_.rbegin()->first; }
    int log_degree() const {
        int k = 0;
        for (const auto& [j, c] : comps_) k = std::max(k, c.log_degree());
        return k;
    }

    // order of the first nonzero component (the actual order of the symbol,
    // which can sit below the formal grid top after cancellations)
    GaussRat effective_order() const {
        if (comps_.empty()) fail(errc::empty_symbol, "zero symbol has no order");
        return order_ - GaussRat(comps_.begin()->first);
    }

    friend SymbolExpansion operator+(const SymbolExpansion& a, const SymbolExpansion& b);
    friend SymbolExpansion operator-(const SymbolExpansion& a);
    friend SymbolExpansion operator-(const SymbolExpansion& a, const SymbolExpansion& b);
    friend bool operator==(const SymbolExpansion& a, const SymbolExpansion& b);

    SymbolExpansion scaled(const GaussRat& s) const {
        SymbolExpansion out(dim_, order_);
        if (s.is_zero()) return out;
        for (const auto& [j, c] : comps_) out.comps_.emplace(j, c.scaled(s));
        return out;
    }

    std::complex<double> eval(const std::vector<double>& x, const std::vector<double>& xi) const;

private:
    int dim_ = 0;
    GaussRat order_{};
    std::map<int, SymbolComponent> comps_;
};

// x-derivative of a component (trig-poly coefficients differentiate; the
// xi-structure is untouched).
SymbolComponent deriv_x(const SymbolComponent& f, int j);

// Product expansion, exact per retained degree: the degree-(m+m'-j) component
// collects all (alpha, l, l') with l + l' + |alpha| = j of
// (i^{-|alpha|}/alpha!) (d_xi^alpha a_{m-l}) (d_x^alpha b_{m'-l'}).
SymbolExpansion compose_to_offset(const SymbolExpansion& A, const SymbolExpansion& B,
                                  int max_offset);
// depth = lowest retained degree (real part compared); default m+m'-6
SymbolExpansion compose(const SymbolExpansion& A, const SymbolExpansion& B);
SymbolExpansion compose(const SymbolExpansion& A, const SymbolExpansion& B, const Rat& depth);

// Adjoint: sum_alpha (i^{-|alpha|}/alpha!) d_xi^alpha d_x^alpha sigma(x,xi)^*,
// retained down to the input's own lowest degree.
SymbolExpansion adjoint(const SymbolExpansion& A);

SymbolExpansion commutator(const SymbolExpansion& A, const SymbolExpansion& B, int max_offset);
SymbolExpansion commutator(const SymbolExpansion& A, const SymbolExpansion& B);

const SymbolComponent& leading_symbol(const SymbolExpansion& A);

// {f,g} = sum_j d_xi_j f d_x_j g - d_x_j f d_xi_j g
SymbolComponent poisson_bracket(const SymbolComponent& f, const SymbolComponent& g);

// omega_k(A)(x) = ((k+1)!/(2pi)^n) * integral_{|xi|=1} a_{-n,k}(x,xi), exact.
ResidueDensity residue_density(const SymbolExpansion& A, int k);

// Res_k(A) = (2pi)^n * (mode 0 of the residue density), exact.
ExactScalar higher_residue(const SymbolExpansion& A, int k);

// validates that P is admissible for nabla_P: classical (log-degree 0) with
// scalar positive leading part c|xi|^m, c > 0, trig mode 0 only
void check_scalar_positive_leading(const SymbolExpansion& P);

// nabla_P^0 A = A, nabla_P^{j+1} A = [P, nabla_P^j A]; depth = lowest retained degree
SymbolExpansion nabla_P(const SymbolExpansion& A, const SymbolExpansion& P, int iterations,
                        const Rat& depth);

// Pushforward under y = (cO)x with O exactly orthogonal rational and c > 0:
// sigma(y,eta) = sigma_A((cO)^{-1}y, (cO)^t eta) = sum_t (log c)^t parts[t],
// each part exact in the basis. det_abs = c^n accounts for the image volume.
struct TransformedSymbol {
    Rat det_abs{1};
    Rat scale{1};
    std::vector<SymbolExpansion> parts;

    std::complex<double> eval(const std::vector<double>& y, const std::vector<double>& eta) const;
};

TransformedSymbol pushforward_linear(const SymbolExpansion& A, const RatMatrix& O, const Rat& c);

ExactScalar higher_residue(const TransformedSymbol& T, int k);

} // namespace logphg

#endif
