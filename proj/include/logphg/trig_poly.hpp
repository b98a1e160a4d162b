#ifndef LOGPHG_TRIG_POLY_HPP
#define LOGPHG_TRIG_POLY_HPP

#include <complex>
#include <map>
#include <vector>

#include "logphg/homogeneous.hpp"

namespace logphg {

// Finite Fourier series sum_m c_m e^{i<m,x>} on the torus T^n = (R/2piZ)^n.
// An empty mode map with dim 0 is the universal zero (compatible with any
// dimension); arithmetic promotes dimensions accordingly.
template <class S>
class TrigPolyT {
public:
    using Mode = std::vector<int>;

    TrigPolyT() = default;
    explicit TrigPolyT(int dim) : dim_(dim) {}

    static TrigPolyT constant(int dim, S c) {
        TrigPolyT p(dim);
        p.add_mode(Mode(static_cast<size_t>(dim), 0), std::move(c));
        return p;
    }

    static TrigPolyT harmonic(int dim, const Mode& m, S c) {
        TrigPolyT p(dim);
        p.add_mode(m, std::move(c));
        return p;
    }

    int dim() const { return dim_; }
    const std::map<Mode, S>& modes() const { return modes_; }
    bool is_zero() const { return modes_.empty(); }

    void add_mode(const Mode& m, S c) {
        if (c.is_zero()) return;
        auto it = modes_.find(m);
        if (it == modes_.end()) {
            modes_.emplace(m, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) modes_.erase(it);
        }
    }

    S mode0() const {
        if (is_zero()) return S{};
        auto it = modes_.find(Mode(static_cast<size_t>(dim_), 0));
        return it == modes_.end() ? S{} : it->second;
    }

    // torus integral = (2pi)^n * mode-0 coefficient; returned without the
    // (2pi)^n factor so callers can keep it exact.
    friend TrigPolyT operator+(const TrigPolyT& a, const TrigPolyT& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.dim_ != b.dim_) fail(errc::invalid_argument, "torus dimension mismatch");
        TrigPolyT out = a;
        for (const auto& [m, c] : b.modes_) out.add_mode(m, c);
        return out;
    }

    friend TrigPolyT operator-(const TrigPolyT& a) {
        TrigPolyT out(a.dim_);
        for (const auto& [m, c] : a.modes_) out.modes_.emplace(m, -c);
        return out;
    }

    friend TrigPolyT operator-(const TrigPolyT& a, const TrigPolyT& b) { return a + (-b); }

    friend TrigPolyT operator*(const TrigPolyT& a, const TrigPolyT& b) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        if (a.dim_ != b.dim_) fail(errc::invalid_argument, "torus dimension mismatch");
        TrigPolyT out(a.dim_);
        for (const auto& [ma, ca] : a.modes_)
            for (const auto& [mb, cb] : b.modes_) {
                Mode m = ma;
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                out.add_mode(m, ca * cb);
            }
        return out;
    }

    friend bool operator==(const TrigPolyT& a, const TrigPolyT& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.dim_ == b.dim_ && a.modes_ == b.modes_;
    }
    friend bool operator!=(const TrigPolyT& a, const TrigPolyT& b) { return !(a == b); }

    TrigPolyT scaled(const GaussRat& s) const {
        TrigPolyT out(dim_);
        if (s.is_zero()) return out;
        for (const auto& [m, c] : modes_) out.add_mode(m, c.scaled(s));
        return out;
    }

    template <class T>
    TrigPolyT scaled_by(const T& s) const {
        TrigPolyT out(dim_);
        for (const auto& [m, c] : modes_) out.add_mode(m, c * s);
        return out;
    }

    // d/dx_j multiplies mode m by i*m_j
    TrigPolyT deriv_x(int j) const {
        TrigPolyT out(dim_);
        for (const auto& [m, c] : modes_) {
            long mj = m[static_cast<size_t>(j)];
            if (mj == 0) continue;
            out.add_mode(m, c.scaled(GaussRat(rat(0), rat(mj))));
        }
        return out;
    }

    // complex conjugate: mode m -> -m with conjugated coefficient
    TrigPolyT cconj() const {
        TrigPolyT out(dim_);
        for (const auto& [m, c] : modes_) {
            Mode neg = m;
            for (int& v : neg) v = -v;
            out.add_mode(neg, c.cconj());
        }
        return out;
    }

    std::complex<double> eval(const std::vector<double>& x) const {
        std::complex<double> total{0.0, 0.0};
        for (const auto& [m, c] : modes_) {
            double phase = 0;
            for (size_t i = 0; i < m.size(); ++i) phase += m[i] * x[i];
            total += coeff_complex(c) * std::exp(std::complex<double>(0.0, phase));
        }
        return total;
    }

private:
    static std::complex<double> coeff_complex(const GaussRat& c) { return c.to_complex(); }
    static std::complex<double> coeff_complex(const ExactScalar& c) { return c.to_complex(); }

    int dim_ = 0;
    std::map<Mode, S> modes_;
};

using TrigPoly = TrigPolyT<GaussRat>;
using ExactTrigPoly = TrigPolyT<ExactScalar>;

template <>
struct sphere_lift_traits<TrigPoly> {
    using type = ExactTrigPoly;
    static type lift(const TrigPoly& c, const ExactScalar& s) {
        ExactTrigPoly out(c.dim());
        for (const auto& [m, g] : c.modes()) out.add_mode(m, s.scaled(g));
        return out;
    }
    static void accumulate(type& acc, const type& v) { acc = acc + v; }
};

} // namespace logphg

#endif
