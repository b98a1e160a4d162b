#ifndef LOGPHG_LINEAR_HPP
#define LOGPHG_LINEAR_HPP

#include <vector>

#include "logphg/rational.hpp"

namespace logphg {

// Small dense matrix with exact rational entries.
struct RatMatrix {
    int n = 0;
    std::vector<Rat> a;  // row-major

    static RatMatrix identity(int n) {
        RatMatrix m{n, std::vector<Rat>(static_cast<size_t>(n) * n, Rat(0))};
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    RatMatrix transposed() const {
        RatMatrix t = *this;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.at(i, j) = at(j, i);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        RatMatrix z{x.n, std::vector<Rat>(static_cast<size_t>(x.n) * x.n, Rat(0))};
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k)
                for (int j = 0; j < x.n; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        return z;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        std::vector<Rat> w(static_cast<size_t>(n), Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return w;
    }

    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_orthogonal() const { return ((*this) * transposed()).is_identity(); }

    Rat det() const {  // Gaussian elimination, exact
        RatMatrix m = *this;
        Rat d(1);
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (m.at(r, c) != 0) { p = r; break; }
            if (p < 0) return Rat(0);
            if (p != c) {
                for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
                d = -d;
            }
            d *= m.at(c, c);
            Rat inv = 1 / m.at(c, c);
            for (int r = c + 1; r < n; ++r) {
                Rat f = m.at(r, c) * inv;
                if (f == 0) continue;
                for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
            }
        }
        return d;
    }
};

} // namespace logphg

#endif
