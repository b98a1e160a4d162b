#ifndef LOGPHG_MULTI_INDEX_HPP
#define LOGPHG_MULTI_INDEX_HPP

#include <vector>

#include "logphg/rational.hpp"

namespace logphg {

using MultiIndex = std::vector<int>;

inline int mi_order(const MultiIndex& b) {
    int s = 0;
    for (int v : b) s += v;
    return s;
}

inline MultiIndex mi_zero(int n) { return MultiIndex(static_cast<size_t>(n), 0); }

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

inline Int mi_factorial(const MultiIndex& a) {
    Int f(1);
    for (int v : a) f *= factorial(static_cast<unsigned>(v));
    return f;
}

// All multi-indices of dimension n with |alpha| = total, lexicographic.
inline void mi_enumerate(int n, int total, std::vector<MultiIndex>& out) {
    MultiIndex cur(static_cast<size_t>(n), 0);
    // walk positions recursively
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rem - v);
        }
    };
    if (n <= 0) return;
    rec(rec, 0, total);
}

inline std::vector<MultiIndex> mi_all_of_order(int n, int total) {
    std::vector<MultiIndex> out;
    mi_enumerate(n, total, out);
    return out;
}

} // namespace logphg

#endif
