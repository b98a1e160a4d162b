#ifndef LOGPHG_KV_HPP
#define LOGPHG_KV_HPP

#include "logphg/reg_int.hpp"
#include "logphg/symbol.hpp"

namespace logphg {

// Density of the canonical trace: x -> (2pi)^{-n} reg-int of a(x,x,xi) d xi,
// stored per trig mode as the plain reg-int value (exact tail + numeric
// head); the (2pi)^{-n} normalization is applied by the accessors.
struct KVDensity {
    int dim = 0;
    std::map<std::vector<int>, RegIntValue> modes;

    // exact tail of the density coefficient at `mode` (includes (2pi)^{-n})
    ExactScalar exact_part(const std::vector<int>& mode) const;
    std::complex<double> value(const std::vector<int>& mode) const;
};

// Requires real non-integer order (so no component degree reaches -n).
KVDensity kv_density(const SymbolExpansion& A, double quad_tol = 1e-12);

// TR(A) = integral over T^n of the density = reg-int of the x-mean symbol.
RegIntValue kv_trace(const SymbolExpansion& A, double quad_tol = 1e-12);

// The mode-m xi-slice of a symbol as a cutoff expansion (helper shared with
// the kv computations and tests).
CutoffExpansion symbol_mode_slice(const SymbolExpansion& A, const std::vector<int>& mode);

} // namespace logphg

#endif
