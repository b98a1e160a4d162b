#include "logphg/kv.hpp"

#include <cmath>
#include <set>

namespace logphg {

namespace {

void require_noninteger_order(const SymbolExpansion& A) {
    if (!A.order().is_real()) fail(errc::non_real_degree, "kv trace needs a real order");
    if (is_integer(A.order().re)) fail(errc::integer_order, "kv trace needs non-integer order");
}

} // namespace

ExactScalar KVDensity::exact_part(const std::vector<int>& mode) const {
    auto it = modes.find(mode);
    if (it == modes.end()) return ExactScalar{};
    GaussRat norm(Rat(1) / pow_int(Rat(2), dim));
    return (it->second.exact * ExactScalar::pi_power(-2L * dim, GaussRat(1))).scaled(norm);
}

std::complex<double> KVDensity::value(const std::vector<int>& mode) const {
    auto it = modes.find(mode);
    if (it == modes.end()) return {0.0, 0.0};
    return it->second.value() * std::pow(2.0 * M_PI, -dim);
}

CutoffExpansion symbol_mode_slice(const SymbolExpansion& A, const std::vector<int>& mode) {
    CutoffExpansion out;
    out.dim = A.dim();
    for (const auto& [j, comp] : A.components()) {
        ScalarLph part(A.dim(), comp.degree());
        for (int l = 0; l <= comp.log_degree(); ++l) {
            const auto& h = comp.component(l);
            if (h.is_zero()) continue;
            ScalarHom hs(A.dim(), comp.degree());
            for (const auto& [beta, c] : h.terms()) {
                auto it = c.modes().find(mode);
                if (it != c.modes().end()) hs.add_term(beta, it->second);
            }
            if (!hs.is_zero()) part.set_component(l, std::move(hs));
        }
        part.trim();
        if (!part.is_zero()) out.parts.push_back(std::move(part));
    }
    return out;
}

KVDensity kv_density(const SymbolExpansion& A, double quad_tol) {
    require_noninteger_order(A);
    KVDensity out;
    out.dim = A.dim();
    std::set<std::vector<int>> all_modes;
    for (const auto& [j, comp] : A.components())
        for (int l = 0; l <= comp.log_degree(); ++l)
            for (const auto& [beta, c] : comp.component(l).terms())
                for (const auto& [m, g] : c.modes()) all_modes.insert(m);
    for (const auto& m : all_modes) {
        CutoffExpansion slice = symbol_mode_slice(A, m);
        if (slice.parts.empty()) continue;
        out.modes.emplace(m, reg_int(slice, quad_tol));
    }
    return out;
}

RegIntValue kv_trace(const SymbolExpansion& A, double quad_tol) {
    require_noninteger_order(A);
    CutoffExpansion mean = symbol_mode_slice(A, std::vector<int>(static_cast<size_t>(A.dim()), 0));
    return reg_int(mean, quad_tol);
}

} // namespace logphg
