#include "logphg/family.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace logphg {

namespace {
using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
}

CutoffExpansion instantiate(const FamilyTemplate& F, const GaussRat& z) {
    std::map<int, ScalarLph> parts;
    for (const auto& t : F.terms) {
        GaussRat deg = z - GaussRat(t.offset);
        auto it = parts.find(t.offset);
        if (it == parts.end()) it = parts.emplace(t.offset, ScalarLph(F.dim, deg)).first;
        ScalarLph add = ScalarLph::monomial(F.dim, deg, t.beta, t.coeff, t.logpow);
        it->second = it->second.is_zero() ? add : it->second + add;
    }
    CutoffExpansion out;
    out.dim = F.dim;
    for (auto& [j, p] : parts)
        if (!p.is_zero()) out.parts.push_back(std::move(p));
    return out;
}

FamilyRegInt::FamilyRegInt(FamilyTemplate tmpl, double quad_tol)
    : tmpl_(std::move(tmpl)), quad_tol_(quad_tol) {
    const int n = tmpl_.dim;
    for (const auto& t : tmpl_.terms) {
        ExactScalar s = sphere_integral_monomial(t.beta, n).scaled(t.coeff);
        if (s.is_zero()) continue;
        auto key = std::make_pair(t.offset, t.logpow);
        auto it = sphere_.find(key);
        if (it == sphere_.end()) {
            sphere_.emplace(key, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) sphere_.erase(it);
        }
    }
    // Pole at nu = offset - n from the tail term
    // (-1)^{l+1} l! / (z+n-offset)^{l+1} * S_{offset,l}: Laurent coefficient of
    // order p = l+1 is (-1)^p (p-1)! S_{offset,p-1}.
    for (const auto& [key, S] : sphere_) {
        long nu = key.first - n;
        int p = key.second + 1;
        auto& mv = poles_[nu];
        mv.pole = nu;
        if (static_cast<int>(mv.laurent.size()) < p) mv.laurent.resize(static_cast<size_t>(p));
        ExactScalar coef = S.scaled(GaussRat(Rat(factorial(static_cast<unsigned>(p - 1)))));
        if (p % 2 != 0) coef = -coef;
        mv.laurent[static_cast<size_t>(p) - 1] += coef;
    }
    // drop poles whose Laurent data vanished entirely
    for (auto it = poles_.begin(); it != poles_.end();) {
        bool all_zero = true;
        for (const auto& c : it->second.laurent)
            if (!c.is_zero()) all_zero = false;
        it = all_zero ? poles_.erase(it) : std::next(it);
    }
}

std::complex<double> FamilyRegInt::evaluate(std::complex<double> z) const {
    const int n = tmpl_.dim;
    std::complex<double> total{0.0, 0.0};
    for (const auto& [key, S] : sphere_) {
        auto [offset, l] = key;
        std::complex<double> sval = S.to_complex();
        // head: int_{1/4}^{1} psi(r) r^{z-offset+n-1} log^l r dr
        std::complex<double> expo = z + std::complex<double>(n - offset - 1, 0.0);
        auto re_part = [&](double r) {
            return psi_cutoff(r) * std::pow(std::log(r), l) *
                   (std::exp(expo * std::log(r))).real();
        };
        auto im_part = [&](double r) {
            return psi_cutoff(r) * std::pow(std::log(r), l) *
                   (std::exp(expo * std::log(r))).imag();
        };
        std::complex<double> head{GK::integrate(re_part, 0.25, 1.0, 15, quad_tol_),
                                  GK::integrate(im_part, 0.25, 1.0, 15, quad_tol_)};
        total += sval * head;
        // tail: (-1)^{l+1} l! / (z+n-offset)^{l+1}
        std::complex<double> den = z + std::complex<double>(n - offset, 0.0);
        double lf = 1.0;
        for (int i = 2; i <= l; ++i) lf *= i;
        double sign = (l % 2 == 0) ? -1.0 : 1.0;
        total += sval * (sign * lf) / std::pow(den, l + 1);
    }
    return total;
}

FamilyRegInt family_reg_int(const FamilyTemplate& F, double quad_tol) {
    return FamilyRegInt(F, quad_tol);
}

FamilyTemplate mode0_slice(const SymbolFamilyTemplate& F) {
    FamilyTemplate out;
    out.dim = F.dim;
    for (const auto& t : F.terms) {
        GaussRat c = t.xcoeff.mode0();
        if (c.is_zero()) continue;
        out.terms.push_back({t.offset, t.logpow, t.beta, c});
    }
    return out;
}

SymbolExpansion instantiate_symbol(const SymbolFamilyTemplate& F, const GaussRat& z) {
    SymbolExpansion out(F.dim, z);
    for (const auto& t : F.terms) {
        GaussRat deg = z - GaussRat(t.offset);
        SymbolComponent c = SymbolComponent::monomial(F.dim, deg, t.beta, t.xcoeff, t.logpow);
        out.accumulate(t.offset, c);
    }
    return out;
}

FamilyRegInt family_TR(const SymbolFamilyTemplate& F, double quad_tol) {
    return family_reg_int(mode0_slice(F), quad_tol);
}

} // namespace logphg
