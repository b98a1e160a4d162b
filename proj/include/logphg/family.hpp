#ifndef LOGPHG_FAMILY_HPP
#define LOGPHG_FAMILY_HPP

#include "logphg/reg_int.hpp"
#include "logphg/symbol.hpp"

namespace logphg {

// Holomorphic family template: finite sum of terms
//   coeff * xi^beta |xi|^{(z-offset)-|beta|} log^logpow|xi|
// cutoff by psi; the degree parameter z is the family variable.
struct FamilyTerm {
    int offset = 0;
    int logpow = 0;
    MultiIndex beta;
    GaussRat coeff;
};

struct FamilyTemplate {
    int dim = 0;
    std::vector<FamilyTerm> terms;

    int log_degree() const {
        int k = 0;
        for (const auto& t : terms) k = std::max(k, t.logpow);
        return k;
    }
};

CutoffExpansion instantiate(const FamilyTemplate& F, const GaussRat& z);

// Laurent data of I(z) at an integer pole: laurent[p-1] is the exact
// coefficient of (z - pole)^{-p}, p = 1..k+1.
struct MeromorphicValue {
    long pole = 0;
    std::vector<ExactScalar> laurent;

    const ExactScalar& res(int p) const {
        static const ExactScalar zero{};
        if (p < 1 || p > static_cast<int>(laurent.size())) return zero;
        return laurent[static_cast<size_t>(p) - 1];
    }
};

// I(z) = reg int of the instantiated family: meromorphic with poles in Z of
// order <= k+1. Pole data exact (partial fractions of the tail terms); the
// evaluator combines the entire head (complex quadrature) with the exact
// tail, valid at any non-pole z.
class FamilyRegInt {
public:
    FamilyRegInt(FamilyTemplate tmpl, double quad_tol);

    const std::map<long, MeromorphicValue>& poles() const { return poles_; }
    const MeromorphicValue* pole(long nu) const {
        auto it = poles_.find(nu);
        return it == poles_.end() ? nullptr : &it->second;
    }

    std::complex<double> evaluate(std::complex<double> z) const;

    const FamilyTemplate& tmpl() const { return tmpl_; }

private:
    FamilyTemplate tmpl_;
    double quad_tol_;
    // sphere integrals S_{offset, logpow}, exact and z-independent
    std::map<std::pair<int, int>, ExactScalar> sphere_;
    std::map<long, MeromorphicValue> poles_;
};

FamilyRegInt family_reg_int(const FamilyTemplate& F, double quad_tol = 1e-12);

// Symbol-valued family on T^n: fixed trig-polynomial x-dependence, degrees
// z - offset. TR(A(z)) reduces to the regularized integral of the x-mean.
struct SymbolFamilyTerm {
    int offset = 0;
    int logpow = 0;
    MultiIndex beta;
    TrigPoly xcoeff;
};

struct SymbolFamilyTemplate {
    int dim = 0;
    std::vector<SymbolFamilyTerm> terms;
};

FamilyTemplate mode0_slice(const SymbolFamilyTemplate& F);
SymbolExpansion instantiate_symbol(const SymbolFamilyTemplate& F, const GaussRat& z);

// TR along the family; poles and Laurent data exact, evaluator numeric.
FamilyRegInt family_TR(const SymbolFamilyTemplate& F, double quad_tol = 1e-12);

} // namespace logphg

#endif
