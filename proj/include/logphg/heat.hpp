#ifndef LOGPHG_HEAT_HPP
#define LOGPHG_HEAT_HPP

#include <utility>
#include <vector>

#include "logphg/reg_int.hpp"

namespace logphg {

// Radial multiplier profile q(|xi|) = psi(|xi|) * sum_i coeff_i |xi|^{deg_i} log^{l_i}|xi|.
// Coefficients and degrees are exact so the same object feeds both the float
// lattice sums and the exact regularized integral.
struct ProfileTerm {
    GaussRat coeff;
    Rat degree;
    int logpow = 0;
};

struct RadialProfile {
    std::vector<ProfileTerm> terms;

    double eval(double r) const;
    int log_degree() const;
    Rat order() const;  // max degree
    CutoffExpansion as_cutoff_expansion(int dim) const;
};

// Positive elliptic comparison profile p(|xi|) = sum_i coeffs[i] |xi|^i with
// nonnegative coefficients and positive leading coefficient.
struct EllipticProfile {
    std::vector<Rat> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double r) const;
    void validate() const;
};

struct MultiplierModel {
    int dim = 1;
    RadialProfile q;
    EllipticProfile p;
};

// Tr(A e^{-tP}) in the lattice model: sum over kappa in Z^n of
// q(kappa) e^{-t p(kappa)}, truncated where t p(kappa) > 46, compensated
// summation, deterministic.
double heat_trace_lattice(const MultiplierModel& model, double t);

// Continuum comparison: int_{R^n} q(xi) e^{-t p(xi)} dxi as exact sphere
// factor times adaptive radial quadrature.
double heat_trace_continuum(const MultiplierModel& model, double t, double quad_tol = 1e-10);

// basis element t^alpha log^l t
struct HeatBasisTerm {
    double alpha;
    int logpow;
};

struct FittedExpansion {
    std::vector<HeatBasisTerm> basis;
    std::vector<double> coefficients;
    double residual = 0.0;
    double cond = 0.0;

    bool has(double alpha, int logpow) const;
    double coefficient(double alpha, int logpow) const;  // BasisMissing if absent
};

// Least squares in {t^alpha log^l t} on a geometric t-grid; long double
// internally, column scaling, condition number reported; IllConditioned above 1e12.
FittedExpansion fit_expansion(const std::vector<std::pair<double, double>>& samples,
                              const std::vector<HeatBasisTerm>& basis);

// The exponent lattice {(j - a - n)/m : j in Z_+} with Z_+ merged in,
// truncated at t^1; log powers bounded by k at non-integer slots and k+1 at
// nonnegative-integer slots.
std::vector<HeatBasisTerm> auto_basis(const MultiplierModel& model);

std::vector<double> default_t_grid(double t_min = 1e-5, double t_max = 1e-1, int points = 40);

// Heat-trace samples over a t-grid (lattice or continuum), optionally in parallel.
std::vector<std::pair<double, double>> heat_samples_lattice(const MultiplierModel& model,
                                                            const std::vector<double>& t_grid,
                                                            int threads = 0);
std::vector<std::pair<double, double>> heat_samples_continuum(const MultiplierModel& model,
                                                              const std::vector<double>& t_grid,
                                                              int threads = 0,
                                                              double quad_tol = 1e-10);

// Res_k extracted from a fitted heat expansion for order-m P. The scaling
// (k+1) (k+1)! m^{k+1} (-1)^{k+1} matches the sphere-integral normalization
// of the residue density, so this agrees with the local formula.
double res_from_fit(const FittedExpansion& fit, int m, int k);

// canonical-trace value: the t^0 log^0 coefficient
double tr_from_fit(const FittedExpansion& fit);

// Laurent transform of fitted heat coefficients into zeta data at the pole
// attached to the exponent slot e = (j - a - n)/m:
//   e not in Z_+ : Res_{k+1} zeta(s0) = (-1)^k / Gamma(s0) * k! * c(e, k), s0 = -e
//   e in Z_+     : Res_{k+1} zeta(-e) = (-1)^{k+e+1} e! (k+1)! * c(e, k+1)
struct ZetaLaurent {
    double s0 = 0.0;
    int order = 0;        // the Laurent order k+1 transformed
    double res_top = 0.0; // Res_{k+1} zeta at s0
};

ZetaLaurent zeta_laurent_from_heat(const FittedExpansion& fit, const Rat& a, int n, int m, int j,
                                   int k);

// direct lattice sum of q over Z^n (convergent for order < -n)
double lattice_sum(const MultiplierModel& model);

} // namespace logphg

#endif
