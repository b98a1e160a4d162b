#ifndef LOGPHG_REG_INT_HPP
#define LOGPHG_REG_INT_HPP

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "logphg/cutoff.hpp"
#include "logphg/log_polyhom.hpp"

namespace logphg {

// A finite log-polyhomogeneous expansion psi(|xi|) * sum_j f_{a-j}(xi), the
// x-independent object the regularized integral acts on. Parts carry their
// own degrees (distinct, same dimension).
struct CutoffExpansion {
    int dim = 0;
    std::vector<ScalarLph> parts;

    void validate() const;
    int log_degree() const;
};

// Asymptotic expansion of the ball integral as R -> infinity:
// sum over (alpha, l) of coeff * R^alpha log^l R. Coefficients are exact
// except the R^0 log^0 slot, which carries the numeric head integral
// over {|xi| <= 1}.
struct AsymptoticExpansion {
    struct Coef {
        ExactScalar exact;
        std::complex<double> numeric{0.0, 0.0};
        double err = 0.0;
        bool has_numeric = false;
    };
    std::map<std::pair<Rat, int>, Coef> coeffs;

    const Coef* find(const Rat& alpha, int l) const {
        auto it = coeffs.find({alpha, l});
        return it == coeffs.end() ? nullptr : &it->second;
    }
    Coef& at(const Rat& alpha, int l) { return coeffs[{alpha, l}]; }
};

AsymptoticExpansion ball_integral_expansion(const CutoffExpansion& f, double quad_tol = 1e-12);

// Regularized integral: the constant term p_0(0) of the ball expansion.
// Tail part exact, head part numeric radial quadrature times exact sphere
// integrals.
struct RegIntValue {
    ExactScalar exact;                  // tail contribution, exact
    std::complex<double> head{0.0, 0.0};  // numeric head over {|xi| <= 1}
    double abs_err_bound = 0.0;

    std::complex<double> value() const { return exact.to_complex() + head; }
    double real() const { return value().real(); }
};

RegIntValue reg_int(const CutoffExpansion& f, double quad_tol = 1e-12);

// Direct quadrature of the ball integral (no closed-form tail): the sampler
// used by the fit oracle below and by cross-checks against reg_int.
double ball_integral_numeric(const CutoffExpansion& f, double R, double quad_tol = 1e-12);

// Least-squares extraction of the constant term from samples of a ball
// integral, fitting in the basis {R^alpha log^l R}. Independent oracle for
// p_0(0); reports conditioning and misfit.
struct NumericLimResult {
    double constant = 0.0;
    double cond = 0.0;
    double residual = 0.0;
    bool misfit = false;
    std::vector<double> coefficients;
};

struct ExponentTerm {
    double alpha;
    int logpow;
};

NumericLimResult numeric_lim(const std::function<double(double)>& ball_values,
                             const std::vector<ExponentTerm>& basis,
                             const std::vector<double>& r_grid);

std::vector<double> default_r_grid(double r_min = 10.0, double r_max = 1e4, int points = 24);

// sum_j d/dx_j-free: right-hand side of the GL(n) transformation rule,
// |det A|^{-1} ( reg_int(f) + sum_l ((-1)^{l+1}/(l+1)) int_{S^{n-1}} f_{-n,l}(xi)
// log^{l+1}|A^{-1}xi| dxi ). Sphere quadrature exact for n=1, refined
// periodic rule for n=2.
double transform_rule_rhs(const CutoffExpansion& f, const std::vector<std::vector<double>>& A,
                          double quad_tol = 1e-12);

// Ball integral of xi -> f(A xi) over {|xi| <= R}, computed numerically
// (polar angle quadrature; the radial factor handled by exact antiderivatives
// away from the cutoff transition). The left-hand side of the transformation
// rule, fed to numeric_lim.
double transformed_ball_integral(const CutoffExpansion& f,
                                 const std::vector<std::vector<double>>& A, double R,
                                 double quad_tol = 1e-12);

} // namespace logphg

#endif
