#ifndef LOGPHG_CIRCLE_HPP
#define LOGPHG_CIRCLE_HPP

#include <map>

#include "logphg/log_polyhom.hpp"

namespace logphg {

// Fourier series on S^1 with Gaussian-rational coefficients: m -> c_m e^{im theta}.
using FourierSeries = std::map<int, GaussRat>;

// Restriction of a homogeneous function on R^2\{0} to the unit circle,
// written as an exact finite Fourier series (monomials are trig polynomials).
FourierSeries restrict_to_circle(const ScalarHom& h);

// Inverse direction: the 0-homogeneous extension of a Fourier series times
// |xi|^degree, i.e. e^{im theta} -> ((xi_1 +- i xi_2)/|xi|)^|m|.
ScalarHom fourier_to_homogeneous(const FourierSeries& modes, const GaussRat& degree);

// Writes f in P^{-2,k}(R^2) as sum_j d/dx_j f_j with f_j in P^{-1,k}, exactly.
// Requires res_k(f) = 0; when res_{k-1}(f) != 0 the log-reduction trick
// k|x|^{-2}log^{k-1} = sum_j d/dx_j (x_j |x|^{-2} log^k) is applied first,
// then the circle Laplacian system is solved on exact Fourier modes.
// The output is re-differentiated and compared with f before returning.
std::vector<ScalarLph> divergence_decompose(const ScalarLph& f);

} // namespace logphg

#endif
