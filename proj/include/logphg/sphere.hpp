#ifndef LOGPHG_SPHERE_HPP
#define LOGPHG_SPHERE_HPP

#include "logphg/exact_scalar.hpp"
#include "logphg/multi_index.hpp"

namespace logphg {

// Integral of xi^beta over the unit sphere S^{n-1} with the standard volume
// form: 0 when any beta_i is odd, else 2 * prod Gamma((beta_i+1)/2) / Gamma((n+|beta|)/2),
// evaluated exactly as rational * pi^{q}. For n = 1 the "sphere" is the two
// points {-1,+1} with counting measure.
ExactScalar sphere_integral_monomial(const MultiIndex& beta, int n);

// vol(S^{n-1}) = sphere integral of the constant monomial.
ExactScalar sphere_volume(int n);

} // namespace logphg

#endif
