#ifndef LOGPHG_CUTOFF_HPP
#define LOGPHG_CUTOFF_HPP

namespace logphg {

// The fixed radial cutoff: psi(r) = 0 for r <= 1/4, 1 for r >= 1/2, smooth
// monotone transition h(4r-1) in between with
// h(s) = e^{-1/s} / (e^{-1/s} + e^{-1/(1-s)}).
double psi_cutoff(double r);

} // namespace logphg

#endif
