#include "logphg/cutoff.hpp"

#include <cmath>

namespace logphg {

double psi_cutoff(double r) {
    if (r <= 0.25) return 0.0;
    if (r >= 0.5) return 1.0;
    double s = 4.0 * r - 1.0;
    double a = std::exp(-1.0 / s);
    double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

} // namespace logphg
