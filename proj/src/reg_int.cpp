#include "logphg/reg_int.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace logphg {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

void require_real_degrees(const CutoffExpansion& f) {
    for (const auto& p : f.parts)
        if (!p.degree().is_real())
            fail(errc::non_real_degree, "regularized integral needs real degrees");
}

// int r^{alpha-1} log^j r dr, antiderivative evaluated at r (alpha != 0)
double radial_antideriv(double alpha, int j, double r) {
    double lr = std::log(r);
    double ra = std::pow(r, alpha);
    double sum = 0.0;
    double jfac = 1.0;
    for (int i = 1; i <= j; ++i) jfac *= i;
    // sum_{i=0..j} (-1)^{j-i} j!/(i! alpha^{j-i+1}) log^i r
    double ifac = 1.0;
    for (int i = 0; i <= j; ++i) {
        if (i > 0) ifac *= i;
        double c = jfac / ifac * std::pow(alpha, -(j - i + 1));
        if ((j - i) % 2 != 0) c = -c;
        sum += c * std::pow(lr, i);
    }
    return ra * sum;
}

double radial_log_integral(double alpha, int j, double lo, double hi) {
    if (alpha == 0.0) {
        auto plp = [j](double r) { return std::pow(std::log(r), j + 1) / (j + 1); };
        return plp(hi) - plp(lo);
    }
    return radial_antideriv(alpha, j, hi) - radial_antideriv(alpha, j, lo);
}

double head_radial(double a_plus_n, int l, double quad_tol, double* err) {
    auto f = [=](double r) {
        return psi_cutoff(r) * std::pow(r, a_plus_n - 1.0) * std::pow(std::log(r), l);
    };
    double e = 0.0;
    double v = GK::integrate(f, 0.25, 1.0, 15, quad_tol, &e);
    if (err) *err += e;
    return v;
}

struct Mat {
    int n;
    std::vector<std::vector<double>> a;
};

std::vector<std::vector<double>> invert(const std::vector<std::vector<double>>& A) {
    size_t n = A.size();
    if (n == 1) {
        if (std::abs(A[0][0]) < 1e-300) fail(errc::singular_matrix, "1x1 matrix not invertible");
        return {{1.0 / A[0][0]}};
    }
    if (n == 2) {
        double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
        double scale = std::abs(A[0][0]) + std::abs(A[0][1]) + std::abs(A[1][0]) +
                       std::abs(A[1][1]);
        if (std::abs(det) < 1e-14 * std::max(1.0, scale * scale))
            fail(errc::singular_matrix, "2x2 matrix not invertible");
        return {{A[1][1] / det, -A[0][1] / det}, {-A[1][0] / det, A[0][0] / det}};
    }
    fail(errc::unsupported_dimension, "matrix transforms implemented for n <= 2");
}

std::vector<double> matvec(const std::vector<std::vector<double>>& A,
                           const std::vector<double>& v) {
    std::vector<double> w(A.size(), 0.0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) w[i] += A[i][j] * v[j];
    return w;
}

double det_abs(const std::vector<std::vector<double>>& A) {
    if (A.size() == 1) return std::abs(A[0][0]);
    return std::abs(A[0][0] * A[1][1] - A[0][1] * A[1][0]);
}

std::vector<std::vector<double>> unit_directions(int n, int count) {
    std::vector<std::vector<double>> dirs;
    if (n == 1) {
        dirs.push_back({1.0});
        dirs.push_back({-1.0});
    } else {
        dirs.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) {
            double th = 2.0 * M_PI * i / count;
            dirs.push_back({std::cos(th), std::sin(th)});
        }
    }
    return dirs;
}

} // namespace

void CutoffExpansion::validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].is_zero()) continue;
        if (parts[i].dim() != dim) fail(errc::invalid_argument, "part dimension mismatch");
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (!parts[j].is_zero() && parts[i].degree() == parts[j].degree())
                fail(errc::invalid_argument, "duplicate degree in expansion");
    }
}

int CutoffExpansion::log_degree() const {
    int k = 0;
    for (const auto& p : parts) k = std::max(k, p.log_degree());
    return k;
}

AsymptoticExpansion ball_integral_expansion(const CutoffExpansion& f, double quad_tol) {
    f.validate();
    require_real_degrees(f);
    const int n = f.dim;
    AsymptoticExpansion out;
    auto& constant = out.at(Rat(0), 0);
    for (const auto& part : f.parts) {
        if (part.is_zero()) continue;
        Rat alpha = part.degree().re + n;
        for (int l = 0; l <= part.log_degree(); ++l) {
            ExactScalar S = part.sphere_integral_level(l);
            if (S.is_zero()) continue;
            if (alpha != 0) {
                // int_1^R r^{alpha-1} log^l = R^alpha sum_j (-1)^{l-j} l!/(j! alpha^{l-j+1}) log^j R
                //                            - (-1)^l l!/alpha^{l+1}
                for (int j = 0; j <= l; ++j) {
                    Rat c = Rat(factorial(static_cast<unsigned>(l))) /
                            (Rat(factorial(static_cast<unsigned>(j))) * pow_int(alpha, l - j + 1));
                    if ((l - j) % 2 != 0) c = -c;
                    out.at(alpha, j).exact += S.scaled(GaussRat(c));
                }
                Rat c0 = Rat(factorial(static_cast<unsigned>(l))) / pow_int(alpha, l + 1);
                if (l % 2 == 0) c0 = -c0;
                constant.exact += S.scaled(GaussRat(c0));
            } else {
                out.at(Rat(0), l + 1).exact += S.scaled(GaussRat(rat(1, l + 1)));
            }
            // head over {1/4 <= |xi| <= 1}
            double err = 0.0;
            double h = head_radial(to_double(alpha), l, quad_tol, &err);
            constant.numeric += S.to_complex() * h;
            constant.err += err * std::abs(S.to_complex());
            constant.has_numeric = true;
        }
    }
    return out;
}

RegIntValue reg_int(const CutoffExpansion& f, double quad_tol) {
    AsymptoticExpansion ex = ball_integral_expansion(f, quad_tol);
    RegIntValue v;
    if (const auto* c = ex.find(Rat(0), 0)) {
        v.exact = c->exact;
        v.head = c->numeric;
        v.abs_err_bound = c->err;
    }
    return v;
}

double ball_integral_numeric(const CutoffExpansion& f, double R, double quad_tol) {
    f.validate();
    require_real_degrees(f);
    const int n = f.dim;
    std::complex<double> total{0.0, 0.0};
    for (const auto& part : f.parts) {
        if (part.is_zero()) continue;
        double apn = to_double(part.degree().re) + n;
        for (int l = 0; l <= part.log_degree(); ++l) {
            ExactScalar S = part.sphere_integral_level(l);
            if (S.is_zero()) continue;
            auto g = [=](double r) {
                return psi_cutoff(r) * std::pow(r, apn - 1.0) * std::pow(std::log(r), l);
            };
            double v = GK::integrate(g, 0.25, std::min(1.0, R), 15, quad_tol);
            if (R > 1.0) v += GK::integrate(g, 1.0, R, 15, quad_tol);
            total += S.to_complex() * v;
        }
    }
    return total.real();
}

std::vector<double> default_r_grid(double r_min, double r_max, int points) {
    std::vector<double> g(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i)
        g[static_cast<size_t>(i)] =
            r_min * std::pow(r_max / r_min, static_cast<double>(i) / (points - 1));
    return g;
}

NumericLimResult numeric_lim(const std::function<double(double)>& ball_values,
                             const std::vector<ExponentTerm>& basis,
                             const std::vector<double>& r_grid) {
    if (r_grid.size() < basis.size() + 2)
        fail(errc::invalid_argument, "grid must exceed basis size by at least 2");
    // deduplicate exponents
    std::vector<ExponentTerm> b;
    for (const auto& e : basis) {
        bool dup = false;
        for (const auto& o : b)
            if (o.alpha == e.alpha && o.logpow == e.logpow) dup = true;
        if (!dup) b.push_back(e);
    }
    const long rows = static_cast<long>(r_grid.size());
    const long cols = static_cast<long>(b.size());
    Eigen::MatrixXd M(rows, cols);
    Eigen::VectorXd y(rows);
    for (long i = 0; i < rows; ++i) {
        double R = r_grid[static_cast<size_t>(i)];
        y(i) = ball_values(R);
        for (long c = 0; c < cols; ++c) {
            const auto& e = b[static_cast<size_t>(c)];
            M(i, c) = std::pow(R, e.alpha) * std::pow(std::log(R), e.logpow);
        }
    }
    Eigen::VectorXd scale(cols);
    for (long c = 0; c < cols; ++c) {
        double nrm = M.col(c).norm();
        scale(c) = nrm > 0 ? nrm : 1.0;
        M.col(c) /= scale(c);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double cond = svd.singularValues()(0) / svd.singularValues()(cols - 1);
    if (cond > 1e10) fail(errc::ill_conditioned, "condition number " + std::to_string(cond));
    Eigen::VectorXd x = svd.solve(y);
    double resid = (M * x - y).norm() / std::max(1.0, y.norm());
    NumericLimResult res;
    res.cond = cond;
    res.residual = resid;
    res.misfit = resid > 1e-6;
    for (long c = 0; c < cols; ++c) {
        double v = x(c) / scale(c);
        res.coefficients.push_back(v);
        if (b[static_cast<size_t>(c)].alpha == 0.0 && b[static_cast<size_t>(c)].logpow == 0)
            res.constant = v;
    }
    return res;
}

double transformed_ball_integral(const CutoffExpansion& f,
                                 const std::vector<std::vector<double>>& A, double R,
                                 double quad_tol) {
    f.validate();
    require_real_degrees(f);
    const int n = f.dim;
    if (n > 2) fail(errc::unsupported_dimension, "transformed ball integral needs n <= 2");
    if (static_cast<int>(A.size()) != n) fail(errc::invalid_argument, "matrix size mismatch");

    auto value_at = [&](const std::vector<std::vector<double>>& dirs) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& u : dirs) {
            std::vector<double> Au = matvec(A, u);
            double s2 = 0.0;
            for (double v : Au) s2 += v * v;
            double s = std::sqrt(s2);
            double logs = std::log(s);
            for (const auto& part : f.parts) {
                if (part.is_zero()) continue;
                double alpha = to_double(part.degree().re) + n;
                for (int l = 0; l <= part.log_degree(); ++l) {
                    if (part.component(l).is_zero()) continue;
                    std::complex<double> gval =
                        part.component(l).eval_with([](const GaussRat& c) { return c.to_complex(); },
                                                    Au);
                    if (gval == std::complex<double>(0.0, 0.0)) continue;
                    // radial: int_0^R psi(rs) r^{alpha-1} (log r + log s)^l dr
                    double lo = 0.25 / s, hi = 0.5 / s;
                    auto g = [=](double r) {
                        return psi_cutoff(r * s) * std::pow(r, alpha - 1.0) *
                               std::pow(std::log(r) + logs, l);
                    };
                    double radial = GK::integrate(g, lo, std::min(hi, R), 12, quad_tol);
                    if (R > hi) {
                        for (int j = 0; j <= l; ++j) {
                            double binom = 1.0;
                            for (int i = 0; i < j; ++i)
                                binom = binom * (l - i) / (i + 1);
                            radial += binom * std::pow(logs, l - j) *
                                      radial_log_integral(alpha, j, hi, R);
                        }
                    }
                    acc += gval * radial;
                }
            }
        }
        return acc;
    };

    if (n == 1) return value_at(unit_directions(1, 0)).real();

    // periodic trapezoid in the angle, refined until stable
    int N = 64;
    std::complex<double> prev = value_at(unit_directions(2, N));
    prev *= 2.0 * M_PI / N;
    for (int it = 0; it < 8; ++it) {
        N *= 2;
        std::complex<double> cur = value_at(unit_directions(2, N));
        cur *= 2.0 * M_PI / N;
        double change = std::abs(cur - prev);
        prev = cur;
        if (change <= 1e-9 * std::max(1.0, std::abs(cur))) break;
    }
    return prev.real();
}

double transform_rule_rhs(const CutoffExpansion& f, const std::vector<std::vector<double>>& A,
                          double quad_tol) {
    f.validate();
    require_real_degrees(f);
    const int n = f.dim;
    if (n > 2) fail(errc::unsupported_dimension, "transformation rule implemented for n <= 2");
    auto Ainv = invert(A);
    double dabs = det_abs(A);

    double base = reg_int(f, quad_tol).real();

    // corrections: sum_l ((-1)^{l+1}/(l+1)) int_{S^{n-1}} f_{-n,l}(xi) log^{l+1}|A^{-1}xi| dxi
    const ScalarLph* fn = nullptr;
    for (const auto& part : f.parts)
        if (part.degree() == GaussRat(-static_cast<long>(n))) fn = &part;

    double corr = 0.0;
    if (fn) {
        auto correction_at = [&](const std::vector<std::vector<double>>& dirs, double weight) {
            std::complex<double> acc{0.0, 0.0};
            for (const auto& u : dirs) {
                std::vector<double> v = matvec(Ainv, u);
                double s2 = 0.0;
                for (double w : v) s2 += w * w;
                double loginv = 0.5 * std::log(s2);
                for (int l = 0; l <= fn->log_degree(); ++l) {
                    if (fn->component(l).is_zero()) continue;
                    std::complex<double> gval = fn->component(l).eval_with(
                        [](const GaussRat& c) { return c.to_complex(); }, u);
                    double sign = (l % 2 == 0) ? -1.0 : 1.0;  // (-1)^{l+1}
                    acc += gval * (sign / (l + 1) * std::pow(loginv, l + 1));
                }
            }
            return acc * weight;
        };
        if (n == 1) {
            corr = correction_at(unit_directions(1, 0), 1.0).real();
        } else {
            int N = 64;
            std::complex<double> prev = correction_at(unit_directions(2, N), 2.0 * M_PI / N);
            for (int it = 0; it < 8; ++it) {
                N *= 2;
                std::complex<double> cur = correction_at(unit_directions(2, N), 2.0 * M_PI / N);
                double change = std::abs(cur - prev);
                prev = cur;
                if (change <= 1e-9 * std::max(1.0, std::abs(cur))) break;
            }
            corr = prev.real();
        }
    }
    return (base + corr) / dabs;
}

} // namespace logphg
