#include "logphg/heat.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>

#include "logphg/parallel.hpp"

namespace logphg {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr double kExpCut = 46.0;  // e^{-46} ~ 1e-20 per dropped term

struct Kahan {
    double sum = 0.0;
    double c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double RadialProfile::eval(double r) const {
    double ps = psi_cutoff(r);
    if (ps == 0.0) return 0.0;
    double lr = std::log(r);
    double total = 0.0;
    for (const auto& t : terms) {
        if (!t.coeff.is_real()) fail(errc::invalid_argument, "profile evaluation needs real coeffs");
        total += to_double(t.coeff.re) * std::pow(r, to_double(t.degree)) * std::pow(lr, t.logpow);
    }
    return ps * total;
}

int RadialProfile::log_degree() const {
    int k = 0;
    for (const auto& t : terms) k = std::max(k, t.logpow);
    return k;
}

Rat RadialProfile::order() const {
    if (terms.empty()) fail(errc::invalid_argument, "empty profile");
    Rat m = terms.front().degree;
    for (const auto& t : terms)
        if (t.degree > m) m = t.degree;
    return m;
}

CutoffExpansion RadialProfile::as_cutoff_expansion(int dim) const {
    std::map<Rat, ScalarLph> by_degree;
    for (const auto& t : terms) {
        GaussRat deg(t.degree);
        auto it = by_degree.find(t.degree);
        if (it == by_degree.end()) it = by_degree.emplace(t.degree, ScalarLph(dim, deg)).first;
        ScalarLph add = ScalarLph::norm_power(dim, deg, t.coeff, t.logpow);
        it->second = it->second.is_zero() ? add : it->second + add;
    }
    CutoffExpansion out;
    out.dim = dim;
    for (auto& [d, p] : by_degree)
        if (!p.is_zero()) out.parts.push_back(std::move(p));
    return out;
}

double EllipticProfile::eval(double r) const {
    double total = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) total = total * r + to_double(coeffs[i]);
    return total;
}

void EllipticProfile::validate() const {
    if (coeffs.empty() || coeffs.back() <= 0)
        fail(errc::invalid_argument, "elliptic profile needs a positive leading coefficient");
    for (const auto& c : coeffs)
        if (c < 0) fail(errc::invalid_argument, "elliptic profile needs nonnegative coefficients");
}

double heat_trace_lattice(const MultiplierModel& model, double t) {
    if (t <= 0) fail(errc::invalid_argument, "t must be positive");
    model.p.validate();
    const int m = model.p.order();
    double lead = to_double(model.p.coeffs.back());
    double rmax = std::pow(kExpCut / (t * lead), 1.0 / m) + 2.0;
    long K = static_cast<long>(rmax) + 1;
    Kahan acc;
    if (model.dim == 1) {
        for (long k = -K; k <= K; ++k) {
            double r = std::abs(static_cast<double>(k));
            double pv = model.p.eval(r);
            if (t * pv > kExpCut) continue;
            double qv = model.q.eval(r);
            if (qv == 0.0) continue;
            acc.add(qv * std::exp(-t * pv));
        }
    } else if (model.dim == 2) {
        for (long k1 = -K; k1 <= K; ++k1) {
            for (long k2 = -K; k2 <= K; ++k2) {
                double r = std::hypot(static_cast<double>(k1), static_cast<double>(k2));
                double pv = model.p.eval(r);
                if (t * pv > kExpCut) continue;
                double qv = model.q.eval(r);
                if (qv == 0.0) continue;
                acc.add(qv * std::exp(-t * pv));
            }
        }
    } else {
        fail(errc::unsupported_dimension, "lattice traces implemented for n <= 2");
    }
    return acc.sum;
}

double heat_trace_continuum(const MultiplierModel& model, double t, double quad_tol) {
    if (t <= 0) fail(errc::invalid_argument, "t must be positive");
    model.p.validate();
    const int n = model.dim;
    const int m = model.p.order();
    double lead = to_double(model.p.coeffs.back());
    double rmax = std::pow(kExpCut / (t * lead), 1.0 / m) + 2.0;
    double sphere = sphere_volume(n).to_real();
    auto f = [&](double r) {
        return model.q.eval(r) * std::exp(-t * model.p.eval(r)) * std::pow(r, n - 1);
    };
    // split at 1 so the quadrature sees the cutoff transition separately
    double v = GK::integrate(f, 0.25, 1.0, 15, quad_tol);
    v += GK::integrate(f, 1.0, rmax, 15, quad_tol);
    return sphere * v;
}

bool FittedExpansion::has(double alpha, int logpow) const {
    for (const auto& b : basis)
        if (b.alpha == alpha && b.logpow == logpow) return true;
    return false;
}

double FittedExpansion::coefficient(double alpha, int logpow) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].alpha == alpha && basis[i].logpow == logpow) return coefficients[i];
    fail(errc::basis_missing, "no basis slot t^" + std::to_string(alpha) + " log^" +
                                  std::to_string(logpow));
}

FittedExpansion fit_expansion(const std::vector<std::pair<double, double>>& samples,
                              const std::vector<HeatBasisTerm>& basis) {
    if (samples.size() < basis.size() + 4)
        fail(errc::invalid_argument, "need at least |basis| + 4 samples");
    using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    // deduplicate
    std::vector<HeatBasisTerm> b;
    for (const auto& e : basis) {
        bool dup = false;
        for (const auto& o : b)
            if (o.alpha == e.alpha && o.logpow == e.logpow) dup = true;
        if (!dup) b.push_back(e);
    }
    const long rows = static_cast<long>(samples.size());
    const long cols = static_cast<long>(b.size());
    LMat M(rows, cols);
    LVec y(rows);
    for (long i = 0; i < rows; ++i) {
        long double t = samples[static_cast<size_t>(i)].first;
        long double lt = std::log(t);
        y(i) = samples[static_cast<size_t>(i)].second;
        for (long c = 0; c < cols; ++c) {
            const auto& e = b[static_cast<size_t>(c)];
            M(i, c) = std::pow(t, static_cast<long double>(e.alpha)) * std::pow(lt, e.logpow);
        }
    }
    LVec scale(cols);
    for (long c = 0; c < cols; ++c) {
        long double nrm = M.col(c).norm();
        scale(c) = nrm > 0 ? nrm : 1.0L;
        M.col(c) /= scale(c);
    }
    Eigen::JacobiSVD<LMat> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    long double cond = svd.singularValues()(0) / svd.singularValues()(cols - 1);
    if (cond > 1e12L)
        fail(errc::ill_conditioned, "condition number " + std::to_string(static_cast<double>(cond)));
    LVec x = svd.solve(y);
    long double resid = (M * x - y).norm() / std::max<long double>(1.0L, y.norm());
    FittedExpansion out;
    out.basis = b;
    out.cond = static_cast<double>(cond);
    out.residual = static_cast<double>(resid);
    for (long c = 0; c < cols; ++c)
        out.coefficients.push_back(static_cast<double>(x(c) / scale(c)));
    return out;
}

std::vector<HeatBasisTerm> auto_basis(const MultiplierModel& model) {
    model.p.validate();
    const int n = model.dim;
    const int m = model.p.order();
    const int k = model.q.log_degree();
    Rat a = model.q.order();
    std::vector<std::pair<Rat, bool>> slots;  // exponent, from the symbol lattice
    for (int j = 0;; ++j) {
        Rat e = (Rat(j) - a - Rat(n)) / Rat(m);
        if (e > 1) break;
        slots.emplace_back(e, true);
    }
    slots.emplace_back(Rat(0), true);
    slots.emplace_back(Rat(1), true);
    std::vector<HeatBasisTerm> basis;
    auto add = [&basis](double alpha, int lmax) {
        for (int l = 0; l <= lmax; ++l) {
            bool dup = false;
            for (const auto& e : basis)
                if (e.alpha == alpha && e.logpow == l) dup = true;
            if (!dup) basis.push_back({alpha, l});
        }
    };
    for (const auto& [e, lattice] : slots) {
        (void)lattice;
        bool integer_slot = is_integer(e) && e >= 0;
        add(to_double(e), integer_slot ? k + 1 : k);
    }
    return basis;
}

std::vector<double> default_t_grid(double t_min, double t_max, int points) {
    std::vector<double> g(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i)
        g[static_cast<size_t>(i)] =
            t_min * std::pow(t_max / t_min, static_cast<double>(i) / (points - 1));
    return g;
}

std::vector<std::pair<double, double>> heat_samples_lattice(const MultiplierModel& model,
                                                            const std::vector<double>& t_grid,
                                                            int threads) {
    std::vector<std::pair<double, double>> out(t_grid.size());
    parallel_for(t_grid.size(), threads, [&](size_t i) {
        out[i] = {t_grid[i], heat_trace_lattice(model, t_grid[i])};
    });
    return out;
}

std::vector<std::pair<double, double>> heat_samples_continuum(const MultiplierModel& model,
                                                              const std::vector<double>& t_grid,
                                                              int threads, double quad_tol) {
    std::vector<std::pair<double, double>> out(t_grid.size());
    parallel_for(t_grid.size(), threads, [&](size_t i) {
        out[i] = {t_grid[i], heat_trace_continuum(model, t_grid[i], quad_tol)};
    });
    return out;
}

double res_from_fit(const FittedExpansion& fit, int m, int k) {
    double c = fit.coefficient(0.0, k + 1);
    double scale = (k + 1) * std::pow(static_cast<double>(m), k + 1);
    for (int i = 2; i <= k + 1; ++i) scale *= i;
    if (k % 2 == 0) scale = -scale;  // (-1)^{k+1}
    return scale * c;
}

double tr_from_fit(const FittedExpansion& fit) { return fit.coefficient(0.0, 0); }

ZetaLaurent zeta_laurent_from_heat(const FittedExpansion& fit, const Rat& a, int n, int m, int j,
                                   int k) {
    Rat e = (Rat(j) - a - Rat(n)) / Rat(m);
    ZetaLaurent out;
    out.order = k + 1;
    if (is_integer(e) && e >= 0) {
        long e_int = e.get_num().get_si();
        out.s0 = -static_cast<double>(e_int);
        double c = fit.coefficient(to_double(e), k + 1);
        double fac = 1.0;
        for (long i = 2; i <= e_int; ++i) fac *= static_cast<double>(i);
        for (int i = 2; i <= k + 1; ++i) fac *= i;
        double sign = ((k + e_int + 1) % 2 == 0) ? 1.0 : -1.0;
        out.res_top = sign * fac * c;
    } else {
        out.s0 = -to_double(e);
        double c = fit.coefficient(to_double(e), k);
        double fac = 1.0;
        for (int i = 2; i <= k; ++i) fac *= i;
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        out.res_top = sign / std::tgamma(out.s0) * fac * c;
    }
    return out;
}

double lattice_sum(const MultiplierModel& model) {
    const int n = model.dim;
    Rat a = model.q.order();
    if (a >= -n) fail(errc::invalid_argument, "lattice sum needs order < -n");
    if (n != 1) fail(errc::unsupported_dimension, "direct lattice sum implemented for n = 1");
    // midpoint tail: sum_{k>K} f(k) ~ int_{K+1/2}^inf f(r) dr, error O(f'(K))
    const long K = 100000;
    Kahan acc;
    for (long k = 1; k <= K; ++k) acc.add(2.0 * model.q.eval(static_cast<double>(k)));
    const double edge = static_cast<double>(K) + 0.5;
    double lr = std::log(edge);
    for (const auto& t : model.q.terms) {
        // int_edge^inf r^{deg} log^l r dr, deg < -1
        double alpha = to_double(t.degree) + 1.0;
        double jfac = 1.0;
        for (int i = 2; i <= t.logpow; ++i) jfac *= i;
        double sum = 0.0;
        double ifac = 1.0;
        for (int i = 0; i <= t.logpow; ++i) {
            if (i > 0) ifac *= i;
            double c = jfac / ifac * std::pow(alpha, -(t.logpow - i + 1));
            if ((t.logpow - i) % 2 != 0) c = -c;
            sum += c * std::pow(lr, i);
        }
        acc.add(-2.0 * to_double(t.coeff.re) * std::pow(edge, alpha) * sum);
    }
    return acc.sum;
}

} // namespace logphg
