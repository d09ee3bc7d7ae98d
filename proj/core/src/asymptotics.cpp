#include "uncover/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "uncover/errors.hpp"
#include "uncover/quadrature.hpp"
#include "uncover/special.hpp"

namespace uncover {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrt2Pi = 2.50662827463100050242;

double quad_value(const QuadratureResult& r, const char* what) {
    if (!r.converged) {
        throw internal_error(std::string(what) + ": quadrature stalled, achieved absolute error " +
                             std::to_string(r.abs_error));
    }
    return r.value;
}

}  // namespace

LimitLaw LimitLaw::central(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("LimitLaw::central: alpha must lie in (0,1)");
    }
    LimitLaw law;
    law.regime = Regime::Central;
    law.alpha = alpha;
    return law;
}

LimitLaw LimitLaw::subcritical_gamma() {
    LimitLaw law;
    law.regime = Regime::SubcriticalGamma;
    return law;
}

LimitLaw LimitLaw::critical(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("LimitLaw::critical: c must be positive");
    LimitLaw law;
    law.regime = Regime::Critical;
    law.c = c;
    return law;
}

LimitLaw LimitLaw::supercritical_cont() {
    LimitLaw law;
    law.regime = Regime::SupercriticalCont;
    return law;
}

LimitLaw LimitLaw::supercritical_fixed(int d) {
    if (d < 1) throw std::invalid_argument("LimitLaw::supercritical_fixed: d must be >= 1");
    LimitLaw law;
    law.regime = Regime::SupercriticalFixed;
    law.d = d;
    return law;
}

double LimitLaw::pmf(long m) const {
    switch (regime) {
        case Regime::Central:
            return central_limit_pmf(alpha, m);
        case Regime::SupercriticalFixed:
            return borel_type_pmf(d, m);
        default:
            throw std::invalid_argument("LimitLaw::pmf: law is continuous");
    }
}

double LimitLaw::density(double x) const { return limit_density(*this, x); }

double limit_covariance(double s, double t) {
    if (!(0.0 <= s && s <= t && t <= 1.0)) {
        throw std::invalid_argument("limit_covariance: arguments must satisfy 0 <= s <= t <= 1");
    }
    return s * s * (1.0 - t);
}

LimitProcessPath sample_limit_process(const std::vector<double>& grid, RngStream& rng) {
    LimitProcessPath path;
    path.grid = grid;
    if (grid.empty()) return path;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] < 1.0)) {
            throw std::invalid_argument("sample_limit_process: grid points must lie in (0,1)");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("sample_limit_process: grid must be strictly increasing");
        }
    }

    const auto m = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd cov(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            double v = limit_covariance(grid[static_cast<std::size_t>(j)], grid[static_cast<std::size_t>(i)]);
            cov(i, j) = v;
            cov(j, i) = v;
        }
    }

    // Tight grids make the covariance numerically semi-definite; escalate a
    // diagonal jitter by decades up to the reporting cap before giving up.
    Eigen::LLT<Eigen::MatrixXd> llt;
    double jitter = 0.0;
    for (;;) {
        Eigen::MatrixXd work = cov;
        if (jitter > 0.0) work.diagonal().array() += jitter;
        llt.compute(work);
        if (llt.info() == Eigen::Success) break;
        jitter = (jitter == 0.0) ? 1e-15 : jitter * 10.0;
        if (jitter > 1e-12) {
            throw internal_error("sample_limit_process: covariance not positive definite with jitter up to 1e-12");
        }
    }
    path.jitter_used = jitter;

    Eigen::VectorXd z(m);
    for (Eigen::Index i = 0; i < m; ++i) z(i) = rng.normal();
    Eigen::VectorXd values = llt.matrixL() * z;
    path.values.assign(values.data(), values.data() + m);
    return path;
}

double central_limit_pmf(double alpha, long m) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("central_limit_pmf: alpha must lie in (0,1)");
    }
    if (m < 0) throw std::invalid_argument("central_limit_pmf: m must be nonnegative");
    if (m == 0) return 1.0 - alpha;
    double dm = static_cast<double>(m);
    return std::exp(dm * std::log(dm) - log_factorial(dm) + std::log1p(-alpha) + dm * std::log(alpha) -
                    alpha * dm);
}

double limit_density(const LimitLaw& law, double x) {
    switch (law.regime) {
        case LimitLaw::Regime::SubcriticalGamma: {
            if (x <= 0.0) return 0.0;
            return std::exp(-0.5 * x) / (kSqrt2Pi * std::sqrt(x));
        }
        case LimitLaw::Regime::Critical: {
            if (x <= 0.0 || x >= 1.0) return 0.0;
            double w = 1.0 - x;
            double expo = -law.c * law.c * x / (2.0 * w);
            if (expo < -745.0) return 0.0;  // underflows before w^{3/2} can overflow
            return law.c / (kSqrt2Pi * std::sqrt(x) * w * std::sqrt(w)) * std::exp(expo);
        }
        case LimitLaw::Regime::SupercriticalCont: {
            if (x <= 0.0) return 0.0;
            double expo = -0.5 / x;
            if (expo < -745.0) return 0.0;
            return std::exp(expo) / (kSqrt2Pi * x * std::sqrt(x));
        }
        default:
            throw std::invalid_argument("limit_density: law is discrete");
    }
}

double borel_type_pmf(int d, long j) {
    if (d < 1) throw std::invalid_argument("borel_type_pmf: d must be >= 1");
    if (j < 0) throw std::invalid_argument("borel_type_pmf: j must be nonnegative");
    double dd = static_cast<double>(d);
    if (j == 0) return std::exp(-dd);
    double dj = static_cast<double>(j);
    return std::exp(std::log(dd) + (dj - 1.0) * std::log(dd + dj) - dd - dj - log_factorial(dj));
}

double LimitLaw::mass() const {
    switch (regime) {
        case Regime::Central: {
            // The term ratio p_{m+1}/p_m = (1+1/m)^m alpha e^{-alpha} increases
            // to q = alpha e^{1-alpha} < 1, so the remaining tail after any m
            // is below p_m q/(1-q).  Sum until that bound is negligible.
            double q = alpha * std::exp(1.0 - alpha);
            double total = 0.0;
            double p = 0.0;
            long m = 0;
            for (; m < 2000000; ++m) {
                p = central_limit_pmf(alpha, m);
                total += p;
                if (m >= 2 && p * q / (1.0 - q) < 1e-10) break;
            }
            if (m == 2000000) total += p * q / (1.0 - q);
            return total;
        }
        case Regime::SupercriticalFixed: {
            // The pmf decays like (d/sqrt(2 pi)) j^{-3/2}, so plain truncation
            // at J leaves ~ 2d/sqrt(2 pi J) behind and can never reach 1e-6.
            // Expanding log p_j for large j gives
            //   p_j = d/sqrt(2 pi) j^{-3/2} exp(-b/j + O(j^{-2})),
            //   b = d + d^2/2 + 1/12,
            // so the remainder past J is d/sqrt(2 pi) (zeta(3/2, J+1)
            // - b zeta(5/2, J+1)) up to O(J^{-5/2}); the Hurwitz zeta values
            // come from their asymptotic expansions.  At J = 1e5 the corrected
            // mass is exact to about 1e-10.
            const long kCutoff = 100000;
            double total = 0.0;
            for (long j = 0; j <= kCutoff; ++j) total += borel_type_pmf(d, j);
            double b = d + 0.5 * d * d + 1.0 / 12.0;
            double a = static_cast<double>(kCutoff + 1);
            double z32 = 2.0 / std::sqrt(a) + 0.5 * std::pow(a, -1.5) + 0.125 * std::pow(a, -2.5);
            double z52 = (2.0 / 3.0) * std::pow(a, -1.5) + 0.5 * std::pow(a, -2.5) +
                         (5.0 / 24.0) * std::pow(a, -3.5);
            return total + d / kSqrt2Pi * (z32 - b * z52);
        }
        case Regime::SubcriticalGamma: {
            // x = u^2 removes the x^{-1/2} endpoint singularity.
            auto g = [this](double u) { return 2.0 * u * limit_density(*this, u * u); };
            return quad_value(integrate_semi_infinite(g, 0.0, 1e-9, 1e-9), "LimitLaw::mass (gamma)");
        }
        case Regime::Critical: {
            // Substitute v = c^2 x / (2 (1-x)) to open up the (1-x)^{-3/2}
            // factor into plain e^{-v} decay, then v = u^2 for the remaining
            // v^{-1/2} singularity at the origin.
            double c2 = c * c;
            auto g = [this, c2](double u) {
                double v = u * u;
                double x = 2.0 * v / (c2 + 2.0 * v);
                double jac = 2.0 * c2 / ((c2 + 2.0 * v) * (c2 + 2.0 * v));
                return 2.0 * u * limit_density(*this, x) * jac;
            };
            return quad_value(integrate_semi_infinite(g, 0.0, 1e-9, 1e-9), "LimitLaw::mass (critical)");
        }
        case Regime::SupercriticalCont: {
            // y = 1/x turns the heavy x^{-3/2} tail into a Gamma(1/2,1/2)-type
            // integrand; y = u^2 then removes the y^{-1/2} singularity.
            auto g = [this](double u) {
                double y = u * u;
                return 2.0 * u * limit_density(*this, 1.0 / y) / (y * y);
            };
            return quad_value(integrate_semi_infinite(g, 0.0, 1e-9, 1e-9), "LimitLaw::mass (supercritical)");
        }
    }
    throw std::invalid_argument("LimitLaw::mass: unknown regime");
}

double kappa(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("kappa: c must be positive");
    return 1.0 - c * std::sqrt(kPi / 2.0) * erfcx_(c / kSqrt2);
}

namespace detail {

namespace {

// j = 1 term via the substitution v = c^2 t / (2 (1-t)), which maps the
// integrable blow-up at t = 1 onto plain exponential decay:
//   I_1 = int_{v0}^inf e^{-v} (c^2 + 2v) / (sqrt(2) c v^{3/2}) dv,
//   v0 = c^2 alpha / (2 (1 - alpha)).
double tail_integral_j1(double c, double alpha) {
    double c2 = c * c;
    double v0 = c2 * alpha / (2.0 * (1.0 - alpha));
    auto g = [c, c2](double v) {
        return std::exp(-v) * (c2 + 2.0 * v) / (kSqrt2 * c * v * std::sqrt(v));
    };
    return quad_value(integrate_semi_infinite(g, v0, 1e-10, 1e-10), "largest_component_tail_limit (j=1)");
}

// j = 2 term over alpha <= t1 < t2, t1 + t2 < 1, innermost variable last:
// with tau = t1 + t2 the inner integral runs over tau in (2 t1, 1) and gets
// the same v-substitution as j = 1, leaving
//   inner(t1) = int_{v1}^inf (tau(v) - t1)^{-3/2} 2 e^{-v} / (c sqrt(c^2+2v)) dv,
//   v1 = c^2 t1 / (1 - 2 t1),  tau(v) = 2v / (c^2 + 2v).
double tail_integral_j2(double c, double alpha) {
    double c2 = c * c;
    auto inner = [&](double t1) {
        double v1 = c2 * t1 / (1.0 - 2.0 * t1);
        auto g = [&](double v) {
            double tau = 2.0 * v / (c2 + 2.0 * v);
            double gap = tau - t1;
            return 2.0 * std::exp(-v) / (c * std::sqrt(c2 + 2.0 * v) * gap * std::sqrt(gap));
        };
        return quad_value(integrate_semi_infinite(g, v1, 1e-11, 1e-9),
                          "largest_component_tail_limit (j=2 inner)");
    };
    auto outer = [&](double t1) { return inner(t1) / (t1 * std::sqrt(t1)); };
    return quad_value(integrate_adaptive(outer, alpha, 0.5, 1e-8, 1e-8),
                      "largest_component_tail_limit (j=2 outer)");
}

// Van der Corput radical inverse; index >= 1 keeps the value inside (0,1).
double radical_inverse(std::uint64_t i, unsigned base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

std::vector<unsigned> first_primes(int count) {
    std::vector<unsigned> primes;
    for (unsigned p = 2; static_cast<int>(primes.size()) < count; ++p) {
        bool good = true;
        for (unsigned q : primes) {
            if (q * q > p) break;
            if (p % q == 0) {
                good = false;
                break;
            }
        }
        if (good) primes.push_back(p);
    }
    return primes;
}

// Quasi-Monte Carlo for the j-fold ordered region.  Ordered tuples
// alpha <= t_1 < ... < t_j are parametrized by offsets u_i = t_i - t_{i-1}
// (with t_0 = alpha), which keeps the ordering structural: tau = j alpha
// + sum_i w_i u_i with w_i = j - i + 1, and tau < 1 becomes
// sum_i w_i u_i < B for B = 1 - j alpha.  Scaling y_i = w_i u_i / B maps the
// region onto the unit simplex (volume 1/j!, offset Jacobian B^j / prod w_i),
// so I_j = B^j / (j!)^2 * mean of the integrand over uniform simplex points.
// Those come from exponentials -log(halton) normalized by their total; the
// leftover coordinate e_{j+1}/total equals 1 - sum y_i without cancellation.
double tail_integral_qmc(double c, double alpha, int j, std::uint64_t points) {
    double B = 1.0 - j * alpha;
    std::vector<unsigned> primes = first_primes(j + 1);
    double c2 = c * c;
    std::vector<double> e(static_cast<std::size_t>(j) + 1);
    double sum = 0.0;
    for (std::uint64_t p = 1; p <= points; ++p) {
        double total = 0.0;
        for (int i = 0; i <= j; ++i) {
            e[static_cast<std::size_t>(i)] = -std::log(radical_inverse(p, primes[static_cast<std::size_t>(i)]));
            total += e[static_cast<std::size_t>(i)];
        }
        double t_prev = alpha;
        double log_prod = 0.0;
        for (int i = 0; i < j; ++i) {
            double u = B * (e[static_cast<std::size_t>(i)] / total) / static_cast<double>(j - i);
            t_prev += u;
            log_prod += std::log(t_prev);
        }
        double rem = B * (e[static_cast<std::size_t>(j)] / total);  // = 1 - tau
        double expo = -1.5 * log_prod - 1.5 * std::log(rem) - c2 * (1.0 - rem) / (2.0 * rem);
        sum += std::exp(expo);
    }
    double log_scale = j * std::log(B) - 2.0 * log_factorial(static_cast<double>(j));
    return std::exp(log_scale) * (sum / static_cast<double>(points));
}

}  // namespace

double largest_tail_term(double c, double alpha, int j, bool force_qmc) {
    if (j < 1) throw std::invalid_argument("largest_tail_term: j must be >= 1");
    double B = 1.0 - j * alpha;
    if (B <= 1e-14) return 0.0;  // empty (or measure-zero) domain
    double integral;
    if (force_qmc || j >= 3) {
        integral = tail_integral_qmc(c, alpha, j, std::uint64_t{1} << 20);
    } else if (j == 1) {
        integral = tail_integral_j1(c, alpha);
    } else {
        integral = tail_integral_j2(c, alpha);
    }
    double weight = std::exp(j * std::log(c) - 0.5 * j * std::log(2.0 * kPi));
    return (j % 2 == 1 ? weight : -weight) * integral;
}

}  // namespace detail

double largest_component_tail_limit(double c, double alpha) {
    if (!(c > 0.0)) throw std::invalid_argument("largest_component_tail_limit: c must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("largest_component_tail_limit: alpha must be positive");
    if (alpha >= 1.0) return 0.0;  // no component can exceed the whole tree
    double total = 0.0;
    for (int j = 1; j * alpha < 1.0; ++j) {
        total += detail::largest_tail_term(c, alpha, j, false);
    }
    return std::clamp(total, 0.0, 1.0);
}

double tree_function(double x) {
    double upper = std::exp(-1.0);
    if (!(x >= 0.0) || x > upper) {
        throw std::invalid_argument("tree_function: x must lie in [0, 1/e]");
    }
    if (x == 0.0) return 0.0;
    // Newton on g(T) = T e^{-T} - x over [0,1].  g is increasing there and
    // g' vanishes at the right end, so steps leaving the bracket fall back to
    // bisection.
    double lo = 0.0, hi = 1.0;
    double t = x;  // T >= x since e^T >= 1
    for (int it = 0; it < 200; ++it) {
        double et = std::exp(-t);
        double g = t * et - x;
        if (std::abs(g) <= 1e-12) return t;
        if (g > 0.0) {
            hi = t;
        } else {
            lo = t;
        }
        double gp = (1.0 - t) * et;
        double next = (gp > 0.0) ? t - g / gp : -1.0;
        t = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    }
    throw internal_error("tree_function: did not reach residual 1e-12");
}

double root_cluster_pmf_log(long n, long k, long m) {
    if (n < 1 || k < 1 || k > n) {
        throw std::invalid_argument("root_cluster_pmf_log: arguments must satisfy 1 <= k <= n");
    }
    if (m < 0 || m > k) {
        throw std::invalid_argument("root_cluster_pmf_log: arguments must satisfy 0 <= m <= k");
    }
    if (k == n) {
        return m == n ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    double dn = static_cast<double>(n);
    double dk = static_cast<double>(k);
    double dm = static_cast<double>(m);
    if (m == 0) return std::log1p(-dk / dn);
    double log_choose = log_factorial(dk) - log_factorial(dm) - log_factorial(dk - dm);
    return log_choose + dm * std::log(dm) + std::log(dn - dk) + (dk - dm - 1.0) * std::log(dn - dm) -
           dk * std::log(dn);
}

}  // namespace uncover
