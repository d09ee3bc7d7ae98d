#pragma once

#include <vector>

#include "uncover/rng.hpp"

namespace uncover {

// Limit law of the root-cluster size as n grows, by growth regime of the
// number k of uncovered vertices (d = n - k):
//   central           k = alpha*n:      discrete pmf over m = 0,1,2,...
//   subcritical-gamma d >> sqrt(n):     (d/n)^2 R converges to Gamma(1/2,1/2)
//   critical          d ~ c sqrt(n):    R/n has density f_c on (0,1)
//   supercritical-cont 1 << d << sqrt(n): (d/sqrt(n))^2 (1 - R/n) -> stable-1/2 type
//   supercritical-fixed d constant:     n - d - R converges to a Borel-type pmf
struct LimitLaw {
    enum class Regime { Central, SubcriticalGamma, Critical, SupercriticalCont, SupercriticalFixed };

    Regime regime;
    double alpha = 0.0;  // central
    double c = 0.0;      // critical
    int d = 0;           // supercritical-fixed

    static LimitLaw central(double alpha);
    static LimitLaw subcritical_gamma();
    static LimitLaw critical(double c);
    static LimitLaw supercritical_cont();
    static LimitLaw supercritical_fixed(int d);

    bool discrete() const {
        return regime == Regime::Central || regime == Regime::SupercriticalFixed;
    }

    double pmf(long m) const;       // discrete regimes only
    double density(double x) const; // continuous regimes only

    // Numeric total mass: quadrature (with singularity substitutions) for
    // densities, direct log-space summation for pmfs.  Should be 1 within
    // 1e-6; exposed so tests and the CLI can show it.
    double mass() const;
};

// Gaussian sample of the limit process on a grid.
struct LimitProcessPath {
    std::vector<double> grid;
    std::vector<double> values;
    double jitter_used = 0.0;  // diagonal regularization added, if any
};

// Cov(Z(s), Z(t)) = s^2 (1-t) for s <= t; callers must order the arguments.
double limit_covariance(double s, double t);

// Multivariate normal draw via Cholesky factorization of the grid covariance;
// on numerical non-positive-definiteness, escalating diagonal jitter up to
// 1e-12 is added and reported in the result.
LimitProcessPath sample_limit_process(const std::vector<double>& grid, RngStream& rng);

// p_0 = 1 - alpha; p_m = (m^m / m!) (1-alpha) alpha^m e^{-alpha m}.
double central_limit_pmf(double alpha, long m);

// Density dispatch for the continuous regimes; x outside the support gives 0.
double limit_density(const LimitLaw& law, double x);

// p_j = e^{-d} d (d+j)^{j-1} / j! e^{-j}, computed in log space.
double borel_type_pmf(int d, long j);

// kappa(c) = 1 - c e^{c^2/2} int_c^inf e^{-t^2/2} dt
//          = 1 - c sqrt(pi/2) erfcx(c/sqrt(2)); the scaled form stays finite
// for large c.
double kappa(double c);

// Limit of P(largest cluster >= alpha*n) in the critical window d = c sqrt(n):
// alternating series over j-tuples alpha <= t_1 < ... < t_j with t_1+...+t_j < 1,
//   sum_j (-1)^{j-1} c^j (2pi)^{-j/2} int prod_i t_i^{-3/2}
//        * (1-tau)^{-3/2} exp(-c^2 tau / (2(1-tau))) dt,   tau = sum t_i.
// Terms vanish once j*alpha >= 1.  j=1,2 use adaptive quadrature (abs tol
// 1e-7), j >= 3 quasi-Monte Carlo on the simplex with >= 1e6 points.
double largest_component_tail_limit(double c, double alpha);

// Solution T in [0,1] of T = x e^T for 0 <= x <= 1/e, to residual 1e-12.
double tree_function(double x);

// log P(root cluster = m) at finite n in double precision; the floating
// companion of the exact rational pmf for n too large for big rationals to be
// practical.  Cross-checked against the exact op in tests.
double root_cluster_pmf_log(long n, long k, long m);

namespace detail {

// One signed series term of largest_component_tail_limit.  force_qmc routes
// j = 1, 2 through the simplex rule as well, so tests can cross-check it
// against the adaptive-quadrature path on the same term.
double largest_tail_term(double c, double alpha, int j, bool force_qmc = false);

}  // namespace detail

}  // namespace uncover
