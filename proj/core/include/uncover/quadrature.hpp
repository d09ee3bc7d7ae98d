#pragma once

#include <functional>

namespace uncover {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimated
    int evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (7,15) over [a, b].  Splits the worst interval until
// both tolerances hold or the interval budget runs out; converged = false in
// the latter case (callers decide whether that is fatal).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals = 4000);

// Integral over [a, inf): maps consecutive octaves [a + 2^i, a + 2^{i+1}] and
// stops once a segment contributes less than the tolerance and the integrand
// has decayed below 1e-16 of the running scale.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                         double abs_tol, double rel_tol);

// Integral of f over (0, b] when f has an x^{-1/2}-type endpoint singularity
// at 0: substitutes x = u^2 (dx = 2u du), which removes the singularity.
QuadratureResult integrate_sqrt_singularity_left(const std::function<double(double)>& f, double b,
                                                 double abs_tol, double rel_tol);

}  // namespace uncover
