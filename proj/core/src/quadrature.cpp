#include "uncover/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace uncover {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1]; the embedded 7-point Gauss
// rule uses the odd-indexed nodes.  Values from the QUADPACK tables.
constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kronrod_nodes[i]);
        fv[14 - i] = f(center + half * kronrod_nodes[i]);
    }
    fv[7] = f(center);
    double kronrod = kronrod_weights[7] * fv[7];
    double gauss = gauss_weights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += kronrod_weights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= half;
    gauss *= half;
    // QUADPACK's sharpened error estimate decays much faster than |K - G|.
    const double diff = std::abs(kronrod - gauss);
    double err = diff;
    if (diff > 0.0) err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(kronrod), 1e-300), 1.5));
    return {a, b, kronrod, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals) {
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    std::priority_queue<Segment> queue;
    queue.push(evaluate_segment(f, a, b));
    result.evaluations = 15;
    double total = queue.top().value;
    double total_err = queue.top().error;
    int intervals = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) && intervals < max_intervals) {
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval at double resolution
            queue.push(worst);
            break;
        }
        const Segment left = evaluate_segment(f, worst.a, mid);
        const Segment right = evaluate_segment(f, mid, worst.b);
        result.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++intervals;
    }
    result.value = total;
    result.abs_error = total_err;
    result.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total)) * 1.0000001 ||
                       total_err <= abs_tol;
    return result;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                         double abs_tol, double rel_tol) {
    QuadratureResult result;
    double lo = a;
    double width = 1.0;
    double scale = 0.0;
    for (int block = 0; block < 200; ++block) {
        const double hi = lo + width;
        const QuadratureResult part =
            integrate_adaptive(f, lo, hi, abs_tol * 0.25, rel_tol * 0.25);
        result.value += part.value;
        result.abs_error += part.abs_error;
        result.evaluations += part.evaluations;
        if (!part.converged) return result;
        scale = std::max(scale, std::abs(result.value));
        const double edge = std::abs(f(hi));
        if (std::abs(part.value) <= std::max(abs_tol * 0.25, rel_tol * 0.25 * scale) &&
            edge * width <= 1e-16 * std::max(scale, 1.0)) {
            result.converged = true;
            return result;
        }
        lo = hi;
        width *= 2.0;
    }
    return result;
}

QuadratureResult integrate_sqrt_singularity_left(const std::function<double(double)>& f, double b,
                                                 double abs_tol, double rel_tol) {
    auto substituted = [&f](double u) { return 2.0 * u * f(u * u); };
    return integrate_adaptive(substituted, 0.0, std::sqrt(b), abs_tol, rel_tol);
}

}  // namespace uncover
