#include "uncover/special.hpp"

#include <cmath>
#include <stdexcept>

namespace uncover {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double gammln(double x) {
    // Lanczos approximation, g=5, 6 coefficients; |eps| < 2e-10 by itself and
    // far better once the series/CF are in regularized form.
    static const double cof[6] = {76.18009172947146,     -86.50532032941677,
                                  24.01409824083091,     -1.231739572450155,
                                  0.1208650973866179e-2, -0.5395239384953e-5};
    double y = x;
    double tmp = x + 5.5;
    tmp -= (x + 0.5) * std::log(tmp);
    double ser = 1.000000000190015;
    for (double c : cof) ser += c / ++y;
    return -tmp + std::log(2.5066282746310005 * ser / x);
}

// Series for P(a,x), valid and fast for x < a+1.
double gser(double a, double x) {
    const double gln = gammln(a);
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17)
            return sum * std::exp(-x + a * std::log(x) - gln);
    }
    throw std::runtime_error("gamma series did not converge");
}

// Modified Lentz continued fraction for Q(a,x), x >= a+1.  Returns the
// fraction h with Q(a,x) = e^{-x + a ln x - lnGamma(a)} * h.
double gcf_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h;
    }
    throw std::runtime_error("gamma continued fraction did not converge");
}

}  // namespace

double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p: need x >= 0, a > 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gser(a, x);
    return 1.0 - gamma_q(a, x);
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: need x >= 0, a > 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gser(a, x);
    return gcf_fraction(a, x) * std::exp(-x + a * std::log(x) - gammln(a));
}

double erf_(double x) {
    if (x < 0.0) return -erf_(-x);
    return gamma_p(0.5, x * x);
}

double erfc_(double x) {
    if (x < 0.0) return 2.0 - erfc_(-x);
    return gamma_q(0.5, x * x);
}

double erfcx_(double x) {
    if (x < 3.0) return std::exp(x * x) * erfc_(x);  // no overflow below x^2 = 9
    // e^{x^2} Q(1/2, x^2) = e^{a ln z - lnGamma(1/2)} h = x h / sqrt(pi).
    return x * gcf_fraction(0.5, x * x) / kSqrtPi;
}

double chi_square_survival(double statistic, double dof) {
    if (statistic < 0.0 || dof <= 0.0)
        throw std::invalid_argument("chi_square_survival: need statistic >= 0, dof > 0");
    return gamma_q(0.5 * dof, 0.5 * statistic);
}

double log_factorial(double n) { return gammln(n + 1.0); }

}  // namespace uncover
