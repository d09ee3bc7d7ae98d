#include "uncover/exact.hpp"

#include <stdexcept>

#include "uncover/quadrature.hpp"

namespace uncover {

BigInt int_pow(BigInt base, unsigned long e) {
    BigInt result = 1;
    while (e > 0) {
        if (e & 1ul) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

BigRat rat_pow(const BigRat& base, long e) {
    if (e >= 0) {
        BigRat result = 1;
        BigRat b = base;
        auto k = static_cast<unsigned long>(e);
        while (k > 0) {
            if (k & 1ul) result *= b;
            b *= b;
            k >>= 1;
        }
        return result;
    }
    if (base == 0) throw internal_error("rat_pow: zero base with negative exponent");
    return 1 / rat_pow(base, -e);
}

BigInt binomial(long x, long y) {
    if (y < 0) return 0;
    if (y == 0) return 1;
    if (x < 0 || y > x) return 0;
    if (y > x - y) y = x - y;
    BigInt result = 1;
    for (long i = 1; i <= y; ++i) {
        result *= (x - y + i);
        result /= i;  // divides exactly: result is C(x-y+i, i) here
    }
    return result;
}

BigInt falling_factorial(long x, long count) {
    BigInt result = 1;
    for (long i = 0; i < count; ++i) result *= (x - i);
    return result;
}

std::string to_fraction_string(const BigRat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

double to_double(const BigRat& v) { return v.convert_to<double>(); }

namespace {

BigInt require_integer(const BigRat& v, const char* what) {
    if (denominator(v) != 1) throw internal_error(std::string(what) + ": non-integral result");
    return numerator(v);
}

}  // namespace

void SequenceConstraint::validate() const {
    if (n < 2) throw std::invalid_argument("sequence constraint: n must be >= 2");
    if (js.empty() || js.size() != as.size())
        throw std::invalid_argument("sequence constraint: js and as must be non-empty and equal length");
    int prev_j = 1;
    int prev_a = 0;
    for (std::size_t i = 0; i < js.size(); ++i) {
        if (js[i] <= prev_j) throw std::invalid_argument("sequence constraint: js must be strictly increasing from 2");
        if (js[i] >= n) throw std::invalid_argument("sequence constraint: js must stay below n");
        if (as[i] < prev_a) throw std::invalid_argument("sequence constraint: as must be nondecreasing and nonnegative");
        if (as[i] > js[i] - 1) throw std::invalid_argument("sequence constraint: a_i exceeds j_i - 1");
        prev_j = js[i];
        prev_a = as[i];
    }
}

BigRat expected_edges(long n, long j) {
    if (n < 1 || j < 1 || j > n) throw std::invalid_argument("expected_edges: need 1 <= j <= n");
    return BigRat(BigInt(j) * (j - 1), BigInt(n));
}

BigRat variance_edges(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("variance_edges: need 1 <= k <= n");
    return BigRat(BigInt(k) * (k - 1) * (n - k), BigInt(n) * n);
}

BigInt count_trees_partial_sequence(const SequenceConstraint& c) {
    c.validate();
    const long n = c.n;
    const std::size_t r = c.js.size();
    const long jr = c.js[r - 1];
    const long ar = c.as[r - 1];
    // Both leading exponents are nonnegative: a_r <= j_r - 1 and j_r < n.
    BigInt total = int_pow(BigInt(n - jr), static_cast<unsigned long>(jr - ar - 1)) *
                   int_pow(BigInt(n), static_cast<unsigned long>(n - jr - 1));
    long j_prev = 1;
    long a_prev = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const long ji = c.js[i];
        const long ai = c.as[i];
        const long da = ai - a_prev;
        const long dj = ji - j_prev;
        BigInt factor = 0;
        for (long h = 0; h <= da; ++h) {
            factor += binomial(j_prev - a_prev - 1, h) * binomial(dj, da - h) *
                      int_pow(BigInt(dj), static_cast<unsigned long>(h)) *
                      int_pow(BigInt(ji), static_cast<unsigned long>(da - h));
        }
        total *= factor;
        j_prev = ji;
        a_prev = ai;
    }
    return total;
}

BigInt count_trees_full_sequence(const std::vector<int>& a) {
    const auto n = static_cast<long>(a.size());
    if (n < 1) throw std::invalid_argument("full sequence: empty");
    if (a[0] != 0) throw std::invalid_argument("full sequence: a_1 must be 0");
    if (a[n - 1] != n - 1) throw std::invalid_argument("full sequence: a_n must be n-1");
    for (long i = 0; i < n; ++i) {
        if (a[i] > i) throw std::invalid_argument("full sequence: a_i exceeds i-1");
        if (i > 0 && a[i] < a[i - 1]) throw std::invalid_argument("full sequence: not nondecreasing");
    }
    BigInt total = 1;
    for (long i = 1; i <= n - 2; ++i) {
        const long ai = a[i - 1];
        const long ai1 = a[i];
        total *= binomial(i - ai - 1, ai1 - ai - 1) * (i + 1) + binomial(i - ai - 1, ai1 - ai);
    }
    return total;
}

BigInt count_trees_with_clusters(long n, long k, const std::vector<long>& rs) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("cluster count: need 0 <= k <= n");
    long r_sum = 0;
    for (long r : rs) {
        if (r < 1) throw std::invalid_argument("cluster count: sizes must be positive");
        r_sum += r;
    }
    if (r_sum > k) throw std::invalid_argument("cluster count: sizes exceed k");
    const auto l = static_cast<long>(rs.size());
    BigRat value = rat_pow(BigRat(n), n - k - 1);
    // (n-r)^{k-r-1} and (n-k)^l share the zero base exactly when r = k = n;
    // merging the exponents there gives 0^{l-1}: one component covering
    // everything is the whole tree, two or more are impossible.
    if (n - r_sum == 0) {
        if (l != 1) return 0;
        // exponent (k-r-1) + l = 0; factor 1
    } else {
        value *= rat_pow(BigRat(n - r_sum), k - r_sum - 1);
        if (n - k == 0 && l > 0) return 0;
        value *= rat_pow(BigRat(n - k), l);
    }
    for (long r : rs) value *= int_pow(BigInt(r), static_cast<unsigned long>(r - 1));
    return require_integer(value, "count_trees_with_clusters");
}

BigRat root_cluster_pmf(long n, long k, long m) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("root cluster pmf: need 0 <= k <= n");
    if (m < 0 || m > k) throw std::invalid_argument("root cluster pmf: need 0 <= m <= k");
    if (m == 0) return BigRat(n - k, n);
    if (k == n) return m == n ? BigRat(1) : BigRat(0);
    // 1 <= m <= k < n: base n-m > 0, so the possibly negative exponent is a
    // legitimate rational.
    BigRat value = BigRat(int_pow(BigInt(m), static_cast<unsigned long>(m)) * (n - k) * binomial(k, m));
    value *= rat_pow(BigRat(n - m), k - m - 1);
    value /= int_pow(BigInt(n), static_cast<unsigned long>(k));
    return value;
}

BigInt count_rooted_trees_root_cluster(long n, long k, long m) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("root cluster count: need 0 <= k <= n");
    if (m < 0 || m > k) throw std::invalid_argument("root cluster count: need 0 <= m <= k");
    if (m == 0)
        return binomial(n - 1, k) * int_pow(BigInt(n), static_cast<unsigned long>(n - 1));
    BigRat value = BigRat(binomial(n, m) * binomial(n - m - 1, k - m));
    value *= rat_pow(BigRat(n), n - k - 1);  // negative only at k = n, where it cancels
    value *= int_pow(BigInt(m), static_cast<unsigned long>(m));
    if (n - m == 0) {
        if (k != m) return 0;  // 0^{k-m} with k > m
    } else {
        value *= int_pow(BigInt(n - m), static_cast<unsigned long>(k - m));
    }
    return require_integer(value, "count_rooted_trees_root_cluster");
}

BigRat root_cluster_expectation(long n, long k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("root cluster expectation: need 0 <= k <= n");
    BigRat sum = 0;
    BigInt falling = 1;
    BigInt n_pow = 1;
    for (long j = 1; j <= k; ++j) {
        falling *= (k - j + 1);
        n_pow *= n;
        sum += BigRat(BigInt(j) * falling, n_pow);
    }
    return sum;
}

double root_cluster_expectation_integral(long n, long k) {
    if (n < 1 || k < 0 || k > n)
        throw std::invalid_argument("root cluster expectation integral: need 0 <= k <= n");
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    auto integrand = [nd, kd](double x) {
        return (x - 1.0) * std::exp(kd * std::log1p(x / nd) - x);
    };
    // (1+x/n)^k e^{-x} <= e^{-x^2/(4n)} for x <= n and <= e^{-x/4} beyond, so
    // the mass past max(n, 30 sqrt(n)) + 60 is below any tolerance in play.
    const double cutoff = std::max(nd, 30.0 * std::sqrt(nd)) + 60.0;
    const QuadratureResult q = integrate_adaptive(integrand, 0.0, cutoff, 1e-11, 1e-11);
    if (!q.converged)
        throw internal_error("root_cluster_expectation_integral: quadrature did not converge");
    return q.value;
}

BigRat uncovered_vertex_cluster_pmf(long n, long k, long m) {
    if (k < 1) throw std::invalid_argument("uncovered vertex pmf: need k >= 1");
    if (m < 1) throw std::invalid_argument("uncovered vertex pmf: size is at least 1 by definition");
    return BigRat(n, k) * root_cluster_pmf(n, k, m);
}

BigRat expected_components(long n, long k, long r) {
    if (r == 0) throw std::invalid_argument("expected_components: r = 0 is not a component size");
    if (n < 1 || k < 1 || k > n || r < 1 || r > k)
        throw std::invalid_argument("expected_components: need 1 <= r <= k <= n");
    if (k == n) return r == n ? BigRat(1) : BigRat(0);
    BigRat value = BigRat(binomial(k, r));
    value *= rat_pow(BigRat(r, n), r - 1);
    value *= BigRat(n - k, n);
    value *= rat_pow(BigRat(n - r, n), k - r - 1);  // r <= k < n keeps the base positive
    return value;
}

bool abel_identity_check(long n, long k) {
    if (k < 1 || k >= n) throw std::invalid_argument("abel check: need 1 <= k < n");
    BigRat lhs = 0;
    for (long r = 1; r <= k; ++r) {
        BigRat term = BigRat(binomial(k, r) * int_pow(BigInt(r), static_cast<unsigned long>(r)));
        term *= rat_pow(BigRat(n), n - k - 1);
        term *= rat_pow(BigRat(n - r), k - r - 1);
        term *= (n - k);
        lhs += term;
    }
    const BigRat rhs = BigRat(BigInt(k) * int_pow(BigInt(n), static_cast<unsigned long>(n - 2)));
    return lhs == rhs;
}

}  // namespace uncover
