#pragma once

#include <cstdint>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uncover {

// Seeded random stream built on xoshiro256++ (Blackman & Vigna).  The state is
// filled from (seed, stream) through two rounds of the splitmix64 finalizer,
// so equal (seed, stream) pairs always reproduce the same draw sequence and
// distinct stream ids give decorrelated generators.  One replication of a
// Monte Carlo experiment owns one stream; nothing here is shared.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {
        std::uint64_t x = mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ull));
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ull;
            w = mix64(x);
        }
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is absorbing
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Uniform double in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound) by multiply-shift with rejection
    // (Lemire 2019); exactly uniform, no modulo bias.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
        unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t cutoff = (0 - bound) % bound;  // 2^64 mod bound
            while (lo < cutoff) {
                m = static_cast<unsigned __int128>((*this)()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform label in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        return lo + static_cast<int>(uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard normal via the Marsaglia polar method; the spare value is
    // cached, so draws come in deterministic pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Exact Binomial(t, p) sample.  Small means use chop-down inversion of the
    // CDF; larger means (or cases where (1-p)^t would underflow) split the
    // trial count in half and add two independent binomials, which leaves the
    // distribution exact.  This is never a normal approximation.
    long binomial(long t, double p) {
        if (t < 0) throw std::invalid_argument("binomial: negative trial count");
        if (t == 0 || p <= 0.0) return 0;
        if (p >= 1.0) return t;
        if (p > 0.5) return t - binomial(t, 1.0 - p);
        const double log_q = std::log1p(-p);
        if (static_cast<double>(t) * p > 64.0 || static_cast<double>(t) * log_q < -700.0) {
            const long half = t / 2;
            return binomial(half, p) + binomial(t - half, p);
        }
        double u = uniform01();
        double pmf = std::exp(static_cast<double>(t) * log_q);  // P(X = 0)
        const double odds = p / (1.0 - p);
        long k = 0;
        while (u > pmf) {
            u -= pmf;
            pmf *= odds * static_cast<double>(t - k) / static_cast<double>(k + 1);
            if (++k >= t) return t;  // guards against FP residue past the top
        }
        return k;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    // splitmix64 finalizer: a 64->64 bit mixer with full avalanche.
    static std::uint64_t mix64(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace uncover
