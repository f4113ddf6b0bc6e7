#pragma once
// Seeded construction of codes that satisfy C1, plus a corruptor that
// breaks C1 on purpose.
//
// Construction: each round takes a fresh prime q from the pool and a chain of
// indices d_1 | d_2 | ... <= L (start uniform in [1, L], then repeatedly
// multiply by a factor drawn uniformly from [2, 4]) and multiplies q^e into
// c_{d_i} with e uniform in [1, max_exponent]. A prime's support is then
// totally ordered by divisibility, so two incomparable indices never share it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "gcdmorph/core.hpp"

namespace gcdmorph {

/// SplitMix64 (Steele, Lea, Flood 2014). split() derives an independent
/// child stream from the next output.
class SplitMix64 {
public:
    using result_type = std::uint64_t;
    static constexpr std::string_view algorithm = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() noexcept { return SplitMix64((*this)()); }

    /// Unbiased draw from [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = (*this)();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform draw from [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept { return lo + below(hi - lo + 1); }

private:
    std::uint64_t state_;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; primes.size() < count; ++n) {
        if (is_prime(n)) primes.push_back(n);
    }
    return primes;
}

struct GenParams {
    std::size_t length = 1;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> prime_pool = first_primes(20);
    std::size_t chains = 10;
    unsigned max_exponent = 2;

    void validate() const {
        if (length == 0) throw std::invalid_argument("length must be >= 1");
        if (prime_pool.empty()) throw std::invalid_argument("prime pool is empty");
        if (max_exponent == 0) throw std::invalid_argument("max exponent must be >= 1");
        for (auto p : prime_pool) {
            if (!is_prime(p)) throw std::invalid_argument("prime pool entry " + std::to_string(p) + " is not prime");
        }
        auto sorted = prime_pool;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("prime pool entries must be distinct");
        if (chains > prime_pool.size()) throw PoolExhausted(chains, prime_pool.size());
    }
};

inline CodePrefix generate(const GenParams& p) {
    p.validate();
    SplitMix64 root(p.seed);
    std::vector<std::uint64_t> remaining = p.prime_pool;
    std::vector<BigInt> codes(p.length, BigInt(1));

    for (std::size_t round = 0; round < p.chains; ++round) {
        SplitMix64 rng = root.split();
        const auto pick = static_cast<std::ptrdiff_t>(rng.below(remaining.size()));
        const std::uint64_t q = remaining[static_cast<std::size_t>(pick)];
        remaining.erase(remaining.begin() + pick);

        std::uint64_t d = rng.between(1, p.length);
        for (;;) {
            const auto e = static_cast<unsigned>(rng.between(1, p.max_exponent));
            codes[d - 1] *= boost::multiprecision::pow(BigInt(q), e);
            const std::uint64_t factor = rng.between(2, 4);
            if (d > p.length / factor) break;
            d *= factor;
        }
    }

    std::vector<PosInt> out;
    out.reserve(codes.size());
    for (auto& v : codes) out.emplace_back(std::move(v));
    return CodePrefix(std::move(out));
}

namespace detail {

// Smallest prime factor found by trial division below `limit`, or 0.
inline std::uint64_t small_prime_factor(const PosInt& v, std::uint64_t limit = 1'000'000) {
    if (v.is_one()) return 0;
    for (std::uint64_t d = 2; d < limit; ++d) {
        if (v.fits_u64() && d > v.to_u64() / d) return v.to_u64();
        if (v.value() % d == 0) return d;
    }
    return 0;
}

}  // namespace detail

/// Copy of c that violates C1. Picks k in [2, L] and an index n incomparable
/// with k under divisibility, then multiplies c_k by a prime factor of c_n.
/// When c_n has no small prime factor (for instance c_n = 1), the prime 2 is
/// planted into both c_n and c_k.
inline CodePrefix corrupt(const CodePrefix& c, std::uint64_t seed) {
    const std::size_t length = c.length();
    if (length < 3) throw std::invalid_argument("corrupt needs a code of length >= 3");
    SplitMix64 rng(seed);
    const auto k = static_cast<std::size_t>(rng.between(2, length));

    // Nonempty for L >= 3: k-1 works when k >= 3, and 3 works when k = 2.
    std::vector<std::size_t> incomparable;
    for (std::size_t n = 2; n <= length; ++n) {
        if (n != k && n % k != 0 && k % n != 0) incomparable.push_back(n);
    }
    const std::size_t n = incomparable[rng.below(incomparable.size())];

    if (const auto p = detail::small_prime_factor(c[n]); p != 0) return c.with(k, c[k] * PosInt{p});
    return c.with(k, c[k] * PosInt{2}).with(n, c[n] * PosInt{2});
}

}  // namespace gcdmorph
