#pragma once
// Bijection between a sequence F and its code C, where
//   F_n = prod_{j | n} c_j    and    c_n = F_n / prod_{k | n, k < n} c_k.
//
// A successful encode only says every division was exact. It does not
// certify that F is GCD-morphic (factorials encode fine and are not); use
// validator.hpp's certify() for that.

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "gcdmorph/core.hpp"

namespace gcdmorph {

/// First index where c_n = F_n / prod_{k|n,k<n} c_k is not an exact division.
struct EncodeFailure {
    std::size_t index;
    PosInt numerator;    // F_n
    PosInt denominator;  // prod of c_k over proper divisors k of n

    friend bool operator==(const EncodeFailure&, const EncodeFailure&) = default;
};

class EncodeResult {
public:
    EncodeResult(CodePrefix code) : outcome_(std::move(code)) {}        // NOLINT
    EncodeResult(EncodeFailure failure) : outcome_(std::move(failure)) {}  // NOLINT

    bool ok() const noexcept { return std::holds_alternative<CodePrefix>(outcome_); }
    explicit operator bool() const noexcept { return ok(); }

    /// Throws std::bad_variant_access when the encode failed.
    const CodePrefix& code() const { return std::get<CodePrefix>(outcome_); }
    const EncodeFailure& failure() const { return std::get<EncodeFailure>(outcome_); }

private:
    std::variant<CodePrefix, EncodeFailure> outcome_;
};

/// Ascending in n; stops at the first inexact division.
inline EncodeResult encode(const SeqPrefix& f) {
    const std::size_t length = f.length();
    std::vector<PosInt> codes(length);
    // divisor_product[n-1] accumulates c_k for every proper divisor k of n
    // as soon as c_k is known, so it is complete when n is reached.
    std::vector<PosInt> divisor_product(length);
    for (std::size_t n = 1; n <= length; ++n) {
        const PosInt& den = divisor_product[n - 1];
        if (!den.divides(f[n])) return EncodeFailure{n, f[n], den};
        PosInt c = exact_quotient(f[n], den);
        if (!c.is_one()) {
            for (std::size_t m = 2 * n; m <= length; m += n) divisor_product[m - 1] *= c;
        }
        codes[n - 1] = std::move(c);
    }
    return CodePrefix(std::move(codes));
}

/// F_n = prod_{j | n} c_j. Only the codes at divisors of n contribute to F_n.
inline SeqPrefix decode(const CodePrefix& c) {
    const std::size_t length = c.length();
    std::vector<PosInt> terms(length);
    for (std::size_t j = 1; j <= length; ++j) {
        if (c[j].is_one()) continue;
        for (std::size_t m = j; m <= length; m += j) terms[m - 1] *= c[j];
    }
    return SeqPrefix(std::move(terms));
}

struct Peeled {
    PrimarySpec primary;
    SeqPrefix rest;
};

/// Splits f = G(f_n, n) * rest for a prefix whose terms before n are all 1.
///
/// rest_k = 1 for k <= n, f_k / f_n when n | k, and f_k otherwise.
/// Throws HypothesisViolated when some f_k != 1 with k < n, and NotDivisible(k)
/// when n | k but f_n does not divide f_k (which rules out GCD-morphicity).
inline Peeled peel_primary(const SeqPrefix& f, std::size_t n) {
    if (n == 0 || n > f.length()) throw std::out_of_range("peel index outside the prefix");
    for (std::size_t k = 1; k < n; ++k) {
        if (!f[k].is_one()) throw HypothesisViolated(k);
    }
    const PosInt& lead = f[n];
    std::vector<PosInt> rest(f.terms().begin(), f.terms().end());
    rest[n - 1] = PosInt{1};
    for (std::size_t k = 2 * n; k <= f.length(); k += n) {
        if (!lead.divides(f[k])) throw NotDivisible(k);
        rest[k - 1] = exact_quotient(f[k], lead);
    }
    return Peeled{PrimarySpec(lead, n), SeqPrefix(std::move(rest))};
}

}  // namespace gcdmorph
