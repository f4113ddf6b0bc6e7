#pragma once
// Exact positive integers, 1-indexed sequence prefixes, divisor enumeration
// and primary sequences G(c, N): c at multiples of N, 1 elsewhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcdmorph/errors.hpp"

namespace gcdmorph {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision integer that is always >= 1.
class PosInt {
public:
    PosInt() = default;

    template <std::integral T>
    PosInt(T v) {  // NOLINT(google-explicit-constructor): literals read naturally in prefixes
        if (v < 1) throw std::domain_error("PosInt must be >= 1, got " + std::to_string(v));
        value_ = static_cast<std::uint64_t>(v);
    }

    explicit PosInt(BigInt v) : value_(std::move(v)) {
        if (value_ < 1) throw std::domain_error("PosInt must be >= 1, got " + value_.str());
    }

    /// Parses an unsigned decimal string. Signs, whitespace and zero are rejected.
    static PosInt parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty integer token");
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
        }
        // cpp_int reads a leading 0 as an octal prefix
        const auto first = text.find_first_not_of('0');
        if (first == std::string_view::npos) throw std::domain_error("value must be >= 1: '" + std::string(text) + "'");
        return PosInt(BigInt{std::string(text.substr(first))});
    }

    const BigInt& value() const noexcept { return value_; }
    std::string str() const { return value_.str(); }
    bool is_one() const { return value_ == 1; }
    bool fits_u64() const { return boost::multiprecision::msb(value_) < 64; }
    std::uint64_t to_u64() const { return value_.convert_to<std::uint64_t>(); }

    /// True when *this divides other.
    bool divides(const PosInt& other) const {
        if (is_one()) return true;
        if (fits_u64() && other.fits_u64()) return other.to_u64() % to_u64() == 0;
        return other.value_ % value_ == 0;
    }

    PosInt& operator*=(const PosInt& rhs) {
        if (!rhs.is_one()) value_ *= rhs.value_;
        return *this;
    }
    friend PosInt operator*(PosInt lhs, const PosInt& rhs) { return lhs *= rhs; }

    friend bool operator==(const PosInt& a, const PosInt& b) { return a.value_ == b.value_; }
    friend bool operator<(const PosInt& a, const PosInt& b) { return a.value_ < b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const PosInt& v) { return os << v.value_; }

private:
    // Quotient is only meaningful when the division is exact; callers check divides() first.
    friend PosInt exact_quotient(const PosInt& num, const PosInt& den);

    BigInt value_{1};
};

inline PosInt exact_quotient(const PosInt& num, const PosInt& den) {
    if (den.is_one()) return num;
    return PosInt(BigInt(num.value_ / den.value_));
}

inline PosInt gcd(const PosInt& a, const PosInt& b) {
    if (a.is_one() || b.is_one()) return PosInt{1};
    if (a.fits_u64() && b.fits_u64()) return PosInt{std::gcd(a.to_u64(), b.to_u64())};
    return PosInt(boost::multiprecision::gcd(a.value(), b.value()));
}

/// Finite 1-indexed prefix (x_1, ..., x_L) with L >= 1. The tag separates
/// sequence values from code values at the type level.
template <class Tag>
class Prefix {
public:
    Prefix(std::initializer_list<PosInt> terms) : Prefix(std::vector<PosInt>(terms)) {}

    explicit Prefix(std::vector<PosInt> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("prefix must have at least one term");
    }

    /// All-ones prefix of the given length.
    static Prefix ones(std::size_t length) {
        if (length == 0) throw std::invalid_argument("prefix must have at least one term");
        return Prefix(std::vector<PosInt>(length));
    }

    std::size_t length() const noexcept { return terms_.size(); }

    /// 1-based; n must be in [1, length()].
    const PosInt& operator[](std::size_t n) const { return terms_[n - 1]; }

    const PosInt& at(std::size_t n) const {
        if (n == 0 || n > terms_.size())
            throw std::out_of_range("index " + std::to_string(n) + " outside [1, " + std::to_string(terms_.size()) + "]");
        return terms_[n - 1];
    }

    std::span<const PosInt> terms() const noexcept { return terms_; }

    Prefix truncated(std::size_t length) const {
        if (length == 0 || length > terms_.size()) throw std::out_of_range("bad truncation length");
        return Prefix(std::vector<PosInt>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(length)));
    }

    /// Copy with term n replaced.
    Prefix with(std::size_t n, PosInt value) const {
        auto copy = terms_;
        copy.at(n - 1) = std::move(value);
        return Prefix(std::move(copy));
    }

    friend bool operator==(const Prefix&, const Prefix&) = default;

private:
    std::vector<PosInt> terms_;
};

struct SequenceTag {};
struct CodeTag {};

/// F_1..F_L
using SeqPrefix = Prefix<SequenceTag>;
/// c_1..c_L
using CodePrefix = Prefix<CodeTag>;

template <class Tag>
std::ostream& operator<<(std::ostream& os, const Prefix<Tag>& p) {
    os << '(';
    for (std::size_t i = 1; i <= p.length(); ++i) os << (i > 1 ? "," : "") << p[i];
    return os << ')';
}

/// Primary sequence G(c, N).
struct PrimarySpec {
    PosInt value;
    std::size_t period;

    PrimarySpec(PosInt c, std::size_t n) : value(std::move(c)), period(n) {
        if (period == 0) throw std::invalid_argument("primary period must be >= 1");
    }

    friend bool operator==(const PrimarySpec&, const PrimarySpec&) = default;
};

/// Divisors of n in ascending order, by trial division up to sqrt(n).
inline std::vector<std::size_t> divisors(std::size_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::size_t> low, high;
    for (std::size_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

inline PosInt primary_term(const PrimarySpec& spec, std::size_t n) {
    if (n == 0) throw std::invalid_argument("primary_term: index must be >= 1");
    return n % spec.period == 0 ? spec.value : PosInt{1};
}

inline SeqPrefix primary_prefix(const PrimarySpec& spec, std::size_t length) {
    if (length == 0) throw std::invalid_argument("primary_prefix: length must be >= 1");
    std::vector<PosInt> terms(length);
    for (std::size_t n = spec.period; n <= length; n += spec.period) terms[n - 1] = spec.value;
    return SeqPrefix(std::move(terms));
}

inline SeqPrefix pointwise_product(const SeqPrefix& a, const SeqPrefix& b) {
    if (a.length() != b.length()) throw LengthMismatch(a.length(), b.length());
    std::vector<PosInt> out;
    out.reserve(a.length());
    for (std::size_t i = 1; i <= a.length(); ++i) out.push_back(a[i] * b[i]);
    return SeqPrefix(std::move(out));
}

}  // namespace gcdmorph
