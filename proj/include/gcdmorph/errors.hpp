#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcdmorph {

// Caller errors. Mathematical failures (inexact encode, C1 or morphic
// violations) are returned as data, never thrown.

class LengthMismatch : public std::invalid_argument {
public:
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("prefix length mismatch: " + std::to_string(lhs) +
                                " vs " + std::to_string(rhs)) {}
};

class HypothesisViolated : public std::invalid_argument {
public:
    explicit HypothesisViolated(std::size_t index)
        : std::invalid_argument("peel: term " + std::to_string(index) +
                                " before the peel index is not 1"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NotDivisible : public std::domain_error {
public:
    explicit NotDivisible(std::size_t index)
        : std::domain_error("peel: leading term does not divide term " + std::to_string(index) +
                            "; sequence is not GCD-morphic"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class UnknownName : public std::invalid_argument {
public:
    explicit UnknownName(const std::string& name)
        : std::invalid_argument("unknown catalog entry: " + name) {}
};

class PoolExhausted : public std::invalid_argument {
public:
    PoolExhausted(std::size_t chains, std::size_t pool)
        : std::invalid_argument("requested " + std::to_string(chains) + " chains but the prime pool has only " +
                                std::to_string(pool) + " primes") {}
};

}  // namespace gcdmorph
