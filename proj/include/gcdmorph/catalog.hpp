#pragma once
// Named reference sequences. Names are stable identifiers used by the CLI.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcdmorph/core.hpp"

namespace gcdmorph::catalog {

struct CatalogEntry {
    std::string name;         // identifier, or pattern for parameterized entries
    std::string description;
    bool expected_morphic;
    std::string sample;       // a concrete name accepted by emit()
};

inline const std::vector<CatalogEntry>& list() {
    static const std::vector<CatalogEntry> entries = {
        {"ones", "F_n = 1", true, "ones"},
        {"naturals", "F_n = n", true, "naturals"},
        {"fibonacci", "F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}", true, "fibonacci"},
        {"mersenne", "F_n = 2^n - 1", true, "mersenne"},
        {"radical", "F_n = product of the distinct primes dividing n", true, "radical"},
        {"primary:c:N", "G(c, N): c when N divides n, else 1", true, "primary:3:4"},
        {"constant:c", "F_n = c", true, "constant:5"},
        {"factorial", "F_n = n! (encodes, but is not GCD-morphic)", false, "factorial"},
    };
    return entries;
}

namespace detail {

inline std::size_t parse_index(std::string_view text, const std::string& name) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0) throw UnknownName(name);
    return v;
}

inline PosInt parse_value(std::string_view text, const std::string& name) {
    try {
        return PosInt::parse(text);
    } catch (const std::exception&) {
        throw UnknownName(name);
    }
}

inline std::size_t radical(std::size_t n) {
    std::size_t r = 1;
    for (std::size_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        r *= p;
        while (n % p == 0) n /= p;
    }
    return n > 1 ? r * n : r;
}

}  // namespace detail

/// Exact prefix of length L of the named sequence. Throws UnknownName.
inline SeqPrefix emit(const std::string& name, std::size_t length) {
    if (length == 0) throw std::invalid_argument("length must be >= 1");
    std::vector<PosInt> terms;
    terms.reserve(length);

    if (name == "ones") {
        return SeqPrefix::ones(length);
    }
    if (name == "naturals") {
        for (std::size_t n = 1; n <= length; ++n) terms.emplace_back(n);
    } else if (name == "fibonacci") {
        BigInt a = 1, b = 1;
        for (std::size_t n = 1; n <= length; ++n) {
            terms.emplace_back(a);
            BigInt next = a + b;
            a = std::move(b);
            b = std::move(next);
        }
    } else if (name == "mersenne") {
        for (std::size_t n = 1; n <= length; ++n) terms.emplace_back(BigInt((BigInt(1) << n) - 1));
    } else if (name == "radical") {
        for (std::size_t n = 1; n <= length; ++n) terms.emplace_back(detail::radical(n));
    } else if (name == "factorial") {
        BigInt acc = 1;
        for (std::size_t n = 1; n <= length; ++n) {
            acc *= n;
            terms.emplace_back(acc);
        }
    } else if (name.starts_with("constant:")) {
        return SeqPrefix(std::vector<PosInt>(length, detail::parse_value(std::string_view(name).substr(9), name)));
    } else if (name.starts_with("primary:")) {
        std::string_view rest = std::string_view(name).substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw UnknownName(name);
        PrimarySpec spec(detail::parse_value(rest.substr(0, colon), name),
                         detail::parse_index(rest.substr(colon + 1), name));
        return primary_prefix(spec, length);
    } else {
        throw UnknownName(name);
    }
    return SeqPrefix(std::move(terms));
}

}  // namespace gcdmorph::catalog
