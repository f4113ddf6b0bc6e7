#pragma once
// Two independent deciders for GCD-morphicity of a prefix:
//   * check_c1 looks only at codes: gcd(c_n, c_k) = 1 whenever k < n and k does not divide n.
//   * check_gcd_morphic looks only at values: gcd(F_n, F_m) = F_gcd(n,m) for all m <= n.
// Both return the lexicographically smallest violating pair (n ascending,
// then the second index ascending), or nullopt on pass.

#include <cstddef>
#include <numeric>
#include <optional>

#include "gcdmorph/codec.hpp"
#include "gcdmorph/core.hpp"

namespace gcdmorph {

/// k < n, k does not divide n, and g = gcd(c_n, c_k) >= 2.
struct C1Witness {
    std::size_t n;
    std::size_t k;
    PosInt g;

    friend bool operator==(const C1Witness&, const C1Witness&) = default;
};

/// got = gcd(F_n, F_m) differs from expected = F_gcd(n,m).
struct MorphicWitness {
    std::size_t n;
    std::size_t m;
    PosInt got;
    PosInt expected;

    friend bool operator==(const MorphicWitness&, const MorphicWitness&) = default;
};

inline std::optional<C1Witness> check_c1(const CodePrefix& c) {
    for (std::size_t n = 2; n <= c.length(); ++n) {
        if (c[n].is_one()) continue;
        for (std::size_t k = 1; k < n; ++k) {
            if (n % k == 0 || c[k].is_one()) continue;
            PosInt g = gcd(c[n], c[k]);
            if (!g.is_one()) return C1Witness{n, k, std::move(g)};
        }
    }
    return std::nullopt;
}

struct MorphicScan {
    std::optional<MorphicWitness> witness;
    std::size_t pairs_examined = 0;
};

/// Brute-force pair scan over 1 <= m <= n <= L. Uses no encoding machinery.
inline MorphicScan scan_gcd_morphic(const SeqPrefix& f) {
    MorphicScan scan;
    for (std::size_t n = 1; n <= f.length(); ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            ++scan.pairs_examined;
            const PosInt& expected = f[std::gcd(n, m)];
            PosInt got = gcd(f[n], f[m]);
            if (!(got == expected)) {
                scan.witness = MorphicWitness{n, m, std::move(got), expected};
                return scan;
            }
        }
    }
    return scan;
}

inline std::optional<MorphicWitness> check_gcd_morphic(const SeqPrefix& f) {
    return scan_gcd_morphic(f).witness;
}

/// Outcome of the full decision procedure: encode, then C1 on the code,
/// cross-checked against the brute-force morphic scan.
struct Certificate {
    EncodeResult encoding;
    bool c1_checked = false;  // false when encode failed
    std::optional<C1Witness> c1_witness;
    std::optional<MorphicWitness> morphic_witness;
    // (encode ok && C1 pass) == morphic pass. False means a bug, not mathematics.
    bool consistent = false;

    bool encode_ok() const noexcept { return encoding.ok(); }
    bool c1_pass() const noexcept { return c1_checked && !c1_witness; }
    bool morphic_pass() const noexcept { return !morphic_witness; }
    bool certified() const noexcept { return encode_ok() && c1_pass(); }
};

inline Certificate certify(const SeqPrefix& f) {
    Certificate cert{encode(f), false, std::nullopt, std::nullopt, false};
    if (cert.encoding.ok()) {
        cert.c1_checked = true;
        cert.c1_witness = check_c1(cert.encoding.code());
    }
    cert.morphic_witness = check_gcd_morphic(f);
    cert.consistent = cert.certified() == cert.morphic_pass();
    return cert;
}

}  // namespace gcdmorph
