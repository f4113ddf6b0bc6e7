#pragma once
// Command-line front end. run() is the whole program minus process plumbing,
// so tests can drive it with string streams.
//
// Exit codes: 0 ok, 1 failed check, 2 encode failure, 64 usage error,
// 65 malformed input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcdmorph/catalog.hpp"
#include "gcdmorph/codec.hpp"
#include "gcdmorph/core.hpp"
#include "gcdmorph/generator.hpp"
#include "gcdmorph/io.hpp"
#include "gcdmorph/validator.hpp"

namespace gcdmorph::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kEncodeFailed = 2,
    kUsage = 64,
    kMalformed = 65,
};

namespace detail {

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline std::vector<PosInt> read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return io::read_values(in);
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    return io::read_values(file);
}

inline void emit_values(std::ostream& out, bool json, std::string_view role, std::span<const PosInt> values) {
    if (json)
        out << io::values_json(role, values).dump() << '\n';
    else
        io::write_lines(out, values);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "GCD-morphic sequence toolkit.\n"
        "A sequence F is encoded as c_n = F_n / prod_{k|n,k<n} c_k and decoded as F_n = prod_{j|n} c_j.\n"
        "A successful encode is NOT a certificate: F is GCD-morphic iff encode succeeds AND the code\n"
        "passes `check c1`. `check certify` runs both and cross-checks them against brute force.",
        "gcdmorph"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "Write sequences as {\"role\":...,\"values\":[...strings...]}");

    std::string input;

    auto* encode_cmd = app.add_subcommand(
        "encode", "Read a sequence, write its code (exit 2 on inexact division; success alone does not certify)");
    encode_cmd->add_option("input", input, "Input file (default stdin)");

    auto* decode_cmd = app.add_subcommand("decode", "Read a code, write the sequence it encodes");
    decode_cmd->add_option("input", input, "Input file (default stdin)");

    auto* check_cmd = app.add_subcommand("check", "Validate a code or sequence");
    check_cmd->require_subcommand(1);
    auto* c1_cmd = check_cmd->add_subcommand("c1", "Read a code; pass iff gcd(c_n,c_k)=1 whenever k<n and k does not divide n");
    auto* morphic_cmd =
        check_cmd->add_subcommand("morphic", "Read a sequence; brute-force check gcd(F_n,F_m) = F_gcd(n,m)");
    auto* certify_cmd =
        check_cmd->add_subcommand("certify", "Read a sequence; encode + check c1, cross-checked against brute force");
    for (auto* sub : {c1_cmd, morphic_cmd, certify_cmd}) sub->add_option("input", input, "Input file (default stdin)");

    GenParams gen_params;
    std::size_t prime_count = 20;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a code that satisfies C1");
    gen_cmd->add_option("--length", gen_params.length, "Code length L")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_params.seed, "64-bit seed")->required();
    gen_cmd->add_option("--primes", prime_count, "Pool = first K primes")->capture_default_str()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--chains", gen_params.chains, "Prime-chain rounds")->capture_default_str();
    gen_cmd->add_option("--max-exp", gen_params.max_exponent, "Max exponent per chain member")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::uint64_t corrupt_seed = 0;
    auto* corrupt_cmd = app.add_subcommand("corrupt", "Read a code, write a copy that violates C1");
    corrupt_cmd->add_option("--seed", corrupt_seed, "64-bit seed")->required();
    corrupt_cmd->add_option("input", input, "Input file (default stdin)");

    auto* catalog_cmd = app.add_subcommand("catalog", "Reference sequences");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
    std::string emit_name;
    std::size_t emit_length = 0;
    auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Write a prefix of a catalog sequence");
    emit_cmd->add_option("name", emit_name, "Entry name, e.g. fibonacci, primary:3:4, constant:5")->required();
    emit_cmd->add_option("--length", emit_length, "Prefix length L")->required()->check(CLI::PositiveNumber);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("gcdmorph");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*encode_cmd) {
            const SeqPrefix f(detail::read_input(input, in));
            const auto result = encode(f);
            if (!result) {
                err << io::to_json(result.failure()).dump() << '\n';
                return kEncodeFailed;
            }
            detail::emit_values(out, json, "code", result.code().terms());
            return kOk;
        }
        if (*decode_cmd) {
            const CodePrefix c(detail::read_input(input, in));
            detail::emit_values(out, json, "sequence", decode(c).terms());
            return kOk;
        }
        if (*c1_cmd) {
            const CodePrefix c(detail::read_input(input, in));
            if (auto w = check_c1(c)) {
                out << io::to_json(*w).dump() << '\n';
                return kCheckFailed;
            }
            out << R"({"ok":true})" << '\n';
            return kOk;
        }
        if (*morphic_cmd) {
            const SeqPrefix f(detail::read_input(input, in));
            if (auto w = check_gcd_morphic(f)) {
                out << io::to_json(*w).dump() << '\n';
                return kCheckFailed;
            }
            out << R"({"ok":true})" << '\n';
            return kOk;
        }
        if (*certify_cmd) {
            const SeqPrefix f(detail::read_input(input, in));
            const auto cert = certify(f);
            if (!cert.consistent) err << "internal error: checkers disagree\n";
            if (cert.certified() && cert.consistent) {
                out << R"({"ok":true})" << '\n';
                return kOk;
            }
            out << io::to_json(cert).dump() << '\n';
            return kCheckFailed;
        }
        if (*gen_cmd) {
            gen_params.prime_pool = first_primes(prime_count);
            const auto code = generate(gen_params);
            if (json) {
                auto j = io::values_json("code", code.terms());
                j["meta"] = {{"rng", SplitMix64::algorithm}, {"seed", std::to_string(gen_params.seed)}};
                out << j.dump() << '\n';
            } else {
                out << "# gen rng=" << SplitMix64::algorithm << " seed=" << gen_params.seed
                    << " length=" << gen_params.length << " primes=" << prime_count
                    << " chains=" << gen_params.chains << " max-exp=" << gen_params.max_exponent << '\n';
                io::write_lines(out, code.terms());
            }
            return kOk;
        }
        if (*corrupt_cmd) {
            const CodePrefix c(detail::read_input(input, in));
            if (c.length() < 3) {
                err << "error: corrupt needs a code with at least 3 values\n";
                return kMalformed;
            }
            detail::emit_values(out, json, "code", corrupt(c, corrupt_seed).terms());
            return kOk;
        }
        if (*list_cmd) {
            if (json) {
                io::Json arr = io::Json::array();
                for (const auto& e : catalog::list())
                    arr.push_back({{"name", e.name},
                                   {"description", e.description},
                                   {"expected_morphic", e.expected_morphic}});
                out << arr.dump() << '\n';
            } else {
                for (const auto& e : catalog::list())
                    out << e.name << '\t' << (e.expected_morphic ? "morphic" : "not-morphic") << '\t'
                        << e.description << '\n';
            }
            return kOk;
        }
        if (*emit_cmd) {
            detail::emit_values(out, json, "sequence", catalog::emit(emit_name, emit_length).terms());
            return kOk;
        }
    } catch (const io::MalformedInput& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace gcdmorph::cli
