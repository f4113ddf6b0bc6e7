#pragma once
// Line-oriented wire format and JSON encodings.
//
// Text: UTF-8, one decimal integer per line, first line is index 1. Blank
// lines and lines starting with '#' are ignored.
// JSON: integers that can be arbitrarily large are emitted as decimal strings.

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gcdmorph/codec.hpp"
#include "gcdmorph/core.hpp"
#include "gcdmorph/validator.hpp"

namespace gcdmorph::io {

using Json = nlohmann::ordered_json;

class MalformedInput : public std::runtime_error {
public:
    MalformedInput(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline std::vector<PosInt> read_values(std::istream& in) {
    std::vector<PosInt> values;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line.front() == '#') continue;
        try {
            values.push_back(PosInt::parse(line));
        } catch (const std::exception& e) {
            throw MalformedInput(line_no, e.what());
        }
    }
    if (values.empty()) throw MalformedInput(line_no, "no values");
    return values;
}

inline void write_lines(std::ostream& out, std::span<const PosInt> values) {
    for (const auto& v : values) out << v << '\n';
}

inline Json values_json(std::string_view role, std::span<const PosInt> values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return Json{{"role", role}, {"values", std::move(arr)}};
}

inline Json to_json(const C1Witness& w) {
    return Json{{"kind", "c1"}, {"n", w.n}, {"k", w.k}, {"g", w.g.str()}};
}

inline Json to_json(const MorphicWitness& w) {
    return Json{{"kind", "morphic"}, {"n", w.n}, {"m", w.m}, {"got", w.got.str()}, {"expected", w.expected.str()}};
}

inline Json to_json(const EncodeFailure& f) {
    return Json{{"kind", "encode"},
                {"n", f.index},
                {"numerator", f.numerator.str()},
                {"denominator", f.denominator.str()}};
}

inline Json to_json(const Certificate& cert) {
    Json j{{"kind", "certificate"}, {"certified", cert.certified()}};
    j["encode"] = cert.encode_ok() ? Json{{"ok", true}} : to_json(cert.encoding.failure());
    if (!cert.c1_checked)
        j["c1"] = nullptr;
    else
        j["c1"] = cert.c1_witness ? to_json(*cert.c1_witness) : Json{{"ok", true}};
    j["morphic"] = cert.morphic_witness ? to_json(*cert.morphic_witness) : Json{{"ok", true}};
    j["consistent"] = cert.consistent;
    return j;
}

}  // namespace gcdmorph::io
