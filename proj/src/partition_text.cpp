#include "zclass/partition_text.hpp"

#include <cstdint>
#include <sstream>

namespace zclass {

namespace {

std::uint32_t parse_u32(const std::string& s) {
    if (s.empty()) throw PartitionParseError("empty number");
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw PartitionParseError("invalid number: '" + s + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 0xffffffffull) throw PartitionParseError("number out of range: '" + s + "'");
    }
    return static_cast<std::uint32_t>(v);
}

}  // namespace

Partition parse_partition_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<Partition::Pair> pairs;
    std::string token;
    while (in >> token) {
        const auto caret = token.find('^');
        if (caret != std::string::npos && token.find('^', caret + 1) != std::string::npos)
            throw PartitionParseError("invalid token: '" + token + "'");
        const std::uint32_t part =
            parse_u32(caret == std::string::npos ? token : token.substr(0, caret));
        const std::uint32_t mult =
            caret == std::string::npos ? 1 : parse_u32(token.substr(caret + 1));
        if (part == 0) throw PartitionParseError("parts must be positive");
        if (mult == 0) throw PartitionParseError("exponents must be >= 1");
        if (!pairs.empty() && part <= pairs.back().first)
            throw PartitionParseError("parts must be strictly increasing");
        pairs.push_back({part, mult});
    }
    if (pairs.empty()) throw PartitionParseError("empty partition");
    return Partition::from_pairs(std::move(pairs));
}

std::string render_partition_text(const Partition& p, ExponentStyle style) {
    std::string out;
    for (const auto& [part, mult] : p.pairs()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(part);
        if (mult > 1 || style == ExponentStyle::Explicit) {
            out += '^';
            out += std::to_string(mult);
        }
    }
    return out;
}

}  // namespace zclass
