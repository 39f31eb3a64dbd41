// The partition text grammar: whitespace-separated tokens, each INT or
// INT^INT, parts strictly increasing left to right, exponents >= 1.
// Example: "1^3 5 9". Parsing is strict; non-increasing parts are rejected
// rather than sorted.
#pragma once

#include <stdexcept>
#include <string>

#include "zclass/partitions.hpp"

namespace zclass {

struct PartitionParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition_text(const std::string& text);

enum class ExponentStyle {
    Compact,   // "3 17", "1^3 5"
    Explicit,  // "3^1 17^1" (the delta-witness table style)
};

std::string render_partition_text(const Partition& p,
                                  ExponentStyle style = ExponentStyle::Compact);

}  // namespace zclass
