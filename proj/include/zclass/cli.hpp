// Command-line front end: reference counting tables, single-partition classification,
// closed-form counts, z-class listings, canonical representatives, and the
// oracle verification driver. Output in text, CSV, or JSON.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 domain error.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "zclass/classifier.hpp"
#include "zclass/partition_text.hpp"

namespace zclass::cli {

enum class Format { Text, Csv, Json };

struct ReportDocument {
    Format format;
    std::string body;
};

// Bad arguments or unparseable partition text (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input outside an operation's domain (exit 3).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TableKind { PTilde, QQtilde, EpsDelta };

ReportDocument cmd_tables(TableKind table, std::uint32_t max, Format format);
ReportDocument cmd_classify(GroupKind group, const std::string& partition_text, Format format);
ReportDocument cmd_count(GroupKind group, std::uint32_t n, Format format);
ReportDocument cmd_zclasses(GroupKind group, std::uint32_t n, Format format);
ReportDocument cmd_rep(const std::string& partition_text, Format format);

struct VerifyOutcome {
    ReportDocument doc;
    bool all_passed;
};

// Runs the selected oracle checks for all admissible n up to n_max.
VerifyOutcome cmd_verify(int n_max, const std::set<std::string>& checks, Format format);

int run_cli(int argc, char** argv);

}  // namespace zclass::cli
