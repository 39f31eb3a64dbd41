// Oracle-vs-classifier equivalence checks: every closed-form statement the
// classifier relies on is re-derived from the element-level oracle and
// compared. Used by the `verify` CLI command and the acceptance suite.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zclass/classifier.hpp"
#include "zclass/oracle.hpp"

namespace zclass::verify {

struct CheckResult {
    std::string check;
    GroupKind group;
    int n;
    bool passed;
    std::string detail;  // first counterexample on failure, summary otherwise
};

// Caches group tables and class/z-class data across checks within one run.
class Context {
public:
    const oracle::GroupTable& table(GroupKind kind, int n);
    const oracle::ConjugacyClasses& classes(GroupKind kind, int n);
    const oracle::ZClassesResult& zclass_data(GroupKind kind, int n);

private:
    std::map<std::pair<int, int>, oracle::GroupTable> tables_;
    std::map<std::pair<int, int>, oracle::ConjugacyClasses> classes_;
    std::map<std::pair<int, int>, oracle::ZClassesResult> zdata_;
};

// Class counts, split count, and the z-class counts against both closed forms.
CheckResult check_counts(Context& ctx, GroupKind kind, int n);

// Label-for-label equality of the oracle z-class partition with the
// classifier output (Alt), or with the 1^2 nu / 2^1 nu merge rule (Sym).
CheckResult check_zclass(Context& ctx, GroupKind kind, int n);

// Power-map rationality of every element against the class-label criterion,
// plus the two rational-count formulas.
CheckResult check_rational(Context& ctx, GroupKind kind, int n);

// Sym: closure of the center generators equals the oracle center of the
// centralizer. Alt: strict containment Z(Z_{A_n}) > Z_lambda /\ A_n happens
// exactly on the exception families.
CheckResult check_center(Context& ctx, GroupKind kind, int n);

// Split criterion and centralizer orders for every even partition.
CheckResult check_split(Context& ctx, int n);

// N_{S_n}(<sigma>) = N_{A_n}(<sigma>) iff the distinct-odd cycle type has a
// perfect-square part product.
CheckResult check_brison(Context& ctx, int n);

inline const std::set<std::string>& all_check_names() {
    static const std::set<std::string> names{"counts", "zclass", "rational",
                                             "center", "split",  "brison"};
    return names;
}

// Runs the named checks for all admissible n up to n_max (3 <= n_max <= 9).
// The zclass check caps Sym at n = 8; everything else honours n_max.
std::vector<CheckResult> run_checks(Context& ctx, const std::set<std::string>& checks,
                                    int n_max);

}  // namespace zclass::verify
