// Closed-form classification of z-classes and rational classes:
//   - z-partners and the z-class count in S_n,
//   - the z-class partition of A_n class labels (split separation for
//     all-square cycle types, and the 1^3 nu <-> 3^1 nu merge),
//   - rationality of A_n conjugacy classes and the three rational counts,
//   - rationality of the split character pairs.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zclass/bigcount.hpp"
#include "zclass/partitions.hpp"
#include "zclass/symgroup.hpp"

namespace zclass {

// One A_n conjugacy class: a cycle type plus a split half when the type has
// all parts distinct and odd.
struct ClassLabel {
    Partition partition;
    SplitTag tag = SplitTag::Whole;

    bool operator==(const ClassLabel& o) const {
        return tag == o.tag && partition == o.partition;
    }
    bool operator!=(const ClassLabel& o) const { return !(*this == o); }
    bool operator<(const ClassLabel& o) const {
        if (partition != o.partition) return partition < o.partition;
        return static_cast<int>(tag) < static_cast<int>(o.tag);
    }
};

struct ZClassification {
    GroupKind group;
    std::uint32_t n;
    std::vector<ClassLabel> classes;
    std::vector<std::uint32_t> zclass_of;  // parallel to classes; dense ids in
                                           // first-appearance order
    BigCount z_count;

    std::vector<std::vector<ClassLabel>> groups() const;
};

struct RationalityReport {
    std::uint32_t n;
    std::vector<ClassLabel> classes;
    std::vector<bool> rational;  // parallel to classes
    BigCount rational_conjugacy_class_count;
    BigCount rational_class_count;
    BigCount rational_character_count;
};

// S_n: 1^2 nu and 2^1 nu (min part of nu >= 3) are z-partners; empty otherwise.
std::optional<Partition> zpartner_sym(const Partition& lambda);

// A_n: the Theorem 2(2) partner if any: 1^3 nu -> 3^1 nu and back, nu a
// nonempty list of distinct odd parts >= 3 (a part 3 in nu is absorbed).
std::optional<Partition> zpartner_alt(const Partition& lambda);

// p(n) - p~(n-2); rejects n < 3.
BigCount count_zclasses_sym(std::uint32_t n);

// cl(A_n) = (p(n) + 3q(n))/2.
BigCount count_conjugacy_classes_alt(std::uint32_t n);

// All A_n class labels for the even partitions of n, in partition order with
// SplitPos before SplitNeg; rejects n < 4.
std::vector<ClassLabel> alt_class_labels(std::uint32_t n);

ZClassification classify_zclasses_alt(std::uint32_t n);

// cl(A_n) - (q(n) + q~(n-3)) + eps(n); rejects n < 4.
BigCount count_zclasses_alt(std::uint32_t n);

// Whole classes are rational; split classes are rational iff the product of
// the parts is a perfect square.
bool is_rational_conjugacy_class(const ClassLabel& label);

// Split character pair for a distinct-odd cycle type lambda: rational iff
// |Z_lambda| = prod(parts) is a perfect square. Verifies that a square
// |Z_lambda| forces e_lambda = +1. Rejects repeated or even parts.
bool character_pair_is_rational(const Partition& lambda);

RationalityReport rationality_report(std::uint32_t n);

// The rational-character count obtained from the character side: restricted
// characters of non-self-conjugate pairs (always rational) plus both members
// of each rational split pair. Self-conjugate partitions are counted by the
// Durfee-square route, independent of the class-side formula.
BigCount rational_character_count_character_side(std::uint32_t n);

}  // namespace zclass
