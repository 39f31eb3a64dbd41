// Integer partitions of n >= 0 and the restricted families driving the
// S_n/A_n classification:
//
//   p(m)       all partitions
//   p~(m)      partitions with every part >= 3
//   q(m)       partitions into distinct odd parts (= self-conjugate count)
//   q~(m)      distinct odd parts, all >= 3          (q~(m)=0 for m<3)
//   eps(m)     distinct odd perfect-square parts
//   delta(m)   distinct odd parts whose product is a perfect square
//
// A partition is stored as ascending (part, multiplicity) pairs. Enumeration
// is lexicographic on the expanded ascending part list; all counts are exact.
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "zclass/bigcount.hpp"

namespace zclass {

class Partition {
public:
    using Pair = std::pair<std::uint32_t, std::uint32_t>;  // (part, multiplicity)

    Partition() = default;

    // pairs must be ascending in part with multiplicities >= 1.
    static Partition from_pairs(std::vector<Pair> pairs);
    // parts in any order, repetitions allowed.
    static Partition from_parts(const std::vector<std::uint32_t>& parts);

    const std::vector<Pair>& pairs() const { return pairs_; }
    std::uint64_t weight() const { return weight_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t distinct_count() const { return pairs_.size(); }

    std::uint32_t multiplicity_of(std::uint32_t part) const;
    std::vector<std::uint32_t> expanded() const;  // ascending, with repetition

    // Sum of multiplicities (the number of cycles, counting fixed points).
    std::uint64_t total_multiplicity() const;

    bool operator==(const Partition& o) const { return pairs_ == o.pairs_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // Lexicographic on the expanded ascending part list.
    bool operator<(const Partition& o) const;

private:
    std::vector<Pair> pairs_;
    std::uint64_t weight_ = 0;
};

// Uniform filter for the restricted families. min_part = 0 means unconstrained.
struct PartitionPredicate {
    std::uint32_t min_part = 0;
    bool parts_distinct = false;
    bool parts_odd = false;
    bool parts_square = false;
    bool product_square = false;

    bool admits(const Partition& p) const;
};

inline PartitionPredicate pred_all() { return {}; }
inline PartitionPredicate pred_min3() { return {.min_part = 3}; }
inline PartitionPredicate pred_distinct_odd() { return {.parts_distinct = true, .parts_odd = true}; }
inline PartitionPredicate pred_distinct_odd_min3() {
    return {.min_part = 3, .parts_distinct = true, .parts_odd = true};
}
inline PartitionPredicate pred_epsilon() {
    return {.parts_distinct = true, .parts_odd = true, .parts_square = true};
}
inline PartitionPredicate pred_delta() {
    return {.parts_distinct = true, .parts_odd = true, .product_square = true};
}

// Visits the partitions of m satisfying pred in lexicographic order of the
// expanded ascending part list; m = 0 visits the single empty partition.
void enumerate_visit(std::uint64_t m, const PartitionPredicate& pred,
                     const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate(std::uint64_t m, const PartitionPredicate& pred);

// Direct counters.
BigCount count_p(std::int64_t m);        // p(m); p(0)=1, p(m<0)=0
BigCount count_p_tilde(std::int64_t m);  // p(m)-p(m-1)-p(m-2)+p(m-3)
BigCount count_q(std::int64_t m);        // distinct odd; q(0)=1
BigCount count_q_tilde(std::int64_t m);  // distinct odd >= 3; 0 for m<3
BigCount count_epsilon(std::int64_t n);  // distinct odd squares
BigCount count_delta(std::int64_t n);    // distinct odd, square product

// The delta witnesses of n in enumeration order.
std::vector<Partition> delta_witnesses(std::uint64_t n);

enum class GfFamily { P, PTilde, Q, QTilde, Epsilon };

// Coefficients [x^0 .. x^max_m] of the family's generating product, computed
// by truncated polynomial multiplication over exact integers. Note the QTilde
// product has constant term 1 while count_q_tilde(0) = 0 by convention.
std::vector<BigCount> gf_coefficients(GfFamily family, std::uint64_t max_m);

// Conjugate (transpose) of the Young diagram.
Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

// Number of self-conjugate partitions of n, by the Durfee-square
// decomposition (independent of the distinct-odd-parts route).
BigCount count_self_conjugate(std::int64_t n);

}  // namespace zclass
