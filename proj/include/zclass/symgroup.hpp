// Cycle-type combinatorics of S_n and A_n at the partition level: canonical
// class representatives, centralizer structure and exact order, parity, the
// split criterion, the center of the centralizer, and the A_n
// center-of-centralizer exception test.
#pragma once

#include <cstdint>
#include <vector>

#include "zclass/bigcount.hpp"
#include "zclass/partitions.hpp"
#include "zclass/permutation.hpp"

namespace zclass {

enum class GroupKind { Sym, Alt };

// Split half of an A_n conjugacy class whose cycle type has all parts
// distinct and odd. SplitPos is the class of the canonical representative,
// SplitNeg its conjugate by the transposition (1,2).
enum class SplitTag { Whole, SplitPos, SplitNeg };

// Centralizer of a cycle type: a direct product of factors C_part wr S_mult.
struct CentralizerShape {
    struct Factor {
        std::uint32_t cycle_length;
        std::uint32_t wreath_degree;
    };
    std::vector<Factor> factors;
    BigCount order;
    GroupKind group;
};

// Center of the S_n centralizer of the canonical representative: one diagonal
// generator per part >= 2, plus the transposition of the two fixed points in
// the 1^2 case.
struct CenterDescription {
    std::vector<Permutation> generators;
    BigCount order;
    bool has_transposition_factor;
};

// sigma_lambda: the i-th group of e_i cycles of length lambda_i occupies
// consecutive points; parts equal to 1 contribute fixed points.
Permutation canonical_representative(const Partition& lambda);

Partition cycle_type(const Permutation& g);

// True iff sigma_lambda lies in A_n, i.e. n - sum(e_i) is even.
bool is_even_partition(const Partition& lambda);

// True iff the S_n class splits into two A_n classes: all parts distinct and
// odd. Rejects non-even partitions.
bool splits_in_alt(const Partition& lambda);

CentralizerShape centralizer_shape(const Partition& lambda, GroupKind group);

CenterDescription center_description(const Partition& lambda);

// True iff Z(Z_{A_n}(sigma_lambda)) strictly contains Z_lambda /\ A_n.
// The exception families, with nu a list of distinct odd parts >= 3:
//   (1) 1^3 nu ; 2^2 nu ; 1^1 2^2 nu            (nu possibly empty)
//   (2) 1^1 nu ; nu   with exactly one part of nu doubled
// Rejects non-even partitions.
bool center_exception_in_alt(const Partition& lambda);

}  // namespace zclass
