// Brute-force ground truth for S_n and A_n with n <= 9: full element tables,
// conjugacy classes, centralizers, centers, normalizers of cyclic subgroups,
// subgroup-conjugacy search, z-classes and power-map rationality. Everything
// here works at the element level; none of the closed-form classification
// theory is consulted.
//
// Elements are image arrays ("words") ranked lexicographically; an element id
// is its position in the group table. Degree is hard-capped at 9
// (|A_9| = 181440): the conjugator searches are O(|G| |H|) per subgroup pair
// and n = 10 does not fit a test budget.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zclass/oracle_kernels.hpp"
#include "zclass/partitions.hpp"
#include "zclass/permutation.hpp"
#include "zclass/symgroup.hpp"

namespace zclass::oracle {

inline constexpr int kMaxDegree = 9;

// 0-based image array, identity-padded beyond the degree.
using Word = std::array<std::uint8_t, kMaxDegree>;

Word identity_word();
Word word_from_permutation(const Permutation& p);
Permutation permutation_from_word(const Word& w, int degree);
Word compose_words(const Word& a, const Word& b);      // a after b
Word inverse_word(const Word& a);
Word conjugate_word(const Word& g, const Word& x);     // g x g^-1
bool word_is_even(const Word& w, int degree);
int word_order(const Word& w, int degree);
Word word_power(const Word& w, std::int64_t k, int degree);
Partition word_cycle_type(const Word& w, int degree);

// Lexicographic (Lehmer) rank of w among the degree! image arrays.
std::int32_t lehmer_rank(const Word& w, int degree);

struct GroupTable {
    int degree = 0;
    GroupKind kind = GroupKind::Sym;
    std::vector<Word> elements;             // lexicographic image order
    std::vector<std::int32_t> rank_to_id;   // degree! entries, -1 where absent

    std::int32_t size() const { return static_cast<std::int32_t>(elements.size()); }
    const Word& word(std::int32_t id) const { return elements[id]; }
    std::int32_t id_of(const Word& w) const { return rank_to_id[lehmer_rank(w, degree)]; }
    std::int32_t identity_id() const { return id_of(identity_word()); }
    std::int32_t mul(std::int32_t a, std::int32_t b) const {
        return id_of(compose_words(elements[a], elements[b]));
    }
    std::int32_t inv(std::int32_t a) const { return id_of(inverse_word(elements[a])); }
    std::int32_t conj(std::int32_t g, std::int32_t x) const {
        return id_of(conjugate_word(elements[g], elements[x]));
    }
    Permutation permutation(std::int32_t id) const {
        return permutation_from_word(elements[id], degree);
    }
};

// Rejects degree < 1 or > kMaxDegree.
GroupTable build_group(int degree, GroupKind kind);

// A set of element ids, sorted ascending. Where a subgroup is required the
// caller guarantees closure except where noted.
struct ElementSet {
    std::vector<std::int32_t> ids;

    bool contains(std::int32_t id) const;
    std::size_t size() const { return ids.size(); }
    bool operator==(const ElementSet& o) const { return ids == o.ids; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }
};

struct ConjugacyClasses {
    std::vector<ElementSet> classes;      // ordered by least member id
    std::vector<std::int32_t> class_of;   // element id -> class index
};

enum class ClassAlgorithm {
    CycleTypeSplit,   // bucket by cycle type; split via odd-centralizer scan
    OrbitExpansion,   // plain conjugation orbits (cross-validation path)
};

ConjugacyClasses conjugacy_classes(const GroupTable& g,
                                   ClassAlgorithm alg = ClassAlgorithm::CycleTypeSplit,
                                   Exec exec = Exec::Parallel);

ElementSet centralizer(const GroupTable& g, std::int32_t x, Exec exec = Exec::Parallel);
ElementSet centralizer(const GroupTable& g, const Permutation& x, Exec exec = Exec::Parallel);

// Subgroup generated by the given ids.
ElementSet closure(const GroupTable& g, const std::vector<std::int32_t>& generators);

// Elements of the subgroup h commuting with all of h. Throws if h is not a
// subgroup of g.
ElementSet center_of(const GroupTable& g, const ElementSet& h);

// { h in G : h <x> h^-1 = <x> }.
ElementSet normalizer_of_cyclic(const GroupTable& g, std::int32_t x, Exec exec = Exec::Parallel);

enum class ConjugacySearch {
    CosetSkip,   // skip left cosets of the incrementally discovered normalizer
    FullScan,    // every conjugator; the auditable slow path
};

// Is g H g^-1 = K for some g in G? Early-rejects on |H| != |K|.
bool subgroups_conjugate(const GroupTable& g, const ElementSet& h, const ElementSet& k,
                         ConjugacySearch mode = ConjugacySearch::CosetSkip,
                         Exec exec = Exec::Parallel);

// Cycle type plus split half of one oracle conjugacy class. SplitPos is the
// class containing the canonical representative of the type.
struct OracleClassLabel {
    Partition type;
    SplitTag tag;
};

// Label every oracle class by its cycle type, tagging the two halves of a
// split type by canonical-representative membership.
std::vector<OracleClassLabel> class_labels(const GroupTable& g, const ConjugacyClasses& cls);

struct ZClassesResult {
    ConjugacyClasses conjugacy;
    std::vector<OracleClassLabel> labels;   // per conjugacy class
    std::vector<std::vector<int>> groups;   // z-classes as class-index lists,
                                            // ordered by least class index
};

// z-classes from the definition: classes whose centralizers are conjugate
// subgroups of g.
ZClassesResult zclasses(const GroupTable& g, Exec exec = Exec::Parallel);

// Is x conjugate to x^m for every m coprime to ord(x)?
bool is_rational_element(const GroupTable& g, const ConjugacyClasses& cls, std::int32_t x);
bool is_rational_element(const GroupTable& g, std::int32_t x);

// Orbits of conjugacy classes under the power maps x -> x^m, (m, ord x) = 1.
std::vector<std::vector<int>> rational_class_orbits(const GroupTable& g,
                                                    const ConjugacyClasses& cls);
std::vector<std::vector<int>> rational_class_orbits(const GroupTable& g);

}  // namespace zclass::oracle
