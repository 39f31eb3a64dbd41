#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zclass/oracle.hpp"
#include "zclass/verify.hpp"

using namespace zclass;
using namespace zclass::oracle;

namespace {

Partition P(std::initializer_list<std::uint32_t> parts) {
    return Partition::from_parts(std::vector<std::uint32_t>(parts));
}

std::int32_t rep_id(const GroupTable& g, const Partition& lambda) {
    return g.id_of(word_from_permutation(canonical_representative(lambda)));
}

std::vector<std::size_t> sorted_sizes(const std::vector<ElementSet>& sets) {
    std::vector<std::size_t> sizes;
    for (const auto& s : sets) sizes.push_back(s.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("build_group sizes and order") {
    CHECK(build_group(4, GroupKind::Alt).size() == 12);
    CHECK(build_group(5, GroupKind::Sym).size() == 120);
    CHECK(build_group(1, GroupKind::Sym).size() == 1);
    CHECK_THROWS(build_group(10, GroupKind::Sym));
    CHECK_THROWS(build_group(0, GroupKind::Alt));

    const auto g = build_group(4, GroupKind::Sym);
    // Lexicographic image order, identity first.
    CHECK(g.elements.front() == identity_word());
    for (std::int32_t i = 1; i < g.size(); ++i) CHECK(g.elements[i - 1] < g.elements[i]);
    for (std::int32_t i = 0; i < g.size(); ++i) CHECK(g.id_of(g.word(i)) == i);
}

TEST_CASE("A_9 has 181440 elements") {
    CHECK(build_group(9, GroupKind::Alt).size() == 181440);
}

TEST_CASE("word arithmetic") {
    const auto g = build_group(5, GroupKind::Sym);
    for (std::int32_t a = 0; a < 20; ++a) {
        for (std::int32_t b = 0; b < 20; ++b) {
            const auto w = compose_words(g.word(a), g.word(b));
            CHECK(permutation_from_word(w, 5) ==
                  g.permutation(a).compose(g.permutation(b)));
        }
        CHECK(compose_words(g.word(a), inverse_word(g.word(a))) == identity_word());
        CHECK(conjugate_word(g.word(a), g.word(7)) ==
              compose_words(compose_words(g.word(a), g.word(7)), inverse_word(g.word(a))));
        CHECK(word_is_even(g.word(a), 5) == g.permutation(a).is_even());
        CHECK(word_order(g.word(a), 5) == g.permutation(a).order());
    }
}

TEST_CASE("conjugacy classes") {
    const auto a4 = build_group(4, GroupKind::Alt);
    const auto cls4 = conjugacy_classes(a4);
    CHECK(sorted_sizes(cls4.classes) == std::vector<std::size_t>{1, 3, 4, 4});

    CHECK(conjugacy_classes(build_group(5, GroupKind::Sym)).classes.size() == 7);
    CHECK(conjugacy_classes(build_group(5, GroupKind::Alt)).classes.size() == 5);

    // class_of is consistent.
    for (std::int32_t x = 0; x < a4.size(); ++x)
        CHECK(cls4.classes[cls4.class_of[x]].contains(x));
}

TEST_CASE("both class algorithms agree up to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt}) {
            if (kind == GroupKind::Alt && n < 3) continue;
            const auto g = build_group(n, kind);
            const auto a = conjugacy_classes(g, ClassAlgorithm::CycleTypeSplit);
            const auto b = conjugacy_classes(g, ClassAlgorithm::OrbitExpansion);
            REQUIRE(a.classes.size() == b.classes.size());
            for (std::size_t c = 0; c < a.classes.size(); ++c)
                REQUIRE(a.classes[c] == b.classes[c]);
            REQUIRE(a.class_of == b.class_of);
        }
    }
}

TEST_CASE("centralizer") {
    const auto s6 = build_group(6, GroupKind::Sym);
    const auto cent = centralizer(s6, rep_id(s6, P({1, 1, 4})));
    CHECK(cent.size() == 8);
    // Generated by (1,2) and (3,4,5,6).
    const auto closed = closure(
        s6, {s6.id_of(word_from_permutation(Permutation::from_images({1, 0, 2, 3, 4, 5}))),
             s6.id_of(word_from_permutation(Permutation::from_images({0, 1, 3, 4, 5, 2})))});
    CHECK(cent == closed);

    const auto a5 = build_group(5, GroupKind::Alt);
    CHECK(centralizer(a5, a5.identity_id()).size() == 60);
    CHECK(centralizer(a5, rep_id(a5, P({5}))).size() == 5);
}

TEST_CASE("center_of") {
    const auto a8 = build_group(8, GroupKind::Alt);
    const auto cent = centralizer(a8, rep_id(a8, P({1, 1, 1, 5})));
    CHECK(cent.size() == 15);
    CHECK(center_of(a8, cent) == cent);  // A_3 x C_5 is abelian

    const auto s3 = build_group(3, GroupKind::Sym);
    ElementSet whole;
    for (std::int32_t i = 0; i < s3.size(); ++i) whole.ids.push_back(i);
    CHECK(center_of(s3, whole).size() == 1);

    // Not closed: {e, one 4-cycle}.
    const auto s4 = build_group(4, GroupKind::Sym);
    ElementSet bad{{s4.identity_id(), rep_id(s4, P({4}))}};
    std::sort(bad.ids.begin(), bad.ids.end());
    CHECK_THROWS(center_of(s4, bad));
}

TEST_CASE("normalizer_of_cyclic") {
    const auto a5 = build_group(5, GroupKind::Alt);
    const auto s5 = build_group(5, GroupKind::Sym);
    const auto n_alt = normalizer_of_cyclic(a5, rep_id(a5, P({5})));
    const auto n_sym = normalizer_of_cyclic(s5, rep_id(s5, P({5})));
    CHECK(n_alt.size() == 10);  // strictly smaller: 5 is not a square
    CHECK(n_sym.size() == 20);
    CHECK(normalizer_of_cyclic(a5, a5.identity_id()).size() == 60);
}

TEST_CASE("subgroups_conjugate") {
    const auto s5 = build_group(5, GroupKind::Sym);
    const auto h = centralizer(s5, rep_id(s5, P({1, 1, 3})));
    const auto k = centralizer(s5, rep_id(s5, P({2, 3})));
    CHECK(h.size() == k.size());
    // The canonical representatives share one centralizer; a conjugated
    // representative gives a genuinely different but conjugate subgroup.
    CHECK(h == k);
    CHECK(subgroups_conjugate(s5, h, k));
    CHECK(subgroups_conjugate(s5, h, h));
    const std::int32_t moved =
        s5.id_of(conjugate_word(word_from_permutation(Permutation::from_images({2, 1, 0, 3, 4})),
                                s5.word(rep_id(s5, P({2, 3})))));
    const auto k2 = centralizer(s5, moved);
    CHECK(h != k2);
    CHECK(subgroups_conjugate(s5, h, k2));
    const auto other = centralizer(s5, rep_id(s5, P({5})));
    CHECK_FALSE(subgroups_conjugate(s5, h, other));  // different orders

    // The fast path agrees with the audited full scan on every pair.
    for (const auto& g : {build_group(5, GroupKind::Sym), build_group(6, GroupKind::Alt),
                          build_group(7, GroupKind::Alt)}) {
        const auto cls = conjugacy_classes(g);
        std::vector<ElementSet> cents;
        for (const auto& c : cls.classes) cents.push_back(centralizer(g, c.ids.front()));
        for (std::size_t i = 0; i < cents.size(); ++i)
            for (std::size_t j = 0; j < cents.size(); ++j)
                CHECK(subgroups_conjugate(g, cents[i], cents[j], ConjugacySearch::CosetSkip) ==
                      subgroups_conjugate(g, cents[i], cents[j], ConjugacySearch::FullScan));
    }
}

TEST_CASE("the two 9-cycle centralizers of A_9 are not conjugate") {
    // Both 9-cycle classes are rational (9 is a square), so no even element
    // carries one cyclic centralizer onto the other; the two split classes
    // are distinct z-classes.
    const auto a9 = build_group(9, GroupKind::Alt);
    const std::int32_t pos = rep_id(a9, P({9}));
    const auto cls = conjugacy_classes(a9);
    CHECK(is_rational_element(a9, cls, pos));
    const Word t_word = [&] {
        Word w = identity_word();
        std::swap(w[0], w[1]);
        return w;
    }();
    const std::int32_t neg = a9.id_of(conjugate_word(t_word, a9.word(pos)));
    CHECK(cls.class_of[pos] != cls.class_of[neg]);
    const auto cent_pos = centralizer(a9, pos);
    const auto cent_neg = centralizer(a9, neg);
    CHECK(cent_pos.size() == 9);
    CHECK(cent_neg.size() == 9);
    CHECK_FALSE(subgroups_conjugate(a9, cent_pos, cent_neg));
}

TEST_CASE("zclasses") {
    const auto s5 = build_group(5, GroupKind::Sym);
    CHECK(zclasses(s5).groups.size() == 6);

    const auto a6 = build_group(6, GroupKind::Alt);
    const auto z6 = zclasses(a6);
    CHECK(z6.groups.size() == 5);
    bool found_merge = false;
    for (const auto& group : z6.groups) {
        std::vector<Partition> types;
        for (int c : group) types.push_back(z6.labels[c].type);
        std::sort(types.begin(), types.end());
        if (types == std::vector<Partition>{P({1, 1, 1, 3}), P({3, 3})}) found_merge = true;
    }
    CHECK(found_merge);
}

TEST_CASE("rationality") {
    const auto a5 = build_group(5, GroupKind::Alt);
    const auto cls = conjugacy_classes(a5);
    CHECK(is_rational_element(a5, cls, rep_id(a5, P({1, 1, 3}))));
    CHECK_FALSE(is_rational_element(a5, cls, rep_id(a5, P({5}))));
    CHECK(is_rational_element(a5, cls, a5.identity_id()));

    CHECK(rational_class_orbits(build_group(4, GroupKind::Alt)).size() == 3);
    CHECK(rational_class_orbits(a5, cls).size() == 4);
    // S_n is rational: one orbit per class.
    const auto s5 = build_group(5, GroupKind::Sym);
    CHECK(rational_class_orbits(s5).size() == 7);
}

TEST_CASE("split tags name the canonical representative's class") {
    const auto a8 = build_group(8, GroupKind::Alt);
    const auto cls = conjugacy_classes(a8);
    const auto labels = class_labels(a8, cls);
    int split_pairs = 0;
    for (std::size_t c = 0; c < labels.size(); ++c) {
        if (labels[c].tag == SplitTag::SplitPos) {
            ++split_pairs;
            CHECK(cls.classes[c].contains(rep_id(a8, labels[c].type)));
        }
        if (labels[c].tag == SplitTag::SplitNeg)
            CHECK_FALSE(cls.classes[c].contains(rep_id(a8, labels[c].type)));
    }
    CHECK(split_pairs == 2);  // q(8) = 2: {1,7} and {3,5}
}

TEST_CASE("every verification check passes up to n = 8") {
    zclass::verify::Context ctx;
    for (const auto& r : zclass::verify::run_checks(ctx, {}, 8)) {
        INFO(r.check, " ", r.n, ": ", r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("serial and parallel kernels agree and are thread-count independent") {
    const auto a7 = build_group(7, GroupKind::Alt);
    const std::int32_t x = rep_id(a7, P({1, 3, 3}));

    const auto serial = centralizer(a7, x, Exec::Serial);
    set_threads(1);
    const auto par1 = centralizer(a7, x, Exec::Parallel);
    set_threads(4);
    const auto par4 = centralizer(a7, x, Exec::Parallel);
    CHECK(serial == par1);
    CHECK(serial == par4);

    const auto z_serial = zclasses(a7, Exec::Serial);
    const auto z_par = zclasses(a7, Exec::Parallel);
    CHECK(z_serial.groups == z_par.groups);
    CHECK(z_serial.conjugacy.class_of == z_par.conjugacy.class_of);

    const auto orb_serial = conjugacy_classes(a7, ClassAlgorithm::OrbitExpansion, Exec::Serial);
    const auto orb_par = conjugacy_classes(a7, ClassAlgorithm::OrbitExpansion, Exec::Parallel);
    CHECK(orb_serial.class_of == orb_par.class_of);
    set_threads(0);
}
