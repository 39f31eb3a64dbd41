#include "zclass/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace zclass::oracle {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int threads) { g_threads.store(threads < 0 ? 0 : threads); }

int effective_threads() {
    const int t = g_threads.load();
    if (t > 0) return t;
    if (const char* env = std::getenv("ZCLASS_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Word identity_word() {
    Word w;
    for (int i = 0; i < kMaxDegree; ++i) w[i] = static_cast<std::uint8_t>(i);
    return w;
}

Word word_from_permutation(const Permutation& p) {
    if (p.degree() > kMaxDegree)
        throw std::invalid_argument("permutation degree exceeds the oracle cap");
    Word w = identity_word();
    for (int i = 0; i < p.degree(); ++i) w[i] = static_cast<std::uint8_t>(p.apply(i));
    return w;
}

Permutation permutation_from_word(const Word& w, int degree) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = w[i];
    return Permutation::from_images(std::move(images));
}

Word compose_words(const Word& a, const Word& b) {
    Word out;
    for (int i = 0; i < kMaxDegree; ++i) out[i] = a[b[i]];
    return out;
}

Word inverse_word(const Word& a) {
    Word out;
    for (int i = 0; i < kMaxDegree; ++i) out[a[i]] = static_cast<std::uint8_t>(i);
    return out;
}

Word conjugate_word(const Word& g, const Word& x) {
    // (g x g^-1)(g(i)) = g(x(i))
    Word out;
    for (int i = 0; i < kMaxDegree; ++i) out[g[i]] = g[x[i]];
    return out;
}

bool word_is_even(const Word& w, int degree) {
    std::uint16_t seen = 0;
    int transpositions = 0;
    for (int i = 0; i < degree; ++i) {
        if (seen & (1u << i)) continue;
        int len = 0;
        for (int j = i; !(seen & (1u << j)); j = w[j]) {
            seen |= static_cast<std::uint16_t>(1u << j);
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

int word_order(const Word& w, int degree) {
    std::uint16_t seen = 0;
    int ord = 1;
    for (int i = 0; i < degree; ++i) {
        if (seen & (1u << i)) continue;
        int len = 0;
        for (int j = i; !(seen & (1u << j)); j = w[j]) {
            seen |= static_cast<std::uint16_t>(1u << j);
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Word word_power(const Word& w, std::int64_t k, int degree) {
    const int ord = word_order(w, degree);
    k %= ord;
    if (k < 0) k += ord;
    Word acc = identity_word();
    Word base = w;
    while (k > 0) {
        if (k & 1) acc = compose_words(acc, base);
        base = compose_words(base, base);
        k >>= 1;
    }
    return acc;
}

Partition word_cycle_type(const Word& w, int degree) {
    std::vector<std::uint32_t> lengths;
    std::uint16_t seen = 0;
    for (int i = 0; i < degree; ++i) {
        if (seen & (1u << i)) continue;
        std::uint32_t len = 0;
        for (int j = i; !(seen & (1u << j)); j = w[j]) {
            seen |= static_cast<std::uint16_t>(1u << j);
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_parts(lengths);
}

namespace {

constexpr std::int32_t kFactorial[kMaxDegree + 1] = {1,      1,      2,     6,     24,
                                                     120,    720,    5040,  40320, 362880};

}  // namespace

std::int32_t lehmer_rank(const Word& w, int degree) {
    std::int32_t rank = 0;
    std::uint16_t used = 0;
    for (int i = 0; i < degree; ++i) {
        const int v = w[i];
        const int smaller = v - __builtin_popcount(used & ((1u << v) - 1));
        rank += smaller * kFactorial[degree - 1 - i];
        used |= static_cast<std::uint16_t>(1u << v);
    }
    return rank;
}

GroupTable build_group(int degree, GroupKind kind) {
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("build_group: degree must be in [1, 9]");
    GroupTable g;
    g.degree = degree;
    g.kind = kind;
    g.rank_to_id.assign(kFactorial[degree], -1);

    std::vector<std::uint8_t> images(degree);
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    std::int32_t rank = 0;
    do {
        Word w = identity_word();
        std::copy(images.begin(), images.end(), w.begin());
        if (kind == GroupKind::Sym || word_is_even(w, degree)) {
            g.rank_to_id[rank] = g.size();
            g.elements.push_back(w);
        }
        ++rank;
    } while (std::next_permutation(images.begin(), images.end()));
    return g;
}

bool ElementSet::contains(std::int32_t id) const {
    return std::binary_search(ids.begin(), ids.end(), id);
}

namespace {

// Deterministic bucket key for a cycle type: ascending parts, 4 bits each.
std::uint64_t type_key(const Word& w, int degree) {
    std::uint64_t key = 0;
    std::uint16_t seen = 0;
    std::array<std::uint8_t, kMaxDegree> lengths{};
    int r = 0;
    for (int i = 0; i < degree; ++i) {
        if (seen & (1u << i)) continue;
        std::uint8_t len = 0;
        for (int j = i; !(seen & (1u << j)); j = w[j]) {
            seen |= static_cast<std::uint16_t>(1u << j);
            ++len;
        }
        lengths[r++] = len;
    }
    std::sort(lengths.begin(), lengths.begin() + r);
    for (int i = 0; i < r; ++i) key = (key << 4) | lengths[i];
    return key;
}

// Conjugator carrying x to y built by matching their canonical cycle layouts
// (cycles sorted by length then least point, fixed points included).
Word canonical_conjugator(const Word& x, const Word& y, int degree) {
    const auto layout = [degree](const Word& w) {
        std::vector<std::vector<int>> cycles;
        std::uint16_t seen = 0;
        for (int i = 0; i < degree; ++i) {
            if (seen & (1u << i)) continue;
            std::vector<int> cyc;
            for (int j = i; !(seen & (1u << j)); j = w[j]) {
                seen |= static_cast<std::uint16_t>(1u << j);
                cyc.push_back(j);
            }
            cycles.push_back(std::move(cyc));
        }
        std::stable_sort(cycles.begin(), cycles.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<int> points;
        for (const auto& c : cycles) points.insert(points.end(), c.begin(), c.end());
        return points;
    };
    const std::vector<int> px = layout(x);
    const std::vector<int> py = layout(y);
    Word s = identity_word();
    for (std::size_t i = 0; i < px.size(); ++i) s[px[i]] = static_cast<std::uint8_t>(py[i]);
    return s;
}

// Does any odd permutation of the ambient S_degree centralize any flagged
// representative? Runs one pass over all degree! words.
void flag_types_with_odd_centralizer(const std::vector<Word>& reps, int degree,
                                     std::vector<char>& has_odd) {
    std::vector<std::uint8_t> images(degree);
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    do {
        Word w = identity_word();
        std::copy(images.begin(), images.end(), w.begin());
        if (word_is_even(w, degree)) continue;
        for (std::size_t t = 0; t < reps.size(); ++t) {
            if (has_odd[t]) continue;
            if (compose_words(w, reps[t]) == compose_words(reps[t], w)) has_odd[t] = 1;
        }
    } while (std::next_permutation(images.begin(), images.end()));
}

ConjugacyClasses classes_by_cycle_type(const GroupTable& g, Exec exec) {
    const std::int32_t n = g.size();
    std::vector<std::uint64_t> keys(n);
#ifdef _OPENMP
    if (exec == Exec::Parallel && effective_threads() > 1) {
#pragma omp parallel for schedule(static) num_threads(effective_threads())
        for (std::int32_t i = 0; i < n; ++i) keys[i] = type_key(g.word(i), g.degree);
    } else
#endif
    {
        for (std::int32_t i = 0; i < n; ++i) keys[i] = type_key(g.word(i), g.degree);
    }

    // Buckets in order of first appearance (= least member id).
    std::vector<std::vector<std::int32_t>> buckets;
    {
        std::vector<std::uint64_t> sorted_keys = keys;
        std::sort(sorted_keys.begin(), sorted_keys.end());
        sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());
        std::vector<std::int32_t> order(sorted_keys.size(), -1);
        std::int32_t next = 0;
        for (std::int32_t i = 0; i < n; ++i) {
            const auto pos = std::lower_bound(sorted_keys.begin(), sorted_keys.end(), keys[i]) -
                             sorted_keys.begin();
            if (order[pos] < 0) {
                order[pos] = next++;
                buckets.emplace_back();
            }
            buckets[order[pos]].push_back(i);
        }
    }

    ConjugacyClasses out;
    out.class_of.assign(n, -1);
    if (g.kind == GroupKind::Sym) {
        for (auto& b : buckets) out.classes.push_back(ElementSet{std::move(b)});
    } else {
        std::vector<Word> reps;
        for (const auto& b : buckets) reps.push_back(g.word(b.front()));
        std::vector<char> has_odd(buckets.size(), 0);
        flag_types_with_odd_centralizer(reps, g.degree, has_odd);
        for (std::size_t t = 0; t < buckets.size(); ++t) {
            if (has_odd[t]) {
                out.classes.push_back(ElementSet{std::move(buckets[t])});
                continue;
            }
            // Split: assign by the parity of the canonical conjugator, which
            // is class-invariant exactly because no odd element centralizes.
            ElementSet pos, neg;
            for (std::int32_t id : buckets[t]) {
                const Word s = canonical_conjugator(reps[t], g.word(id), g.degree);
                (word_is_even(s, g.degree) ? pos : neg).ids.push_back(id);
            }
            out.classes.push_back(std::move(pos));
            out.classes.push_back(std::move(neg));
        }
        // Re-sort by least member id (a split's halves are adjacent already,
        // and the first half contains the bucket minimum).
        std::sort(out.classes.begin(), out.classes.end(),
                  [](const ElementSet& a, const ElementSet& b) { return a.ids.front() < b.ids.front(); });
    }
    for (std::size_t c = 0; c < out.classes.size(); ++c)
        for (std::int32_t id : out.classes[c].ids) out.class_of[id] = static_cast<std::int32_t>(c);
    return out;
}

ConjugacyClasses classes_by_orbit(const GroupTable& g, Exec exec) {
    const std::int32_t n = g.size();
    ConjugacyClasses out;
    out.class_of.assign(n, -1);
    std::vector<std::int32_t> image(n);
    for (std::int32_t x = 0; x < n; ++x) {
        if (out.class_of[x] >= 0) continue;
        const Word wx = g.word(x);
        kernels::transform_ids(n, exec, image.data(), [&](std::int32_t i) {
            return g.id_of(conjugate_word(g.word(i), wx));
        });
        std::vector<char> member(n, 0);
        for (std::int32_t i = 0; i < n; ++i) member[image[i]] = 1;
        ElementSet cls;
        const auto c = static_cast<std::int32_t>(out.classes.size());
        for (std::int32_t i = 0; i < n; ++i) {
            if (!member[i]) continue;
            cls.ids.push_back(i);
            out.class_of[i] = c;
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

ConjugacyClasses conjugacy_classes(const GroupTable& g, ClassAlgorithm alg, Exec exec) {
    return alg == ClassAlgorithm::CycleTypeSplit ? classes_by_cycle_type(g, exec)
                                                 : classes_by_orbit(g, exec);
}

ElementSet centralizer(const GroupTable& g, std::int32_t x, Exec exec) {
    const Word wx = g.word(x);
    return ElementSet{kernels::collect_ids(g.size(), exec, [&](std::int32_t i) {
        return compose_words(g.word(i), wx) == compose_words(wx, g.word(i));
    })};
}

ElementSet centralizer(const GroupTable& g, const Permutation& x, Exec exec) {
    const std::int32_t id = g.id_of(word_from_permutation(x));
    if (id < 0) throw std::invalid_argument("centralizer: element is not in the group");
    return centralizer(g, id, exec);
}

ElementSet closure(const GroupTable& g, const std::vector<std::int32_t>& generators) {
    std::vector<char> in(g.size(), 0);
    std::vector<std::int32_t> frontier{g.identity_id()};
    in[g.identity_id()] = 1;
    std::vector<std::int32_t> all = frontier;
    while (!frontier.empty()) {
        std::vector<std::int32_t> next;
        for (std::int32_t x : frontier) {
            for (std::int32_t s : generators) {
                const std::int32_t y = g.mul(x, s);
                if (!in[y]) {
                    in[y] = 1;
                    next.push_back(y);
                    all.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return ElementSet{std::move(all)};
}

ElementSet center_of(const GroupTable& g, const ElementSet& h) {
    if (h.ids.empty() || !h.contains(g.identity_id()))
        throw std::invalid_argument("center_of: not a subgroup (missing identity)");
    // Greedy generating set, then verify the closure reproduces h exactly.
    std::vector<std::int32_t> gens;
    ElementSet generated{{g.identity_id()}};
    for (std::int32_t id : h.ids) {
        if (generated.contains(id)) continue;
        gens.push_back(id);
        generated = closure(g, gens);
        if (generated.size() > h.size()) break;
    }
    if (generated != h) throw std::invalid_argument("center_of: set is not closed");
    ElementSet center;
    for (std::int32_t id : h.ids) {
        const Word w = g.word(id);
        bool commutes = true;
        for (std::int32_t s : gens) {
            if (compose_words(w, g.word(s)) != compose_words(g.word(s), w)) {
                commutes = false;
                break;
            }
        }
        if (commutes) center.ids.push_back(id);
    }
    return center;
}

ElementSet normalizer_of_cyclic(const GroupTable& g, std::int32_t x, Exec exec) {
    const int ord = word_order(g.word(x), g.degree);
    ElementSet powers;
    {
        Word w = identity_word();
        for (int k = 0; k < ord; ++k) {
            powers.ids.push_back(g.id_of(w));
            w = compose_words(w, g.word(x));
        }
        std::sort(powers.ids.begin(), powers.ids.end());
    }
    const Word wx = g.word(x);
    return ElementSet{kernels::collect_ids(g.size(), exec, [&](std::int32_t i) {
        return powers.contains(g.id_of(conjugate_word(g.word(i), wx)));
    })};
}

namespace {

// g H g^-1 as a membership test against a sorted target set.
bool conjugate_set_equals(const GroupTable& g, const Word& wg, const ElementSet& h,
                          const ElementSet& target) {
    for (std::int32_t id : h.ids)
        if (!target.contains(g.id_of(conjugate_word(wg, g.word(id))))) return false;
    return true;
}

}  // namespace

bool subgroups_conjugate(const GroupTable& g, const ElementSet& h, const ElementSet& k,
                         ConjugacySearch mode, Exec exec) {
    if (h.size() != k.size()) return false;
    if (h == k) return true;

    if (mode == ConjugacySearch::FullScan) {
        return kernels::exists_id(g.size(), exec, [&](std::int32_t i) {
            return conjugate_set_equals(g, g.word(i), h, k);
        });
    }

    // Conjugation is constant on left cosets gN of N = N_G(H), and every
    // subgroup normalizes itself, so N starts as H and grows as further
    // normalizing elements are discovered.
    std::vector<char> seen(g.size(), 0);
    std::vector<std::int32_t> normalizer = h.ids;
    for (std::int32_t cand = 0; cand < g.size(); ++cand) {
        if (seen[cand]) continue;
        const Word wc = g.word(cand);
        if (conjugate_set_equals(g, wc, h, k)) return true;
        const bool normalizes = conjugate_set_equals(g, wc, h, h);
        if (normalizes && !std::binary_search(h.ids.begin(), h.ids.end(), cand))
            normalizer.push_back(cand);
        for (std::int32_t nrm : normalizer) seen[g.mul(cand, nrm)] = 1;
    }
    return false;
}

std::vector<OracleClassLabel> class_labels(const GroupTable& g, const ConjugacyClasses& cls) {
    const auto count = static_cast<std::int32_t>(cls.classes.size());
    std::vector<OracleClassLabel> labels;
    std::vector<std::int32_t> same_type(count, -1);
    for (std::int32_t i = 0; i < count; ++i) {
        const Partition type_i = word_cycle_type(g.word(cls.classes[i].ids.front()), g.degree);
        for (std::int32_t j = i + 1; j < count; ++j) {
            if (same_type[j] >= 0) continue;
            if (word_cycle_type(g.word(cls.classes[j].ids.front()), g.degree) == type_i) {
                same_type[i] = j;
                same_type[j] = i;
                break;
            }
        }
        labels.push_back({type_i, SplitTag::Whole});
    }
    // A type with two classes is split; the half containing the canonical
    // representative is SplitPos.
    for (std::int32_t i = 0; i < count; ++i) {
        if (same_type[i] < 0) continue;
        const Word rep = word_from_permutation(canonical_representative(labels[i].type));
        labels[i].tag = cls.classes[i].contains(g.id_of(rep)) ? SplitTag::SplitPos
                                                              : SplitTag::SplitNeg;
    }
    return labels;
}

ZClassesResult zclasses(const GroupTable& g, Exec exec) {
    ZClassesResult result;
    result.conjugacy = conjugacy_classes(g, ClassAlgorithm::CycleTypeSplit, exec);
    const auto& classes = result.conjugacy.classes;
    const auto count = static_cast<std::int32_t>(classes.size());
    result.labels = class_labels(g, result.conjugacy);

    // Centralizers of the class representatives, then pairwise subgroup
    // conjugacy within equal-order groups.
    std::vector<ElementSet> cents;
    cents.reserve(count);
    for (std::int32_t i = 0; i < count; ++i)
        cents.push_back(centralizer(g, classes[i].ids.front(), exec));

    std::vector<int> root(count);
    std::iota(root.begin(), root.end(), 0);
    const auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (std::int32_t i = 0; i < count; ++i) {
        for (std::int32_t j = i + 1; j < count; ++j) {
            if (cents[i].size() != cents[j].size()) continue;
            if (find(i) == find(j)) continue;
            if (subgroups_conjugate(g, cents[i], cents[j], ConjugacySearch::CosetSkip, exec))
                root[find(j)] = find(i);
        }
    }
    std::vector<int> group_of(count, -1);
    for (std::int32_t i = 0; i < count; ++i) {
        const int r = find(i);
        if (group_of[r] < 0) {
            group_of[r] = static_cast<int>(result.groups.size());
            result.groups.emplace_back();
        }
        result.groups[group_of[r]].push_back(i);
    }
    return result;
}

bool is_rational_element(const GroupTable& g, const ConjugacyClasses& cls, std::int32_t x) {
    const Word wx = g.word(x);
    const int ord = word_order(wx, g.degree);
    const std::int32_t cx = cls.class_of[x];
    Word w = wx;
    for (int m = 2; m < ord; ++m) {
        w = compose_words(w, wx);
        if (std::gcd(m, ord) != 1) continue;
        if (cls.class_of[g.id_of(w)] != cx) return false;
    }
    return true;
}

bool is_rational_element(const GroupTable& g, std::int32_t x) {
    return is_rational_element(g, conjugacy_classes(g), x);
}

std::vector<std::vector<int>> rational_class_orbits(const GroupTable& g,
                                                    const ConjugacyClasses& cls) {
    const auto count = static_cast<int>(cls.classes.size());
    std::vector<int> root(count);
    std::iota(root.begin(), root.end(), 0);
    const auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (int c = 0; c < count; ++c) {
        const std::int32_t x = cls.classes[c].ids.front();
        const Word wx = g.word(x);
        const int ord = word_order(wx, g.degree);
        Word w = wx;
        for (int m = 2; m < ord; ++m) {
            w = compose_words(w, wx);
            if (std::gcd(m, ord) != 1) continue;
            const int d = cls.class_of[g.id_of(w)];
            if (find(c) != find(d)) root[find(d)] = find(c);
        }
    }
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of(count, -1);
    for (int c = 0; c < count; ++c) {
        const int r = find(c);
        if (orbit_of[r] < 0) {
            orbit_of[r] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[orbit_of[r]].push_back(c);
    }
    return orbits;
}

std::vector<std::vector<int>> rational_class_orbits(const GroupTable& g) {
    return rational_class_orbits(g, conjugacy_classes(g));
}

}  // namespace zclass::oracle
