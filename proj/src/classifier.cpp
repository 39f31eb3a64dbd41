#include "zclass/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace zclass {

std::vector<std::vector<ClassLabel>> ZClassification::groups() const {
    std::uint32_t ids = 0;
    for (std::uint32_t id : zclass_of) ids = std::max(ids, id + 1);
    std::vector<std::vector<ClassLabel>> out(ids);
    for (std::size_t i = 0; i < classes.size(); ++i)
        out[zclass_of[i]].push_back(classes[i]);
    return out;
}

namespace {

Partition strip_part(const Partition& p, std::uint32_t part, std::uint32_t count) {
    std::vector<Partition::Pair> pairs;
    for (auto [v, e] : p.pairs()) {
        if (v == part) {
            if (e < count) throw std::invalid_argument("strip_part: multiplicity too small");
            e -= count;
        }
        if (e > 0) pairs.push_back({v, e});
    }
    return Partition::from_pairs(std::move(pairs));
}

Partition add_part(const Partition& p, std::uint32_t part) {
    std::vector<Partition::Pair> pairs = p.pairs();
    auto it = std::lower_bound(pairs.begin(), pairs.end(), part,
                               [](const Partition::Pair& a, std::uint32_t v) { return a.first < v; });
    if (it != pairs.end() && it->first == part)
        ++it->second;
    else
        pairs.insert(it, {part, 1});
    return Partition::from_pairs(std::move(pairs));
}

bool distinct_odd_min3(const Partition& p) {
    for (const auto& [part, mult] : p.pairs())
        if (part < 3 || part % 2 == 0 || mult != 1) return false;
    return true;
}

}  // namespace

std::optional<Partition> zpartner_sym(const Partition& lambda) {
    if (lambda.weight() < 3) throw std::invalid_argument("zpartner_sym: weight must be >= 3");
    // 1^2 nu <-> 2^1 nu with min part of nu >= 3.
    if (lambda.multiplicity_of(1) == 2) {
        const Partition nu = strip_part(lambda, 1, 2);
        if (nu.empty() || nu.pairs().front().first >= 3) return add_part(nu, 2);
    }
    if (lambda.multiplicity_of(2) == 1 && lambda.multiplicity_of(1) == 0) {
        const Partition nu = strip_part(lambda, 2, 1);
        if (nu.empty() || nu.pairs().front().first >= 3) return add_part(add_part(nu, 1), 1);
    }
    return std::nullopt;
}

std::optional<Partition> zpartner_alt(const Partition& lambda) {
    if (lambda.weight() < 4) throw std::invalid_argument("zpartner_alt: weight must be >= 4");
    if (lambda.multiplicity_of(1) == 3 && lambda.multiplicity_of(2) == 0) {
        const Partition nu = strip_part(lambda, 1, 3);
        if (!nu.empty() && distinct_odd_min3(nu)) return add_part(nu, 3);
    }
    if (lambda.multiplicity_of(3) >= 1 && lambda.multiplicity_of(1) == 0) {
        const Partition nu = strip_part(lambda, 3, 1);
        if (!nu.empty() && distinct_odd_min3(nu))
            return add_part(add_part(add_part(nu, 1), 1), 1);
    }
    return std::nullopt;
}

BigCount count_zclasses_sym(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("count_zclasses_sym: n must be >= 3");
    return count_p(n) - count_p_tilde(static_cast<std::int64_t>(n) - 2);
}

BigCount count_conjugacy_classes_alt(std::uint32_t n) {
    const BigCount sum = count_p(n) + 3 * count_q(n);
    if (sum % 2 != 0) throw std::logic_error("p(n) + 3q(n) must be even");
    return sum / 2;
}

std::vector<ClassLabel> alt_class_labels(std::uint32_t n) {
    if (n < 4) throw std::invalid_argument("alt_class_labels: n must be >= 4");
    std::vector<ClassLabel> labels;
    enumerate_visit(n, pred_all(), [&](const Partition& p) {
        if (!is_even_partition(p)) return;
        if (splits_in_alt(p)) {
            labels.push_back({p, SplitTag::SplitPos});
            labels.push_back({p, SplitTag::SplitNeg});
        } else {
            labels.push_back({p, SplitTag::Whole});
        }
    });
    if (BigCount(static_cast<unsigned long>(labels.size())) != count_conjugacy_classes_alt(n))
        throw std::logic_error("label count disagrees with (p(n) + 3q(n))/2");
    return labels;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool all_parts_square(const Partition& p) {
    for (const auto& [part, mult] : p.pairs())
        if (!is_perfect_square(std::uint64_t{part})) return false;
    return true;
}

}  // namespace

ZClassification classify_zclasses_alt(std::uint32_t n) {
    ZClassification result;
    result.group = GroupKind::Alt;
    result.n = n;
    result.classes = alt_class_labels(n);

    std::map<ClassLabel, std::size_t> index;
    for (std::size_t i = 0; i < result.classes.size(); ++i) index[result.classes[i]] = i;

    UnionFind uf(result.classes.size());
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        const ClassLabel& label = result.classes[i];
        // Theorem 2(1): a split pair stays separated only for all-square types.
        if (label.tag == SplitTag::SplitPos && !all_parts_square(label.partition))
            uf.merge(i, index.at({label.partition, SplitTag::SplitNeg}));
        // Theorem 2(2): 1^3 nu merges with 3^1 nu. The partner is split only
        // when 3 is not a part of nu, and 3 is not a square, so its two halves
        // are already merged by the first rule.
        if (label.tag == SplitTag::Whole && label.partition.multiplicity_of(1) == 3) {
            if (auto partner = zpartner_alt(label.partition)) {
                if (auto it = index.find({*partner, SplitTag::Whole}); it != index.end())
                    uf.merge(i, it->second);
                else
                    uf.merge(i, index.at({*partner, SplitTag::SplitPos}));
            }
        }
    }

    result.zclass_of.resize(result.classes.size());
    std::map<std::size_t, std::uint32_t> root_id;
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        auto [it, inserted] = root_id.insert({uf.find(i), next});
        if (inserted) ++next;
        result.zclass_of[i] = it->second;
    }
    result.z_count = next;
    if (result.z_count != count_zclasses_alt(n))
        throw std::logic_error("structural z-class count disagrees with the closed form");
    return result;
}

BigCount count_zclasses_alt(std::uint32_t n) {
    if (n < 4) throw std::invalid_argument("count_zclasses_alt: n must be >= 4");
    return count_conjugacy_classes_alt(n) -
           (count_q(n) + count_q_tilde(static_cast<std::int64_t>(n) - 3)) + count_epsilon(n);
}

bool is_rational_conjugacy_class(const ClassLabel& label) {
    if (label.tag == SplitTag::Whole) return true;
    BigCount product = 1;
    for (const auto& [part, mult] : label.partition.pairs())
        for (std::uint32_t k = 0; k < mult; ++k) product *= part;
    return is_perfect_square(product);
}

bool character_pair_is_rational(const Partition& lambda) {
    std::int64_t half_sum = 0;  // sum of m_i where the parts are 2m_i + 1
    BigCount z_order = 1;
    for (const auto& [part, mult] : lambda.pairs()) {
        if (part % 2 == 0 || mult != 1)
            throw std::invalid_argument("character_pair_is_rational: parts must be distinct and odd");
        half_sum += (part - 1) / 2;
        z_order *= part;
    }
    const bool square = is_perfect_square(z_order);
    const int e_lambda = (half_sum % 2 == 0) ? 1 : -1;
    if (square && e_lambda != 1)
        throw std::logic_error("square |Z_lambda| must force e_lambda = 1");
    return square;
}

RationalityReport rationality_report(std::uint32_t n) {
    if (n < 4) throw std::invalid_argument("rationality_report: n must be >= 4");
    RationalityReport report;
    report.n = n;
    report.classes = alt_class_labels(n);
    report.rational.reserve(report.classes.size());

    BigCount rational_classes = 0;
    BigCount non_rational_split_pairs = 0;
    for (const ClassLabel& label : report.classes) {
        const bool r = is_rational_conjugacy_class(label);
        report.rational.push_back(r);
        if (r) ++rational_classes;
        if (!r && label.tag == SplitTag::SplitPos) ++non_rational_split_pairs;
    }
    report.rational_conjugacy_class_count = rational_classes;
    // Each non-rational split pair collapses to a single rational class.
    report.rational_class_count = rational_classes + non_rational_split_pairs;

    const BigCount cl = count_conjugacy_classes_alt(n);
    const BigCount q = count_q(n);
    const BigCount delta = count_delta(n);
    if (report.rational_conjugacy_class_count != cl - 2 * q + 2 * delta)
        throw std::logic_error("rational conjugacy class count disagrees with cl - 2q + 2delta");
    if (report.rational_class_count != cl - q + delta)
        throw std::logic_error("rational class count disagrees with cl - q + delta");

    report.rational_character_count = rational_character_count_character_side(n);
    if (report.rational_character_count != report.rational_conjugacy_class_count)
        throw std::logic_error("character-side count disagrees with the rational class count");
    return report;
}

BigCount rational_character_count_character_side(std::uint32_t n) {
    // Non-self-conjugate partitions come in conjugate pairs; each pair yields
    // one restricted character of A_n, always rational-valued.
    const BigCount non_self_conjugate = count_p(n) - count_self_conjugate(n);
    if (non_self_conjugate % 2 != 0)
        throw std::logic_error("non-self-conjugate partitions must pair up");
    BigCount total = non_self_conjugate / 2;
    // Each self-conjugate mu folds to a distinct-odd lambda; the character
    // pair chi_mu^{+-} is rational iff |Z_lambda| is a perfect square.
    enumerate_visit(n, pred_distinct_odd(), [&](const Partition& lambda) {
        if (character_pair_is_rational(lambda)) total += 2;
    });
    return total;
}

}  // namespace zclass
