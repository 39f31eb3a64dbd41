#include "zclass/verify.hpp"

#include <algorithm>
#include <sstream>

#include "zclass/partition_text.hpp"

namespace zclass::verify {

namespace {

std::pair<int, int> key(GroupKind kind, int n) { return {kind == GroupKind::Sym ? 0 : 1, n}; }

std::string label_text(const ClassLabel& label) {
    std::string s = render_partition_text(label.partition);
    if (label.tag == SplitTag::SplitPos) s += " [+]";
    if (label.tag == SplitTag::SplitNeg) s += " [-]";
    return s;
}

ClassLabel to_class_label(const oracle::OracleClassLabel& l) { return {l.type, l.tag}; }

// Canonical form of a label partition: groups sorted by first member.
std::vector<std::vector<ClassLabel>> canonical_groups(std::vector<std::vector<ClassLabel>> groups) {
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end());
    return groups;
}

CheckResult pass(std::string check, GroupKind kind, int n, std::string detail) {
    return {std::move(check), kind, n, true, std::move(detail)};
}

CheckResult fail(std::string check, GroupKind kind, int n, std::string detail) {
    return {std::move(check), kind, n, false, std::move(detail)};
}

// All partitions of n, or the even ones only.
std::vector<Partition> partitions_of(int n, bool even_only) {
    std::vector<Partition> out;
    enumerate_visit(static_cast<std::uint64_t>(n), pred_all(), [&](const Partition& p) {
        if (!even_only || is_even_partition(p)) out.push_back(p);
    });
    return out;
}

std::int32_t canonical_rep_id(const oracle::GroupTable& g, const Partition& lambda) {
    return g.id_of(oracle::word_from_permutation(canonical_representative(lambda)));
}

}  // namespace

const oracle::GroupTable& Context::table(GroupKind kind, int n) {
    auto it = tables_.find(key(kind, n));
    if (it == tables_.end())
        it = tables_.emplace(key(kind, n), oracle::build_group(n, kind)).first;
    return it->second;
}

const oracle::ConjugacyClasses& Context::classes(GroupKind kind, int n) {
    auto it = classes_.find(key(kind, n));
    if (it == classes_.end())
        it = classes_.emplace(key(kind, n), oracle::conjugacy_classes(table(kind, n))).first;
    return it->second;
}

const oracle::ZClassesResult& Context::zclass_data(GroupKind kind, int n) {
    auto it = zdata_.find(key(kind, n));
    if (it == zdata_.end())
        it = zdata_.emplace(key(kind, n), oracle::zclasses(table(kind, n))).first;
    return it->second;
}

CheckResult check_counts(Context& ctx, GroupKind kind, int n) {
    const auto& cls = ctx.classes(kind, n);
    const BigCount found(static_cast<unsigned long>(cls.classes.size()));
    if (kind == GroupKind::Sym) {
        if (found != count_p(n))
            return fail("counts", kind, n, "class count " + to_decimal(found) + " != p(n)");
        if (n >= 3 && n <= 8) {
            const auto& z = ctx.zclass_data(kind, n);
            const BigCount zfound(static_cast<unsigned long>(z.groups.size()));
            const BigCount formula = count_zclasses_sym(n);
            const BigCount alt_form = count_p(n) - count_p(n - 2) + count_p(n - 3) +
                                      count_p(n - 4) - count_p(n - 5);
            if (zfound != formula || formula != alt_form)
                return fail("counts", kind, n,
                            "z-class count " + to_decimal(zfound) + " != p(n) - p~(n-2) = " +
                                to_decimal(formula));
            return pass("counts", kind, n,
                        to_decimal(found) + " classes, " + to_decimal(zfound) + " z-classes");
        }
        return pass("counts", kind, n, to_decimal(found) + " classes");
    }

    const BigCount cl = count_conjugacy_classes_alt(n);
    if (found != cl)
        return fail("counts", kind, n, "class count " + to_decimal(found) + " != (p+3q)/2");
    // Split types found by the oracle must number q(n).
    const auto labels = oracle::class_labels(ctx.table(kind, n), cls);
    BigCount split_pairs = 0;
    for (const auto& l : labels)
        if (l.tag == SplitTag::SplitPos) ++split_pairs;
    if (split_pairs != count_q(n))
        return fail("counts", kind, n, "split count " + to_decimal(split_pairs) + " != q(n)");
    const auto& z = ctx.zclass_data(kind, n);
    const BigCount zfound(static_cast<unsigned long>(z.groups.size()));
    if (zfound != count_zclasses_alt(n) || zfound != classify_zclasses_alt(n).z_count)
        return fail("counts", kind, n,
                    "z-class count " + to_decimal(zfound) + " != cl - (q + q~) + eps = " +
                        to_decimal(count_zclasses_alt(n)));
    return pass("counts", kind, n,
                to_decimal(found) + " classes, " + to_decimal(split_pairs) + " split, " +
                    to_decimal(zfound) + " z-classes");
}

CheckResult check_zclass(Context& ctx, GroupKind kind, int n) {
    const auto& z = ctx.zclass_data(kind, n);
    std::vector<std::vector<ClassLabel>> oracle_groups;
    for (const auto& group : z.groups) {
        std::vector<ClassLabel> labels;
        for (int c : group) labels.push_back(to_class_label(z.labels[c]));
        oracle_groups.push_back(std::move(labels));
    }
    oracle_groups = canonical_groups(std::move(oracle_groups));

    std::vector<std::vector<ClassLabel>> expected;
    if (kind == GroupKind::Alt) {
        expected = canonical_groups(classify_zclasses_alt(n).groups());
    } else {
        // Theorem-of-S_n merge rule: lambda joins its z-partner.
        std::map<Partition, std::size_t> group_of;
        for (const Partition& p : partitions_of(n, false)) {
            const auto partner = zpartner_sym(p);
            if (partner && group_of.count(*partner)) {
                expected[group_of[*partner]].push_back({p, SplitTag::Whole});
                group_of[p] = group_of[*partner];
            } else {
                group_of[p] = expected.size();
                expected.push_back({{p, SplitTag::Whole}});
            }
        }
        expected = canonical_groups(std::move(expected));
    }

    if (oracle_groups != expected) {
        // Report the first differing group.
        std::string detail = "z-class partitions differ";
        for (std::size_t i = 0; i < std::min(oracle_groups.size(), expected.size()); ++i) {
            if (oracle_groups[i] != expected[i]) {
                detail = "first mismatch at oracle group {";
                for (const auto& l : oracle_groups[i]) detail += label_text(l) + ", ";
                detail += "}";
                break;
            }
        }
        return fail("zclass", kind, n, detail);
    }
    return pass("zclass", kind, n,
                std::to_string(oracle_groups.size()) + " z-classes match label-for-label");
}

CheckResult check_rational(Context& ctx, GroupKind kind, int n) {
    const auto& g = ctx.table(kind, n);
    const auto& cls = ctx.classes(kind, n);
    const auto labels = oracle::class_labels(g, cls);

    // Per-class expectation from the closed-form criterion.
    std::vector<char> expected_rational;
    for (const auto& l : labels) {
        const bool r = kind == GroupKind::Sym ||
                       is_rational_conjugacy_class({l.type, l.tag});
        expected_rational.push_back(r ? 1 : 0);
    }
    // Every element must agree with its class label.
    for (std::int32_t x = 0; x < g.size(); ++x) {
        const bool oracle_rational = oracle::is_rational_element(g, cls, x);
        if (oracle_rational != static_cast<bool>(expected_rational[cls.class_of[x]])) {
            const auto& l = labels[cls.class_of[x]];
            return fail("rational", kind, n,
                        "element " + g.permutation(x).cycle_string() + " of class " +
                            label_text({l.type, l.tag}) + ": oracle says " +
                            (oracle_rational ? "rational" : "irrational"));
        }
    }

    const auto orbits = oracle::rational_class_orbits(g, cls);
    const BigCount orbit_count(static_cast<unsigned long>(orbits.size()));
    if (kind == GroupKind::Sym) {
        // S_n is rational: every class is its own orbit.
        if (orbit_count != BigCount(static_cast<unsigned long>(cls.classes.size())))
            return fail("rational", kind, n, "S_n must have one power-map orbit per class");
        return pass("rational", kind, n, to_decimal(orbit_count) + " rational classes");
    }

    const RationalityReport report = rationality_report(n);
    if (orbit_count != report.rational_class_count)
        return fail("rational", kind, n,
                    "orbit count " + to_decimal(orbit_count) + " != cl - q + delta = " +
                        to_decimal(report.rational_class_count));
    BigCount rational_classes = 0;
    for (char r : expected_rational)
        if (r) ++rational_classes;
    if (rational_classes != report.rational_conjugacy_class_count)
        return fail("rational", kind, n,
                    "rational class count " + to_decimal(rational_classes) +
                        " != cl - 2q + 2delta");
    return pass("rational", kind, n,
                to_decimal(rational_classes) + " rational conjugacy classes, " +
                    to_decimal(orbit_count) + " rational classes");
}

CheckResult check_center(Context& ctx, GroupKind kind, int n) {
    const auto& sym = ctx.table(GroupKind::Sym, n);
    if (kind == GroupKind::Sym) {
        // Closure of the described center generators must equal the oracle
        // center of the centralizer, for every cycle type.
        for (const Partition& lambda : partitions_of(n, false)) {
            const auto desc = center_description(lambda);
            std::vector<std::int32_t> gen_ids;
            for (const auto& gen : desc.generators)
                gen_ids.push_back(sym.id_of(oracle::word_from_permutation(gen)));
            const auto closed = oracle::closure(sym, gen_ids);
            const auto cent = oracle::centralizer(sym, canonical_rep_id(sym, lambda));
            const auto center = oracle::center_of(sym, cent);
            if (closed != center || BigCount(static_cast<unsigned long>(closed.size())) != desc.order)
                return fail("center", kind, n,
                            "Z_lambda mismatch for " + render_partition_text(lambda));
        }
        return pass("center", kind, n, "center descriptions match the oracle");
    }

    const auto& alt = ctx.table(GroupKind::Alt, n);
    for (const Partition& lambda : partitions_of(n, true)) {
        const auto desc = center_description(lambda);
        std::vector<std::int32_t> gen_ids;
        for (const auto& gen : desc.generators)
            gen_ids.push_back(sym.id_of(oracle::word_from_permutation(gen)));
        // Z_lambda /\ A_n: even elements of the closure, as A_n ids.
        const auto closed = oracle::closure(sym, gen_ids);
        std::vector<std::int32_t> z_cap_alt;
        for (std::int32_t id : closed.ids) {
            const auto& w = sym.word(id);
            if (oracle::word_is_even(w, n)) z_cap_alt.push_back(alt.id_of(w));
        }
        std::sort(z_cap_alt.begin(), z_cap_alt.end());

        const auto cent = oracle::centralizer(alt, canonical_rep_id(alt, lambda));
        const auto center = oracle::center_of(alt, cent);
        const bool strict = center.ids != z_cap_alt;
        // Z_lambda /\ A_n sits inside the center unconditionally.
        for (std::int32_t id : z_cap_alt)
            if (!center.contains(id))
                return fail("center", kind, n,
                            "Z_lambda /\\ A_n not inside the center for " +
                                render_partition_text(lambda));
        if (strict != center_exception_in_alt(lambda))
            return fail("center", kind, n,
                        "exception test disagrees for " + render_partition_text(lambda) +
                            " (oracle says " + (strict ? "strict" : "equal") + ")");
    }
    return pass("center", kind, n, "exception families match the oracle");
}

CheckResult check_split(Context& ctx, int n) {
    const auto& sym = ctx.table(GroupKind::Sym, n);
    const auto& alt = ctx.table(GroupKind::Alt, n);
    const auto& alt_cls = ctx.classes(GroupKind::Alt, n);
    const auto labels = oracle::class_labels(alt, alt_cls);

    for (const Partition& lambda : partitions_of(n, false)) {
        const auto sym_cent = oracle::centralizer(sym, canonical_rep_id(sym, lambda));
        if (BigCount(static_cast<unsigned long>(sym_cent.size())) !=
            centralizer_shape(lambda, GroupKind::Sym).order)
            return fail("split", GroupKind::Sym, n,
                        "S_n centralizer order mismatch for " + render_partition_text(lambda));
        if (!is_even_partition(lambda)) continue;

        int class_count = 0;
        for (const auto& l : labels)
            if (l.type == lambda) ++class_count;
        const bool oracle_split = class_count == 2;
        bool cent_in_alt = true;
        for (std::int32_t id : sym_cent.ids)
            if (!oracle::word_is_even(sym.word(id), n)) {
                cent_in_alt = false;
                break;
            }
        const auto alt_cent = oracle::centralizer(alt, canonical_rep_id(alt, lambda));
        if (oracle_split != splits_in_alt(lambda) || oracle_split != cent_in_alt)
            return fail("split", GroupKind::Alt, n,
                        "split criterion disagrees for " + render_partition_text(lambda));
        if (BigCount(static_cast<unsigned long>(alt_cent.size())) !=
            centralizer_shape(lambda, GroupKind::Alt).order)
            return fail("split", GroupKind::Alt, n,
                        "A_n centralizer order mismatch for " + render_partition_text(lambda));
    }
    return pass("split", GroupKind::Alt, n, "split criterion and centralizer orders match");
}

CheckResult check_brison(Context& ctx, int n) {
    const auto& sym = ctx.table(GroupKind::Sym, n);
    const auto& alt = ctx.table(GroupKind::Alt, n);
    for (const Partition& lambda : partitions_of(n, false)) {
        if (!pred_distinct_odd().admits(lambda)) continue;
        const std::int32_t sym_rep = canonical_rep_id(sym, lambda);
        const std::int32_t alt_rep = canonical_rep_id(alt, lambda);
        const auto n_sym = oracle::normalizer_of_cyclic(sym, sym_rep);
        const auto n_alt = oracle::normalizer_of_cyclic(alt, alt_rep);

        // N_{A_n} = N_{S_n} /\ A_n; equality means N_{S_n} has no odd element.
        std::size_t even_in_sym = 0;
        for (std::int32_t id : n_sym.ids)
            if (oracle::word_is_even(sym.word(id), n)) ++even_in_sym;
        if (even_in_sym != n_alt.size())
            return fail("brison", GroupKind::Alt, n,
                        "N_{A_n} != N_{S_n} /\\ A_n for " + render_partition_text(lambda));
        const bool equal = n_sym.size() == n_alt.size();

        BigCount product = 1;
        for (const auto& [part, mult] : lambda.pairs()) product *= part;
        if (equal != is_perfect_square(product))
            return fail("brison", GroupKind::Alt, n,
                        "normalizer criterion disagrees for " + render_partition_text(lambda));
    }
    return pass("brison", GroupKind::Alt, n, "normalizer criterion matches");
}

std::vector<CheckResult> run_checks(Context& ctx, const std::set<std::string>& checks,
                                    int n_max) {
    if (n_max < 3 || n_max > oracle::kMaxDegree)
        throw std::invalid_argument("run_checks: n_max must be in [3, 9]");
    std::vector<CheckResult> results;
    const bool all = checks.empty();
    const auto wants = [&](const char* name) { return all || checks.count(name) > 0; };

    for (int n = 3; n <= n_max; ++n) {
        if (wants("counts")) {
            results.push_back(check_counts(ctx, GroupKind::Sym, n));
            if (n >= 4) results.push_back(check_counts(ctx, GroupKind::Alt, n));
        }
        if (wants("zclass")) {
            if (n <= 8) results.push_back(check_zclass(ctx, GroupKind::Sym, n));
            if (n >= 4) results.push_back(check_zclass(ctx, GroupKind::Alt, n));
        }
        if (wants("rational")) {
            results.push_back(check_rational(ctx, GroupKind::Sym, n));
            if (n >= 4) results.push_back(check_rational(ctx, GroupKind::Alt, n));
        }
        if (wants("center")) {
            results.push_back(check_center(ctx, GroupKind::Sym, n));
            if (n >= 4) results.push_back(check_center(ctx, GroupKind::Alt, n));
        }
        if (wants("split") && n >= 4) results.push_back(check_split(ctx, n));
        if (wants("brison") && n >= 4) results.push_back(check_brison(ctx, n));
    }
    return results;
}

}  // namespace zclass::verify
