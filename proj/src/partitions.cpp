#include "zclass/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace zclass {

Partition Partition::from_pairs(std::vector<Pair> pairs) {
    Partition p;
    std::uint32_t prev = 0;
    for (const auto& [part, mult] : pairs) {
        if (part == 0) throw std::invalid_argument("partition part must be positive");
        if (mult == 0) throw std::invalid_argument("partition multiplicity must be >= 1");
        if (part <= prev) throw std::invalid_argument("partition parts must be strictly increasing");
        prev = part;
        p.weight_ += static_cast<std::uint64_t>(part) * mult;
    }
    p.pairs_ = std::move(pairs);
    return p;
}

Partition Partition::from_parts(const std::vector<std::uint32_t>& parts) {
    std::vector<std::uint32_t> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Pair> pairs;
    for (std::uint32_t v : sorted) {
        if (!pairs.empty() && pairs.back().first == v)
            ++pairs.back().second;
        else
            pairs.push_back({v, 1});
    }
    return from_pairs(std::move(pairs));
}

std::uint32_t Partition::multiplicity_of(std::uint32_t part) const {
    for (const auto& [p, e] : pairs_)
        if (p == part) return e;
    return 0;
}

std::vector<std::uint32_t> Partition::expanded() const {
    std::vector<std::uint32_t> out;
    for (const auto& [p, e] : pairs_)
        out.insert(out.end(), e, p);
    return out;
}

std::uint64_t Partition::total_multiplicity() const {
    std::uint64_t s = 0;
    for (const auto& [p, e] : pairs_) s += e;
    return s;
}

bool Partition::operator<(const Partition& o) const {
    return expanded() < o.expanded();
}

bool PartitionPredicate::admits(const Partition& p) const {
    BigCount product = 1;
    for (const auto& [part, mult] : p.pairs()) {
        if (min_part != 0 && part < min_part) return false;
        if (parts_distinct && mult > 1) return false;
        if (parts_odd && part % 2 == 0) return false;
        if (parts_square && !is_perfect_square(std::uint64_t{part})) return false;
        if (product_square)
            for (std::uint32_t k = 0; k < mult; ++k) product *= part;
    }
    if (product_square && !is_perfect_square(product)) return false;
    return true;
}

namespace {

// Backtracking over ascending part lists. Trying smaller parts first yields
// lexicographic order on the expanded list.
struct Enumerator {
    const PartitionPredicate& pred;
    const std::function<void(const Partition&)>& visit;
    std::vector<std::uint32_t> parts;
    BigCount product = 1;

    // Smallest admissible part >= v (part-local filters only).
    std::uint64_t next_candidate(std::uint64_t v) const {
        if (pred.min_part != 0 && v < pred.min_part) v = pred.min_part;
        if (pred.parts_odd && v % 2 == 0) ++v;
        if (pred.parts_square) {
            std::uint64_t r = 1;
            while (r * r < v) ++r;
            if (pred.parts_odd && r % 2 == 0) ++r;
            v = r * r;
        }
        return v;
    }

    std::uint64_t advance(std::uint64_t v) const {
        if (pred.parts_square) {
            std::uint64_t r = 1;
            while (r * r < v) ++r;  // r = isqrt(v), v is a square here
            r += pred.parts_odd ? 2 : 1;
            return r * r;
        }
        return next_candidate(v + (pred.parts_odd ? 2 : 1));
    }

    void emit() {
        if (pred.product_square && !is_perfect_square(product)) return;
        visit(Partition::from_parts(parts));
    }

    void recurse(std::uint64_t rem, std::uint64_t min_next) {
        if (rem == 0) {
            emit();
            return;
        }
        for (std::uint64_t v = next_candidate(min_next); v <= rem; v = advance(v)) {
            parts.push_back(static_cast<std::uint32_t>(v));
            if (pred.product_square) product *= static_cast<unsigned long>(v);
            recurse(rem - v, pred.parts_distinct ? v + 1 : v);
            if (pred.product_square) product /= static_cast<unsigned long>(v);
            parts.pop_back();
        }
    }
};

}  // namespace

void enumerate_visit(std::uint64_t m, const PartitionPredicate& pred,
                     const std::function<void(const Partition&)>& visit) {
    Enumerator e{pred, visit, {}, 1};
    e.recurse(m, 1);
}

std::vector<Partition> enumerate(std::uint64_t m, const PartitionPredicate& pred) {
    std::vector<Partition> out;
    enumerate_visit(m, pred, [&](const Partition& p) { out.push_back(p); });
    return out;
}

namespace {

// Shared p(m) table via the Euler pentagonal recurrence, grown on demand.
std::mutex p_mutex;
std::vector<BigCount> p_table{1};  // p(0) = 1

void grow_p_table(std::size_t upto) {
    for (std::size_t m = p_table.size(); m <= upto; ++m) {
        BigCount v = 0;
        for (std::uint64_t k = 1;; ++k) {
            const std::uint64_t g1 = k * (3 * k - 1) / 2;
            const std::uint64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const bool plus = (k % 2 == 1);
            if (plus) v += p_table[m - g1]; else v -= p_table[m - g1];
            if (g2 <= m) {
                if (plus) v += p_table[m - g2]; else v -= p_table[m - g2];
            }
        }
        p_table.push_back(std::move(v));
    }
}

}  // namespace

BigCount count_p(std::int64_t m) {
    if (m < 0) return 0;
    std::lock_guard<std::mutex> lock(p_mutex);
    grow_p_table(static_cast<std::size_t>(m));
    return p_table[static_cast<std::size_t>(m)];
}

BigCount count_p_tilde(std::int64_t m) {
    if (m < 0) return 0;
    return count_p(m) - count_p(m - 1) - count_p(m - 2) + count_p(m - 3);
}

namespace {

// 0/1-knapsack over an ascending part list: coefficients of prod (1 + x^part).
std::vector<BigCount> distinct_parts_gf(const std::vector<std::uint64_t>& parts, std::uint64_t max_m) {
    std::vector<BigCount> c(max_m + 1);
    c[0] = 1;
    for (std::uint64_t v : parts)
        for (std::uint64_t m = max_m; m >= v; --m)
            c[m] += c[m - v];
    return c;
}

std::vector<std::uint64_t> odd_parts_from(std::uint64_t lo, std::uint64_t max_m) {
    std::vector<std::uint64_t> parts;
    for (std::uint64_t v = lo; v <= max_m; v += 2) parts.push_back(v);
    return parts;
}

std::vector<std::uint64_t> odd_square_parts(std::uint64_t max_m) {
    std::vector<std::uint64_t> parts;
    for (std::uint64_t r = 1; r * r <= max_m; r += 2) parts.push_back(r * r);
    return parts;
}

}  // namespace

BigCount count_q(std::int64_t m) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    const auto u = static_cast<std::uint64_t>(m);
    return distinct_parts_gf(odd_parts_from(1, u), u)[u];
}

BigCount count_q_tilde(std::int64_t m) {
    if (m < 3) return 0;  // the theorems that consume q~ require a nonempty nu
    const auto u = static_cast<std::uint64_t>(m);
    return distinct_parts_gf(odd_parts_from(3, u), u)[u];
}

BigCount count_epsilon(std::int64_t n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    const auto u = static_cast<std::uint64_t>(n);
    return distinct_parts_gf(odd_square_parts(u), u)[u];
}

BigCount count_delta(std::int64_t n) {
    if (n < 0) return 0;
    BigCount c = 0;
    enumerate_visit(static_cast<std::uint64_t>(n), pred_delta(),
                    [&](const Partition&) { ++c; });
    return c;
}

std::vector<Partition> delta_witnesses(std::uint64_t n) {
    return enumerate(n, pred_delta());
}

std::vector<BigCount> gf_coefficients(GfFamily family, std::uint64_t max_m) {
    switch (family) {
        case GfFamily::P:
        case GfFamily::PTilde: {
            // prod_{i>=lo} 1/(1-x^i) as an unbounded knapsack.
            const std::uint64_t lo = (family == GfFamily::P) ? 1 : 3;
            std::vector<BigCount> c(max_m + 1);
            c[0] = 1;
            for (std::uint64_t v = lo; v <= max_m; ++v)
                for (std::uint64_t m = v; m <= max_m; ++m)
                    c[m] += c[m - v];
            return c;
        }
        case GfFamily::Q:
            return distinct_parts_gf(odd_parts_from(1, max_m), max_m);
        case GfFamily::QTilde:
            return distinct_parts_gf(odd_parts_from(3, max_m), max_m);
        case GfFamily::Epsilon:
            return distinct_parts_gf(odd_square_parts(max_m), max_m);
    }
    throw std::invalid_argument("unknown generating-function family");
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const auto rows = p.expanded();  // ascending
    std::vector<std::uint32_t> cols;
    // Column j of the Young diagram has height #{rows >= j}.
    const std::uint32_t widest = rows.back();
    for (std::uint32_t j = 1; j <= widest; ++j) {
        auto it = std::lower_bound(rows.begin(), rows.end(), j);
        cols.push_back(static_cast<std::uint32_t>(rows.end() - it));
    }
    return Partition::from_parts(cols);
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

BigCount count_self_conjugate(std::int64_t n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    const auto u = static_cast<std::uint64_t>(n);
    // Durfee square of side d, plus a partition of (n - d^2)/2 into parts <= d
    // to the right of it (mirrored below).
    BigCount total = 0;
    for (std::uint64_t d = 1; d * d <= u; ++d) {
        const std::uint64_t rest = u - d * d;
        if (rest % 2 != 0) continue;
        const std::uint64_t m = rest / 2;
        std::vector<BigCount> c(m + 1);
        c[0] = 1;
        for (std::uint64_t v = 1; v <= d && v <= m; ++v)
            for (std::uint64_t k = v; k <= m; ++k)
                c[k] += c[k - v];
        total += c[m];
    }
    return total;
}

}  // namespace zclass
