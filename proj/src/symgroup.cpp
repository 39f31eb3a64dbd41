#include "zclass/symgroup.hpp"

#include <stdexcept>

namespace zclass {

Permutation canonical_representative(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("canonical_representative: empty partition");
    const int n = static_cast<int>(lambda.weight());
    std::vector<int> images(n);
    int base = 0;
    for (const auto& [part, mult] : lambda.pairs()) {
        for (std::uint32_t c = 0; c < mult; ++c) {
            for (std::uint32_t k = 0; k < part; ++k)
                images[base + k] = base + static_cast<int>((k + 1) % part);
            base += static_cast<int>(part);
        }
    }
    return Permutation::from_images(std::move(images));
}

Partition cycle_type(const Permutation& g) {
    std::vector<std::uint32_t> lengths;
    std::vector<char> seen(g.degree(), 0);
    for (int i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        std::uint32_t len = 0;
        for (int j = i; !seen[j]; j = g.apply(j)) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_parts(lengths);
}

bool is_even_partition(const Partition& lambda) {
    return (lambda.weight() - lambda.total_multiplicity()) % 2 == 0;
}

bool splits_in_alt(const Partition& lambda) {
    if (!is_even_partition(lambda))
        throw std::invalid_argument("splits_in_alt: partition is not even");
    for (const auto& [part, mult] : lambda.pairs())
        if (mult != 1 || part % 2 == 0) return false;
    return true;
}

CentralizerShape centralizer_shape(const Partition& lambda, GroupKind group) {
    if (group == GroupKind::Alt && !is_even_partition(lambda))
        throw std::invalid_argument("centralizer_shape: Alt requires an even partition");
    CentralizerShape shape;
    shape.group = group;
    shape.order = 1;
    bool distinct_odd = true;
    for (const auto& [part, mult] : lambda.pairs()) {
        shape.factors.push_back({part, mult});
        shape.order *= pow_big(part, mult) * factorial(mult);
        if (mult != 1 || part % 2 == 0) distinct_odd = false;
    }
    if (group == GroupKind::Alt && !distinct_odd) {
        // The centralizer contains an odd permutation, so A_n sees index 2.
        shape.order /= 2;
    }
    return shape;
}

CenterDescription center_description(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("center_description: empty partition");
    const int n = static_cast<int>(lambda.weight());
    CenterDescription desc;
    desc.order = 1;
    desc.has_transposition_factor = false;
    int base = 0;
    for (const auto& [part, mult] : lambda.pairs()) {
        const int block = static_cast<int>(part) * static_cast<int>(mult);
        if (part == 1 && mult == 2) {
            // Z_{1^2 ...} picks up the transposition of the two fixed points.
            std::vector<int> images(n);
            for (int i = 0; i < n; ++i) images[i] = i;
            images[base] = base + 1;
            images[base + 1] = base;
            desc.generators.push_back(Permutation::from_images(std::move(images)));
            desc.order *= 2;
            desc.has_transposition_factor = true;
        } else if (part >= 2) {
            // Diagonal product of the e_i cycles of this part.
            std::vector<int> images(n);
            for (int i = 0; i < n; ++i) images[i] = i;
            int b = base;
            for (std::uint32_t c = 0; c < mult; ++c) {
                for (std::uint32_t k = 0; k < part; ++k)
                    images[b + k] = b + static_cast<int>((k + 1) % part);
                b += static_cast<int>(part);
            }
            desc.generators.push_back(Permutation::from_images(std::move(images)));
            desc.order *= part;
        }
        base += block;
    }
    return desc;
}

namespace {

// nu must be a (possibly empty) list of odd parts >= 3; returns the number of
// doubled parts, or -1 if some part is even, < 3, or has multiplicity > 2.
int doubled_parts_in_tail(const Partition& lambda) {
    int doubled = 0;
    for (const auto& [part, mult] : lambda.pairs()) {
        if (part < 3) continue;  // caller inspects parts 1 and 2 separately
        if (part % 2 == 0 || mult > 2) return -1;
        if (mult == 2) ++doubled;
    }
    return doubled;
}

}  // namespace

bool center_exception_in_alt(const Partition& lambda) {
    if (!is_even_partition(lambda))
        throw std::invalid_argument("center_exception_in_alt: partition is not even");
    const std::uint32_t ones = lambda.multiplicity_of(1);
    const std::uint32_t twos = lambda.multiplicity_of(2);
    const int doubled = doubled_parts_in_tail(lambda);
    if (doubled < 0) return false;
    // Family (1): 1^3 nu ; 2^2 nu ; 1^1 2^2 nu with nu distinct odd >= 3.
    if (doubled == 0) {
        if (ones == 3 && twos == 0) return true;
        if (ones <= 1 && twos == 2) return true;
    }
    // Family (2): 1^1 nu ; nu with exactly one doubled odd part >= 3.
    if (doubled == 1 && ones <= 1 && twos == 0) return true;
    return false;
}

}  // namespace zclass
