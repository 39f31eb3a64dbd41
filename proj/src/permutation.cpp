#include "zclass/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace zclass {

Permutation::Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("images are not a bijection");
        seen[v] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
    return out;
}

Permutation Permutation::power(std::int64_t k) const {
    const std::int64_t n = order();
    k %= n;
    if (k < 0) k += n;
    Permutation acc(degree());
    Permutation base = *this;
    while (k > 0) {
        if (k & 1) acc = acc.compose(base);
        base = base.compose(base);
        k >>= 1;
    }
    return acc;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

bool Permutation::is_even() const {
    // Parity = (degree - #cycles incl. fixed points) mod 2.
    std::vector<char> seen(images_.size(), 0);
    int transpositions = 0;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::int64_t Permutation::order() const {
    std::vector<char> seen(images_.size(), 0);
    std::int64_t ord = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::int64_t len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::cycle_string() const {
    const auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
        s += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(c[k] + 1);
        }
        s += ')';
    }
    return s;
}

}  // namespace zclass
