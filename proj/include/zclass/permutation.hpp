// Permutations of {1..n}, stored 0-based as image arrays. Composition is
// "apply right factor first": (a*b)(x) = a(b(x)). Cycle notation is printed
// 1-based with cycles sorted by least moved point; the identity prints "()".
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zclass {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);            // identity
    static Permutation from_images(std::vector<int> images);  // 0-based, validated

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[x]; }  // 0-based point
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& rhs) const;  // this after rhs
    Permutation inverse() const;
    Permutation power(std::int64_t k) const;

    bool is_identity() const;
    bool is_even() const;
    std::int64_t order() const;

    // Disjoint cycles as 0-based point lists, least moved point first,
    // each cycle starting at its least point. Fixed points omitted.
    std::vector<std::vector<int>> cycles() const;
    std::string cycle_string() const;  // 1-based rendering

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

}  // namespace zclass
