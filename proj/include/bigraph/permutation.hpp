#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bigraph {

/// A permutation of {0, ..., p-1}, stored as its image array.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> hit(images_.size(), 0);
        for (int v : images_) {
            if (v < 0 || static_cast<size_t>(v) >= images_.size() || hit[v])
                throw std::invalid_argument("Permutation: image array is not a bijection");
            hit[v] = 1;
        }
    }

    static Permutation identity(int p) {
        std::vector<int> im(p);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(images_.size()); }

    int operator()(int x) const { return images_[x]; }

    bool is_identity() const {
        for (int x = 0; x < size(); ++x)
            if (images_[x] != x) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int x = 0; x < size(); ++x) im[images_[x]] = x;
        return Permutation(std::move(im));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }

    const std::vector<int>& images() const { return images_; }

private:
    std::vector<int> images_;
};

/// Composition with (outer ∘ inner)(x) = outer(inner(x)).
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(inner.size());
    for (int x = 0; x < inner.size(); ++x) im[x] = outer(inner(x));
    return Permutation(std::move(im));
}

/// All p! permutations of {0,...,p-1} in lexicographic image order.
inline std::vector<Permutation> all_permutations(int p) {
    std::vector<int> im(p);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace bigraph
