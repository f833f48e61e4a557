#pragma once

// Morphisms of FIM+: an injection [m] -> [n] together with an oriented
// perfect matching of the complement of its image. Reordering blocks changes
// the morphism by the sign of the reordering, so each morphism is stored with
// its blocks sorted by minimum and the sign absorbed into `sign`.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "injword/combinatorics.hpp"
#include "injword/integer.hpp"

namespace injword {

/// Sorts blocks by minimum element; returns the parity of the sort as +-1.
inline int normalize_blocks(std::vector<Block>& blocks) {
    for (auto& b : blocks)
        if (b.first > b.second) std::swap(b.first, b.second);
    std::vector<Label> mins;
    for (const auto& b : blocks) mins.push_back(b.first);
    int s = permutation_sign(mins);
    std::sort(blocks.begin(), blocks.end());
    return s;
}

class FIMPlusMorphism {
public:
    /// images[i] = f(i+1) in [target]; blocks in the order given; sign applied after normalization.
    FIMPlusMorphism(int target, std::vector<Label> images, std::vector<Block> blocks, int sign = 1)
        : target_(target), images_(std::move(images)), blocks_(std::move(blocks)), sign_(sign) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("morphism sign must be +1 or -1");
        std::set<Label> used;
        for (Label a : images_)
            if (a < 1 || a > target_ || !used.insert(a).second) throw std::invalid_argument("f is not an injection into the target");
        for (const auto& b : blocks_) {
            for (Label a : {b.first, b.second})
                if (a < 1 || a > target_ || !used.insert(a).second)
                    throw std::invalid_argument("matching block meets the image or another block");
        }
        if (static_cast<int>(used.size()) != target_) throw std::invalid_argument("matching does not cover the complement");
        sign_ *= normalize_blocks(blocks_);
    }

    static FIMPlusMorphism identity(int n) {
        std::vector<Label> im(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
        return FIMPlusMorphism(n, std::move(im), {});
    }

    int source() const { return static_cast<int>(images_.size()); }
    int target() const { return target_; }
    const std::vector<Label>& images() const { return images_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int sign() const { return sign_; }

    /// Same underlying (injection, matching), ignoring the sign.
    bool same_basis_element(const FIMPlusMorphism& o) const {
        return target_ == o.target_ && images_ == o.images_ && blocks_ == o.blocks_;
    }
    bool operator==(const FIMPlusMorphism&) const = default;

    std::string to_string() const {
        std::string s = sign_ < 0 ? "-(" : "(";
        for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
        s += " |";
        for (const auto& b : blocks_) s += " {" + std::to_string(b.first) + "," + std::to_string(b.second) + "}";
        return s + ")";
    }

private:
    int target_;
    std::vector<Label> images_;
    std::vector<Block> blocks_;
    int sign_;
};

/// G o F = (g o f, C_1 ^ ... ^ C_c ^ g(A_1) ^ ... ^ g(A_a)), normalized.
inline FIMPlusMorphism fimplus_compose(const FIMPlusMorphism& g, const FIMPlusMorphism& f) {
    if (f.target() != g.source())
        throw std::invalid_argument("compose: codomain " + std::to_string(f.target()) + " vs domain " +
                                    std::to_string(g.source()));
    auto apply_g = [&](Label a) { return g.images()[static_cast<std::size_t>(a - 1)]; };
    std::vector<Label> im;
    for (Label a : f.images()) im.push_back(apply_g(a));
    std::vector<Block> blocks = g.blocks();
    for (const auto& b : f.blocks()) blocks.emplace_back(apply_g(b.first), apply_g(b.second));
    return FIMPlusMorphism(g.target(), std::move(im), std::move(blocks), f.sign() * g.sign());
}

/// Basis of Hom([k],[m]): all injections in lexicographic order, then all
/// perfect matchings of the complement, each with sign +1.
inline std::vector<FIMPlusMorphism> fimplus_hom_basis(int k, int m) {
    std::vector<FIMPlusMorphism> out;
    if (k < 0 || k > m || (m - k) % 2 != 0) return out;
    const GroundSet target = GroundSet::standard(m);
    for (const auto& f : enumerate_injections(k - 1, target))
        for (const auto& z : perfect_matchings(target.without(f))) out.emplace_back(m, f, z.blocks);
    return out;
}

/// Basis of M^{FIM+}(d)_B for an arbitrary finite set B: pairs (images of
/// [d], sorted perfect matching of the rest).
inline std::vector<std::pair<Word, Matching>> fimplus_free_basis(int d, const GroundSet& b) {
    std::vector<std::pair<Word, Matching>> out;
    if (d < 0 || d > b.size() || (b.size() - d) % 2 != 0) return out;
    for (const auto& f : enumerate_injections(d - 1, b))
        for (auto& z : perfect_matchings(b.without(f))) out.emplace_back(f, std::move(z));
    return out;
}

/// dim Hom_{FIM+}([k],[m]) = m!/(m-k)! * (m-k-1)!!.
inline Integer hom_dim_fimplus(int k, int m) {
    if (k < 0 || k > m || (m - k) % 2 != 0) return 0;
    return falling_factorial(m, k) * double_factorial_odd((m - k) / 2);
}

}  // namespace injword
