#pragma once

#include "wgcalc/category.hpp"
#include "wgcalc/partition.hpp"
#include "wgcalc/rational.hpp"

#include <memory>
#include <span>
#include <vector>

namespace wgc {

/// Cycle lengths k_1..k_r with exponents e_1..e_r (one or star).
struct MomentSpec {
    std::vector<int> lengths;
    ColorString stars; // empty means all unstarred

    static MomentSpec plain(std::vector<int> lengths) { return {std::move(lengths), {}}; }

    int total() const;
    int cycles() const { return static_cast<int>(lengths.size()); }
    Color star(int i) const { return stars.empty() ? Color::one : stars[static_cast<std::size_t>(i)]; }
    void validate() const;
};

/// gamma with cycles (1..k_1), (k_1+1..k_1+k_2), ...; a starred cycle is reversed.
struct TracePermutation {
    std::vector<int> lengths;
    ColorString stars;
    Permutation perm;
    Partition cycles; // blocks = cycle supports

    static TracePermutation make(const MomentSpec& spec);
    int size() const { return perm.size(); }
};

class WeingartenTable {
public:
    WeingartenTable(Category cat, int k, int n, ColorString eps);

    const Category& category() const { return cat_; }
    int k() const { return k_; }
    int n() const { return n_; }
    const ColorString& colors() const { return eps_; }
    std::span<const Partition> basis() const { return *basis_; }
    int dim() const { return static_cast<int>(basis_->size()); }

    const Integer& gram(int a, int b) const { return gram_[index(a, b)]; }
    /// W = adj / det exactly.
    Rational wg(int a, int b) const;
    const Integer& adjugate(int a, int b) const { return adj_[index(a, b)]; }
    const Integer& determinant() const { return det_; }

    /// True iff adj * gram == det * I entrywise over the integers.
    bool verify_inverse() const;

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * basis_->size() + b; }

    Category cat_;
    int k_;
    int n_;
    ColorString eps_;
    std::shared_ptr<const std::vector<Partition>> basis_;
    std::vector<Integer> gram_;
    std::vector<Integer> adj_;
    Integer det_;
};

/// Memoized by (cat, k, n, eps). Throws singular-gram when the Gram matrix is not invertible.
std::shared_ptr<const WeingartenTable> build_table(const Category& cat, int k, int n,
                                                   std::span<const Color> eps = {});

/// Integral of u_{i1 j1} ... u_{ik jk}; indices are 1-based in {1..n}.
Rational haar_integral(const WeingartenTable& table, std::span<const int> i, std::span<const int> j);

/// Integral of prod Tr(u^{k_i})^{e_i} by the double sum over the basis.
Rational trace_moment_exact(const Category& cat, int n, const MomentSpec& spec);

/// Integral of prod_c Tr(w_c), w_c the word in v, vbar spelled by the c-th color string,
/// over the group of a colored category (U-pairs for U_n, Hs(s) for the monomial group H_n^s).
Rational colored_trace_moment_exact(const Category& cat, int n, const std::vector<ColorString>& words);

Rational unitary_trace_moment_exact(int n, const std::vector<ColorString>& words);

} // namespace wgc
