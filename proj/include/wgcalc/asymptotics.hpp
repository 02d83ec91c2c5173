#pragma once

#include "wgcalc/category.hpp"
#include "wgcalc/partition.hpp"
#include "wgcalc/rational.hpp"
#include "wgcalc/weingarten.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace wgc {

/// Visits every partition p of the k points of gamma with gamma(p) = p, each once.
/// With connected = true only those with p v (cycles of gamma) = 1_k are visited.
void for_each_invariant_partition(const TracePermutation& gamma, bool connected,
                                  const std::function<void(const Partition&)>& visit);

/// #{p in D_k : p = gamma(p)}.
std::uint64_t asymptotic_moment_count(const Category& cat, const MomentSpec& spec);

/// #{p in D_k : p = gamma(p), p v gamma = 1_k}; only for the classical and free kinds.
std::uint64_t asymptotic_cumulant_count(const Category& cat, const MomentSpec& spec);

/// Colored categories (U-pairs, Hs(s)): one color word per trace, gamma unstarred,
/// membership checked against the concatenated word.
std::uint64_t colored_moment_count(const Category& cat, const std::vector<ColorString>& words);
std::uint64_t colored_cumulant_count(const Category& cat, const std::vector<ColorString>& words);

/// Connected invariant count in P^s(eps_1 ... eps_r); s = Category::infinity for s = inf.
std::uint64_t hs_cumulant_count(int s, const std::vector<ColorString>& words);

/// Joint moment of the variables listed by index (ascending, 0-based); the empty list means 1.
using MomentOracle = std::function<Rational(const std::vector<int>&)>;

/// c_r = sum over sigma in P(r) of mu(sigma, 1_r) times the product of block moments.
Rational cumulants_from_moments_classical(const MomentOracle& moments, int r);

/// kappa_r from m(1..r) = sum over pi in NC(r) of the product of block cumulants.
Rational cumulants_from_moments_free(const MomentOracle& moments, int r);

/// Explicit cumulant values for O, B, S, H and their free versions.
std::int64_t closed_form_cumulant(const Category& cat, const MomentSpec& spec);

/// Connected invariant partitions with even blocks whose restriction to cycle i is sigmas[i].
std::uint64_t z_cumulant_count(const std::vector<Partition>& sigmas, const std::vector<int>& ks);

/// 1/l when all l_i equal l and the union of the j-th blocks of the tau_l^{k_i} lies in
/// P^s(eps_1 ... eps_r); zero otherwise.
Rational compound_poisson_cumulant(int s, const std::vector<int>& ls, const std::vector<int>& ks,
                                   const std::vector<ColorString>& words);

/// (1,*,1,*,...) of length k.
ColorString alternating_word(int k);
/// eps^(t) = (e_{t+1}, ..., e_k, e_1, ..., e_t).
ColorString cyclic_shift(const ColorString& eps, int t);
ColorString conjugate(const ColorString& eps);

/// Cumulant of v(eps_1), ..., v(eps_r) assembled from the compound Poisson pieces:
/// sum over l dividing every k_i and shifts t_i in 1..l of the Cp cumulants.
Rational cp_decomposition_cumulant(int s, const std::vector<ColorString>& words);

} // namespace wgc
