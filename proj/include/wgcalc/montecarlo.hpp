#pragma once

#include "wgcalc/category.hpp"
#include "wgcalc/rational.hpp"
#include "wgcalc/weingarten.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wgc {

enum class GroupKind { O, S, H, B, U, Hs };

struct Sampler {
    GroupKind kind = GroupKind::O;
    int s = 2; // roots of unity for Hs

    /// "O", "S", "H", "B", "U" or "Hs(s)" with s >= 2.
    static Sampler parse(std::string_view name);
    std::string name() const;
    bool is_complex() const { return kind == GroupKind::U || kind == GroupKind::Hs; }
    bool is_monomial() const { return kind == GroupKind::S || kind == GroupKind::H || kind == GroupKind::Hs; }
};

/// Row-major n x n sample; the imaginary parts are zero for the real groups.
struct SampledMatrix {
    int n = 0;
    std::vector<std::complex<double>> entries;
    std::complex<double> operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

/// 64-bit seed of trial number `trial` in a run seeded by `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

SampledMatrix sample(const Sampler& group, int n, std::uint64_t seed);

struct Estimate {
    std::string id;
    double mean = 0;
    double std_error = 0;
};

struct SampleBatch {
    std::string group;
    int n = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<Estimate> estimates;

    /// Throws invalid-argument for an unknown id.
    const Estimate& at(std::string_view id) const;
};

/// Sample mean of prod Tr(u^{k_i})^{e_i}, with e = star meaning complex conjugation.
/// Ids: "moment.re" and, for U and Hs, "moment.im".
SampleBatch empirical_trace_moments(const Sampler& group, int n, const MomentSpec& spec, std::int64_t trials,
                                    std::uint64_t seed);

/// Same for products of traces of words in v and vbar (U and Hs only).
SampleBatch empirical_word_moments(const Sampler& group, int n, const std::vector<ColorString>& words,
                                   std::int64_t trials, std::uint64_t seed);

/// Means and covariances of the real traces Tr(u^k), k in powers:
/// ids "mean[k]" and "cov[k1,k2]" for k1 <= k2.
SampleBatch empirical_trace_statistics(const Sampler& group, int n, const std::vector<int>& powers,
                                       std::int64_t trials, std::uint64_t seed);

/// Joint k-statistics of orders 1-3 of cycle counts. For S the variables are C_l (number
/// of l-cycles); for H they are Z_l+ (positive l-cycles) and Z_l- (minus the number of
/// negative l-cycles). Ids: "mean[C1]", "cov[C1,C2]", "k3[C1,C1,C2]", with names
/// C<l> for S and Z<l>+ / Z<l>- for H, listed in the order l = 1..l_max (+ before -).
SampleBatch empirical_cycle_statistics(GroupKind group, int n, int l_max, std::int64_t trials, std::uint64_t seed);

/// Exact average over every element of S_n (s = 1), H_n (s = 2) or H_n^s.
Rational exhaustive_trace_moment(const Sampler& group, int n, const MomentSpec& spec);
Rational exhaustive_word_moment(const Sampler& group, int n, const std::vector<ColorString>& words);

} // namespace wgc
