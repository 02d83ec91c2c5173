#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wgc {

/// Set partition of {0..k-1} stored as a restricted-growth string: labels[i] is
/// the block of point i, blocks numbered by first appearance. Every constructor
/// normalizes, so equal partitions have equal label sequences.
class Partition {
public:
    Partition() = default;

    /// Accepts any labelling (equal labels = same block) and canonicalizes it.
    static Partition from_labels(std::span<const int> labels);
    static Partition from_blocks(int k, const std::vector<std::vector<int>>& blocks);

    static Partition one_block(int k);
    static Partition singletons(int k);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    int block_count() const noexcept { return blocks_; }
    std::span<const int> labels() const noexcept { return labels_; }
    int label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    bool same_block(int i, int j) const { return label(i) == label(j); }

    /// Blocks in canonical order (by smallest element), elements ascending.
    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;

    /// Refinement order: true iff every block of *this lies inside a block of other.
    bool refines(const Partition& other) const;

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& other) const { return labels_ <=> other.labels_; }

    std::size_t hash() const noexcept;

private:
    std::vector<int> labels_;
    int blocks_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept { return p.hash(); }
};

/// Bijection of {0..k-1}; images[i] is the image of i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int k);
    /// Builds the permutation from disjoint cycles (0-indexed); unlisted points are fixed.
    static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    std::span<const int> images() const noexcept { return images_; }
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Enumeration caps. WG_MAX_K in the environment overrides both at first use.
struct EnumerationLimits {
    int all_partitions = 10;
    int pairings = 14;
};
EnumerationLimits enumeration_limits();
void set_enumeration_limits(EnumerationLimits limits);

/// All partitions of k points in lexicographic restricted-growth order.
std::vector<Partition> enumerate_partitions(int k);

/// Visits partitions of k points in lexicographic order without materializing
/// them; no cap is applied.
void for_each_partition(int k, const std::function<void(const Partition&)>& visit);

/// Least upper bound in the refinement lattice.
Partition join(const Partition& p, const Partition& q);

/// ker i: s ~ t iff indices[s] == indices[t].
Partition kernel(std::span<const int> indices);

bool is_noncrossing(const Partition& p);

/// Maps blocks forward: g(i) ~ g(j) in the result iff i ~ j in p.
Partition apply_perm(const Permutation& g, const Partition& p);

/// Partition whose blocks are the consecutive segments of the given lengths.
Partition cycle_partition(std::span<const int> cycle_lengths);

/// Replaces point j of sigma by the j-th consecutive segment of the given lengths.
Partition lift(const Partition& sigma, std::span<const int> cycle_lengths);

/// tau_l^k = {(1, l+1, 2l+1, ...), ..., (l, 2l, ..., k)}, requires l | k.
Partition cyclic_partition(int l, int k);

/// mu(sigma, 1_k) in the full partition lattice.
std::int64_t mobius_to_top(const Partition& sigma);

/// Restriction of p to the given points (ascending), relabelled 0..m-1.
Partition restrict_to(const Partition& p, std::span<const int> points);

/// Textual form: 1-indexed, blocks separated by '|', elements by ','.
/// The empty partition is the empty string.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

std::uint64_t bell_number(int k);

} // namespace wgc
