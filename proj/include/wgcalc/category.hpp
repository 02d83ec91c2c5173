#pragma once

#include "wgcalc/partition.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wgc {

enum class Kind {
    O,
    S,
    H,
    B,
    O_plus,
    S_plus,
    H_plus,
    B_plus,
    O_star,
    H_star,
    H_series,
    U_pairs,
    Hs_complex,
};

enum class Color : std::uint8_t { one, star };
using ColorString = std::vector<Color>;

inline Color opposite(Color c) { return c == Color::one ? Color::star : Color::one; }

/// Accepts "1*1", "1,*,1" or "1 * 1"; rejects anything but 1 and *.
ColorString parse_colors(std::string_view text);
std::string format_colors(std::span<const Color> colors);

struct Category {
    static constexpr int infinity = 0;

    Kind kind = Kind::S;
    int s = infinity; // only for H_series and Hs_complex; 0 means s = infinity

    static Category of(Kind kind) { return Category{kind, infinity}; }
    static Category h_series(int s) { return Category{Kind::H_series, s}; }
    static Category hs_complex(int s) { return Category{Kind::Hs_complex, s}; }

    /// CLI names: O S H B O+ S+ H+ B+ O* H* H(s) U-pairs Hs(s), s an integer >= 2 or inf.
    static Category parse(std::string_view name);
    std::string name() const;

    bool needs_colors() const { return kind == Kind::U_pairs || kind == Kind::Hs_complex; }
    bool is_free() const;
    bool is_classical() const;
    /// Kinds whose members are all pairings (B kinds allow singletons too).
    bool pairings_only() const;

    bool operator==(const Category&) const = default;
};

bool contains(const Category& cat, const Partition& p, std::span<const Color> eps = {});

/// D_k (or P_2(eps), P^s(eps)) in canonical order. Results are memoized and shared.
std::shared_ptr<const std::vector<Partition>> enumerate_category(const Category& cat, int k,
                                                                 std::span<const Color> eps = {});

bool supports_cumulant_count(const Category& cat);

/// Validates eps against cat: present (length k) iff the category is colored.
void check_colors(const Category& cat, int k, std::span<const Color> eps);

} // namespace wgc
