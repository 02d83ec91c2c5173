#include <doctest.h>

#include "wgcalc/category.hpp"
#include "wgcalc/error.hpp"

#include <algorithm>

using namespace wgc;

namespace {

bool crossing(const Partition& p)
{
    const int k = p.size();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d)
                    if (p.same_block(a, c) && p.same_block(b, d) && !p.same_block(a, b))
                        return true;
    return false;
}

// Membership read directly off the block structure.
bool member_oracle(const Category& cat, const Partition& p, const ColorString& eps)
{
    const auto blocks = p.blocks();
    auto all_blocks = [&](auto pred) { return std::all_of(blocks.begin(), blocks.end(), pred); };
    auto odd_minus_even = [](const std::vector<int>& b) {
        int d = 0;
        for (int x : b)
            d += x % 2 == 0 ? 1 : -1; // 0-based even index = odd leg
        return d;
    };
    auto ones_minus_stars = [&](const std::vector<int>& b) {
        int d = 0;
        for (int x : b)
            d += eps[x] == Color::one ? 1 : -1;
        return d;
    };
    auto mod_zero = [](int d, int s) { return s == 0 ? d == 0 : d % s == 0; };
    const bool nc = !crossing(p);
    switch (cat.kind) {
    case Kind::O: return all_blocks([](auto& b) { return b.size() == 2; });
    case Kind::S: return true;
    case Kind::H: return all_blocks([](auto& b) { return b.size() % 2 == 0; });
    case Kind::B: return all_blocks([](auto& b) { return b.size() <= 2; });
    case Kind::O_plus: return nc && all_blocks([](auto& b) { return b.size() == 2; });
    case Kind::S_plus: return nc;
    case Kind::H_plus: return nc && all_blocks([](auto& b) { return b.size() % 2 == 0; });
    case Kind::B_plus: return nc && all_blocks([](auto& b) { return b.size() <= 2; });
    case Kind::O_star:
        return all_blocks([&](auto& b) { return b.size() == 2 && odd_minus_even(b) == 0; });
    case Kind::H_star: return p.size() % 2 == 0 && all_blocks([&](auto& b) { return odd_minus_even(b) == 0; });
    case Kind::H_series:
        return p.size() % 2 == 0 && all_blocks([&](auto& b) { return mod_zero(odd_minus_even(b), cat.s); });
    case Kind::U_pairs:
        return all_blocks([&](auto& b) { return b.size() == 2 && ones_minus_stars(b) == 0; });
    case Kind::Hs_complex: return all_blocks([&](auto& b) { return mod_zero(ones_minus_stars(b), cat.s); });
    }
    return false;
}

std::uint64_t double_factorial_odd(int k)
{
    std::uint64_t r = 1;
    for (int i = k - 1; i > 1; i -= 2)
        r *= i;
    return r;
}

std::uint64_t catalan(int m)
{
    std::uint64_t c = 1;
    for (int i = 0; i < m; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

std::uint64_t involutions(int k)
{
    std::uint64_t a = 1, b = 1;
    for (int i = 2; i <= k; ++i) {
        const std::uint64_t c = b + (i - 1) * a;
        a = b;
        b = c;
    }
    return k == 0 ? 1 : b;
}

std::uint64_t motzkin(int k)
{
    std::vector<std::uint64_t> m{1, 1};
    for (int i = 2; i <= k; ++i)
        m.push_back(((2 * i + 1) * m[i - 1] + (3 * i - 3) * m[i - 2]) / (i + 2));
    return m[k];
}

ColorString alternating(int k)
{
    ColorString e;
    for (int i = 0; i < k; ++i)
        e.push_back(i % 2 == 0 ? Color::one : Color::star);
    return e;
}

} // namespace

TEST_CASE("names")
{
    for (const char* name : {"O", "S", "H", "B", "O+", "S+", "H+", "B+", "O*", "H*", "U-pairs"})
        CHECK(Category::parse(name).name() == name);
    CHECK(Category::parse("H(3)") == Category::h_series(3));
    CHECK(Category::parse("H(inf)") == Category::h_series(Category::infinity));
    CHECK(Category::parse("Hs(4)") == Category::hs_complex(4));
    CHECK_THROWS_AS(Category::parse("Q"), Error);
    CHECK_THROWS_AS(Category::parse("H(1)"), Error);
    CHECK_THROWS_AS(Category::parse("H(x)"), Error);
}

TEST_CASE("uncolored categories match the block oracle")
{
    std::vector<Category> cats;
    for (Kind k : {Kind::O, Kind::S, Kind::H, Kind::B, Kind::O_plus, Kind::S_plus, Kind::H_plus, Kind::B_plus,
                   Kind::O_star, Kind::H_star})
        cats.push_back(Category::of(k));
    for (int s : {2, 3, 4, Category::infinity})
        cats.push_back(Category::h_series(s));
    for (const auto& cat : cats)
        for (int k = 1; k <= 8; ++k) {
            std::vector<Partition> expected;
            for (const auto& p : enumerate_partitions(k))
                if (member_oracle(cat, p, {}))
                    expected.push_back(p);
            const auto got = enumerate_category(cat, k);
            CHECK_MESSAGE(*got == expected, cat.name() << " k=" << k);
            for (const auto& p : enumerate_partitions(k))
                CHECK(contains(cat, p) == member_oracle(cat, p, {}));
        }
}

TEST_CASE("colored categories match the block oracle")
{
    const std::vector<ColorString> words = {alternating(4), alternating(6), parse_colors("11**"),
                                            parse_colors("1*1*1*"), parse_colors("111"), parse_colors("1,1,*,1,*,*")};
    for (const auto& cat : {Category::of(Kind::U_pairs), Category::hs_complex(2), Category::hs_complex(3),
                            Category::hs_complex(Category::infinity)})
        for (const auto& eps : words) {
            const int k = static_cast<int>(eps.size());
            std::vector<Partition> expected;
            for (const auto& p : enumerate_partitions(k))
                if (member_oracle(cat, p, eps))
                    expected.push_back(p);
            CHECK_MESSAGE(*enumerate_category(cat, k, eps) == expected, cat.name() << " " << format_colors(eps));
        }
}

TEST_CASE("known sizes")
{
    for (int k = 1; k <= 12; ++k) {
        const std::uint64_t pairings = k % 2 ? 0 : double_factorial_odd(k);
        CHECK(enumerate_category(Category::of(Kind::O), k)->size() == pairings);
        CHECK(enumerate_category(Category::of(Kind::O_plus), k)->size() == (k % 2 ? 0 : catalan(k / 2)));
        CHECK(enumerate_category(Category::of(Kind::B), k)->size() == involutions(k));
        CHECK(enumerate_category(Category::of(Kind::B_plus), k)->size() == motzkin(k));
    }
    std::uint64_t fact = 1;
    for (int m = 1; m <= 6; ++m) {
        fact *= m;
        CHECK(enumerate_category(Category::of(Kind::O_star), 2 * m)->size() == fact);
        CHECK(enumerate_category(Category::of(Kind::U_pairs), 2 * m, alternating(2 * m))->size() == fact);
    }
}

TEST_CASE("series endpoints")
{
    for (int k = 2; k <= 8; k += 2) {
        CHECK(*enumerate_category(Category::h_series(2), k) == *enumerate_category(Category::of(Kind::H), k));
        CHECK(*enumerate_category(Category::h_series(Category::infinity), k) ==
              *enumerate_category(Category::of(Kind::H_star), k));
    }
}

TEST_CASE("color validation")
{
    CHECK_THROWS_AS(check_colors(Category::of(Kind::U_pairs), 4, {}), Error);
    const ColorString three = parse_colors("1*1");
    CHECK_THROWS_AS(check_colors(Category::of(Kind::U_pairs), 4, three), Error);
    CHECK_THROWS_AS(parse_colors("1x"), Error);
    CHECK(format_colors(parse_colors("1,*,*")) == "1**");
    CHECK(supports_cumulant_count(Category::of(Kind::H_plus)));
    CHECK_FALSE(supports_cumulant_count(Category::of(Kind::O_star)));
}
