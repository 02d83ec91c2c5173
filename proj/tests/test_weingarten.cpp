#include <doctest.h>

#include "wgcalc/error.hpp"
#include "wgcalc/weingarten.hpp"

#include <algorithm>
#include <numeric>

using namespace wgc;

namespace {

int join_blocks(const Partition& p, const Partition& q)
{
    const int k = p.size();
    std::vector<int> parent(static_cast<std::size_t>(k));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (p.same_block(a, b) || q.same_block(a, b))
                parent[find(a)] = find(b);
    int roots = 0;
    for (int a = 0; a < k; ++a)
        roots += find(a) == a;
    return roots;
}

Rational ipow(int n, int e)
{
    Integer r = 1;
    for (int i = 0; i < e; ++i)
        r *= n;
    return Rational(r);
}

// Plain rational Gauss-Jordan inverse.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (a[piv][c] == 0)
            ++piv;
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const Rational d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            const Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Fixed points of g^k, i.e. Tr(P_g^k) for a permutation matrix.
int trace_power(const std::vector<int>& g, int k)
{
    int fixed = 0;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
        int x = i;
        for (int t = 0; t < k; ++t)
            x = g[x];
        fixed += x == i;
    }
    return fixed;
}

Rational symmetric_group_average(int n, const std::vector<int>& lengths)
{
    std::vector<int> g(static_cast<std::size_t>(n));
    std::iota(g.begin(), g.end(), 0);
    Integer total = 0;
    Integer count = 0;
    do {
        Integer v = 1;
        for (int k : lengths)
            v *= trace_power(g, k);
        total += v;
        ++count;
    } while (std::next_permutation(g.begin(), g.end()));
    Rational avg(total, count);
    avg.canonicalize();
    return avg;
}

} // namespace

TEST_CASE("S at k = 2, n = 3")
{
    const auto t = build_table(Category::of(Kind::S), 2, 3);
    REQUIRE(t->dim() == 2);
    CHECK(format_partition(t->basis()[0]) == "1,2");
    CHECK(t->wg(0, 0) == Rational(1, 2));
    CHECK(t->wg(0, 1) == Rational(-1, 6));
    CHECK(t->wg(1, 0) == Rational(-1, 6));
    CHECK(t->wg(1, 1) == Rational(1, 6));
    CHECK(t->gram(0, 0) == 3);
    CHECK(t->gram(1, 1) == 9);
}

TEST_CASE("tables agree with a plain rational inverse")
{
    for (Kind kind : {Kind::O, Kind::S, Kind::H, Kind::B, Kind::O_plus, Kind::S_plus, Kind::H_plus, Kind::B_plus,
                      Kind::O_star, Kind::H_star})
        for (int k = 1; k <= 5; ++k)
            for (int n : {k + 1, k + 3}) {
                const Category cat = Category::of(kind);
                std::shared_ptr<const WeingartenTable> t;
                try {
                    t = build_table(cat, k, n);
                } catch (const Error& e) {
                    FAIL_CHECK(cat.name() << " k=" << k << " n=" << n << ": " << e.what());
                    continue;
                }
                const auto basis = t->basis();
                if (basis.empty())
                    continue;
                std::vector<std::vector<Rational>> g(basis.size(), std::vector<Rational>(basis.size()));
                for (std::size_t a = 0; a < basis.size(); ++a)
                    for (std::size_t b = 0; b < basis.size(); ++b) {
                        g[a][b] = ipow(n, join_blocks(basis[a], basis[b]));
                        CHECK(Rational(t->gram(static_cast<int>(a), static_cast<int>(b))) == g[a][b]);
                    }
                const auto w = invert(g);
                bool same = true;
                for (std::size_t a = 0; a < basis.size(); ++a)
                    for (std::size_t b = 0; b < basis.size(); ++b)
                        same = same && t->wg(static_cast<int>(a), static_cast<int>(b)) == w[a][b];
                CHECK_MESSAGE(same, cat.name() << " k=" << k << " n=" << n);
                CHECK(t->verify_inverse());
            }
}

TEST_CASE("colored tables")
{
    const ColorString eps = parse_colors("1*1*");
    const auto t = build_table(Category::of(Kind::U_pairs), 4, 3, eps);
    CHECK(t->dim() == 2);
    CHECK(t->verify_inverse());
    CHECK_THROWS_AS(build_table(Category::of(Kind::U_pairs), 4, 3), Error);
}

TEST_CASE("singular Gram matrices are reported")
{
    try {
        build_table(Category::of(Kind::S), 3, 2);
        FAIL("expected singular-gram");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::singular_gram);
    }
}

TEST_CASE("Haar integrals of entries")
{
    const auto o2 = build_table(Category::of(Kind::O), 4, 2);
    const std::vector<int> ones{1, 1, 1, 1};
    CHECK(haar_integral(*o2, ones, ones) == Rational(3, 8)); // 3 / (n (n + 2))
    const auto o3 = build_table(Category::of(Kind::O), 2, 3);
    const std::vector<int> i{1, 1};
    const std::vector<int> j{1, 2};
    const std::vector<int> jj{2, 2};
    CHECK(haar_integral(*o3, i, i) == Rational(1, 3));
    CHECK(haar_integral(*o3, i, j) == 0);
    CHECK(haar_integral(*o3, i, jj) == Rational(1, 3));
    const auto s4 = build_table(Category::of(Kind::S), 1, 4);
    const std::vector<int> one{1};
    CHECK(haar_integral(*s4, one, one) == Rational(1, 4));
    const auto s4b = build_table(Category::of(Kind::S), 2, 4);
    const std::vector<int> a{1, 2};
    const std::vector<int> b{1, 2};
    CHECK(haar_integral(*s4b, a, b) == Rational(1, 12)); // P(g(1)=1, g(2)=2)
    const std::vector<int> bad{1, 5};
    CHECK_THROWS_AS(haar_integral(*s4b, a, bad), Error);
}

TEST_CASE("trace moments of S_n against the full group")
{
    for (int n = 3; n <= 6; ++n)
        for (const std::vector<int>& lengths : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {3}, {1, 2}, {1, 1, 1}})
            CHECK(trace_moment_exact(Category::of(Kind::S), n, MomentSpec::plain(lengths)) ==
                  symmetric_group_average(n, lengths));
}

TEST_CASE("trace moments")
{
    CHECK(trace_moment_exact(Category::of(Kind::O), 5, MomentSpec::plain({1, 1})) == 1);
    CHECK(trace_moment_exact(Category::of(Kind::O), 5, MomentSpec::plain({2})) == 1);
    CHECK(trace_moment_exact(Category::of(Kind::O_plus), 2, MomentSpec::plain({1, 1})) == 1);
    const MomentSpec starred{{3, 3}, {Color::one, Color::star}};
    CHECK(trace_moment_exact(Category::of(Kind::O), 6, starred) ==
          trace_moment_exact(Category::of(Kind::O), 6, MomentSpec::plain({3, 3})));
    CHECK_THROWS_AS(trace_moment_exact(Category::of(Kind::U_pairs), 4, MomentSpec::plain({2})), Error);
    const std::vector<ColorString> vvbar{parse_colors("1*")};
    CHECK(unitary_trace_moment_exact(4, vvbar) == 1);
    const std::vector<ColorString> odd{parse_colors("1")};
    CHECK(unitary_trace_moment_exact(4, odd) == 0);
    const std::vector<ColorString> pair{parse_colors("1"), parse_colors("*")};
    CHECK(unitary_trace_moment_exact(4, pair) == 1);
}

TEST_CASE("rationals")
{
    CHECK(to_string(make_rational(4, 2)) == "2/1");
    CHECK(to_string(Rational(-1, 6)) == "-1/6");
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}
