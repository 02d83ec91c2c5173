#include <doctest.h>

#include "wgcalc/error.hpp"
#include "wgcalc/partition.hpp"

#include <algorithm>
#include <set>

using namespace wgc;

namespace {

// Bell numbers from the Bell triangle.
std::uint64_t bell_oracle(int k)
{
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= k; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row)
            next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

std::uint64_t catalan(int m)
{
    std::uint64_t c = 1;
    for (int i = 0; i < m; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

bool crossing_oracle(const Partition& p)
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

} // namespace

TEST_CASE("enumeration counts and order")
{
    for (int k = 0; k <= 8; ++k) {
        const auto all = enumerate_partitions(k);
        CHECK(all.size() == bell_oracle(k));
        CHECK(bell_number(k) == bell_oracle(k));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    }
    const auto three = enumerate_partitions(3);
    CHECK(format_partition(three.front()) == "1,2,3");
    CHECK(format_partition(three.back()) == "1|2|3");
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(enumerate_partitions(enumeration_limits().all_partitions + 1), Error);
    std::uint64_t seen = 0;
    for_each_partition(11, [&](const Partition&) { ++seen; });
    CHECK(seen == bell_oracle(11));
}

TEST_CASE("noncrossing")
{
    for (int k = 1; k <= 8; ++k) {
        std::uint64_t nc = 0;
        for (const auto& p : enumerate_partitions(k)) {
            CHECK(is_noncrossing(p) == !crossing_oracle(p));
            nc += is_noncrossing(p);
        }
        CHECK(nc == catalan(k));
    }
    CHECK_FALSE(is_noncrossing(parse_partition("1,3|2,4")));
    CHECK(is_noncrossing(parse_partition("1,4|2,3")));
}

TEST_CASE("join is the least upper bound")
{
    const auto all = enumerate_partitions(5);
    for (std::size_t a = 0; a < all.size(); a += 3)
        for (std::size_t b = 0; b < all.size(); b += 5) {
            const Partition j = join(all[a], all[b]);
            CHECK(all[a].refines(j));
            CHECK(all[b].refines(j));
            for (const auto& c : all)
                if (all[a].refines(c) && all[b].refines(c))
                    CHECK(j.refines(c));
        }
    CHECK(format_partition(join(parse_partition("1,2|3|4"), parse_partition("1|2,3|4"))) == "1,2,3|4");
}

TEST_CASE("parse and format")
{
    CHECK(format_partition(parse_partition("4|2|1,3")) == "1,3|2|4");
    CHECK(parse_partition("1,3|2|4").block_count() == 3);
    CHECK_THROWS_AS(parse_partition("1,2|2"), Error);
    CHECK_THROWS_AS(parse_partition("1,3"), Error);
    CHECK_THROWS_AS(parse_partition("a|b"), Error);
    for (const auto& p : enumerate_partitions(5))
        CHECK(parse_partition(format_partition(p)) == p);
}

TEST_CASE("permutation action")
{
    const Permutation g({1, 2, 0, 3}); // 0 -> 1 -> 2 -> 0
    const Partition p = parse_partition("1,2|3|4");
    const Partition q = apply_perm(g, p);
    CHECK(format_partition(q) == "1|2,3|4");
    CHECK(apply_perm(g.inverse(), q) == p);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
    const Permutation c = Permutation::from_cycles(5, {{0, 2, 4}});
    CHECK(c(0) == 2);
    CHECK(c(4) == 0);
    CHECK(c(1) == 1);
}

TEST_CASE("cyclic partitions and lifts")
{
    CHECK(format_partition(cyclic_partition(2, 6)) == "1,3,5|2,4,6");
    CHECK(format_partition(cyclic_partition(3, 3)) == "1|2|3");
    CHECK(format_partition(cyclic_partition(1, 4)) == "1,2,3,4");
    CHECK_THROWS_AS(cyclic_partition(4, 6), Error);
    const std::vector<int> lengths{2, 1, 3};
    CHECK(format_partition(cycle_partition(lengths)) == "1,2|3|4,5,6");
    CHECK(format_partition(lift(parse_partition("1,3|2"), lengths)) == "1,2,4,5,6|3");
}

TEST_CASE("kernel and restriction")
{
    const std::vector<int> idx{5, 2, 5, 7};
    CHECK(format_partition(kernel(idx)) == "1,3|2|4");
    const std::vector<int> pts{1, 3, 4};
    CHECK(format_partition(restrict_to(parse_partition("1,2|3|4,5"), pts)) == "1|2,3");
}

TEST_CASE("Moebius function to the top element")
{
    // sum over sigma of mu(sigma, 1_k) vanishes for k >= 2
    for (int k = 2; k <= 7; ++k) {
        std::int64_t sum = 0;
        for (const auto& p : enumerate_partitions(k))
            sum += mobius_to_top(p);
        CHECK(sum == 0);
    }
    CHECK(mobius_to_top(Partition::singletons(4)) == -6);
    CHECK(mobius_to_top(Partition::one_block(4)) == 1);
}
