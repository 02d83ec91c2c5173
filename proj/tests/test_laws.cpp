#include <doctest.h>

#include "wgcalc/asymptotics.hpp"
#include "wgcalc/error.hpp"
#include "wgcalc/laws.hpp"

#include <cmath>

using namespace wgc;

namespace {

// E|z|^{2p} for complex Gaussian z with E|z|^2 = v, by Simpson's rule on the radial density.
double rayleigh_even_moment(int p, double v)
{
    const int steps = 20000;
    const double hi = 12.0 * std::sqrt(v);
    const double h = hi / steps;
    auto f = [&](double r) { return std::pow(r, 2 * p) * (2 * r / v) * std::exp(-r * r / v); };
    double sum = f(0) + f(hi);
    for (int i = 1; i < steps; ++i)
        sum += (i % 2 ? 4 : 2) * f(i * h);
    return sum * h / 3;
}

} // namespace

TEST_CASE("cumulant profiles")
{
    const auto g = law_cumulants(LawDescriptor::gaussian(1, 3), 4);
    CHECK(g == std::vector<Rational>{1, 3, 0, 0});
    const auto p = law_cumulants(LawDescriptor::poisson(Rational(1, 2)), 3);
    CHECK(p == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    const auto s = law_cumulants(LawDescriptor::semicircular(0, 1), 4);
    CHECK(s == std::vector<Rational>{0, 1, 0, 0});
    const auto c = law_cumulants(LawDescriptor::circular(1), 3);
    CHECK(c == std::vector<Rational>{0, 1, 0});
    const auto cp = law_cumulants(LawDescriptor::compound_poisson(2, {1, 3, 5}), 3);
    CHECK(cp == std::vector<Rational>{2, 6, 10});
    CHECK_THROWS_AS(law_cumulants(LawDescriptor::compound_poisson(2, {1}), 3), Error);
    CHECK_THROWS_AS(law_cumulants(LawDescriptor::symmetrized_rayleigh(1), 2), Error);
}

TEST_CASE("moments")
{
    CHECK(law_moments(LawDescriptor::gaussian(0, 1), 6) == std::vector<Rational>{0, 1, 0, 3, 0, 15});
    CHECK(law_moments(LawDescriptor::free_poisson(1), 5) == std::vector<Rational>{1, 2, 5, 14, 42});
    CHECK(law_moments(LawDescriptor::poisson(1), 5) == std::vector<Rational>{1, 2, 5, 15, 52});
    CHECK(law_moments(LawDescriptor::semicircular(0, 1), 6) == std::vector<Rational>{0, 1, 0, 2, 0, 5});
}

TEST_CASE("symmetrized Rayleigh moments against numerical integration")
{
    for (const double v : {1.0, 2.5}) {
        const auto m = law_moments(LawDescriptor::symmetrized_rayleigh(Rational(v)), 8);
        for (int p = 1; p <= 4; ++p) {
            CHECK(m[2 * p - 2] == 0);
            CHECK(m[2 * p - 1].get_d() == doctest::Approx(rayleigh_even_moment(p, v)).epsilon(1e-8));
        }
    }
}

TEST_CASE("single trace laws")
{
    // u_k for S: sum over l | k of l C_l with C_l Poisson(1/l), so kappa_p = sum l^{p-1}.
    for (int k = 1; k <= 8; ++k) {
        const auto kappa = law_cumulants(trace_law(Category::of(Kind::S), k, 4), 4);
        for (int p = 1; p <= 4; ++p) {
            Rational expected = 0;
            for (int l = 1; l <= k; ++l)
                if (k % l == 0)
                    expected += std::pow(l, p - 1);
            CHECK(kappa[p - 1] == expected);
        }
    }
    CHECK(trace_law(Category::of(Kind::O), 2).family == LawFamily::gaussian);
    CHECK(trace_law(Category::of(Kind::B), 3).mean == 1);
    CHECK(trace_law(Category::of(Kind::O_plus), 3).family == LawFamily::circular);
    CHECK(trace_law(Category::of(Kind::B_plus), 2).mean == 2);
    CHECK_THROWS_AS(trace_law(Category::of(Kind::S_plus), 2), Error);
}

TEST_CASE("cycle decompositions reproduce the closed forms")
{
    for (Kind kind : {Kind::S, Kind::H, Kind::S_plus, Kind::H_plus}) {
        const auto report = cycle_decomposition_check(kind, 6);
        CHECK(report.checks > 0);
        CHECK_MESSAGE(report.ok(), (report.ok() ? "" : report.mismatches.front()));
    }
}
