#include <doctest.h>

#include "wgcalc/error.hpp"
#include "wgcalc/montecarlo.hpp"

#include <cmath>
#include <complex>

using namespace wgc;

namespace {

double unitarity_defect(const SampledMatrix& m)
{
    double worst = 0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            std::complex<double> dot = 0;
            for (int t = 0; t < m.n; ++t)
                dot += m(i, t) * std::conj(m(j, t));
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

} // namespace

TEST_CASE("samples lie in their groups")
{
    for (const char* name : {"O", "U", "B"}) {
        const auto m = sample(Sampler::parse(name), 7, 11);
        CHECK(unitarity_defect(m) < 1e-12);
    }
    const auto b = sample(Sampler::parse("B"), 6, 3);
    for (int i = 0; i < 6; ++i) {
        double row = 0;
        for (int j = 0; j < 6; ++j)
            row += b(i, j).real();
        CHECK(row == doctest::Approx(1.0));
    }
    for (const char* name : {"S", "H", "Hs(3)"}) {
        const auto m = sample(Sampler::parse(name), 8, 5);
        for (int i = 0; i < 8; ++i) {
            int nonzero = 0;
            for (int j = 0; j < 8; ++j)
                if (std::abs(m(i, j)) > 0.5) {
                    ++nonzero;
                    CHECK(std::abs(m(i, j)) == doctest::Approx(1.0));
                    if (std::string(name) == "Hs(3)")
                        CHECK(std::abs(std::pow(m(i, j), 3) - 1.0) < 1e-12);
                }
            CHECK(nonzero == 1);
        }
    }
    CHECK_THROWS_AS(Sampler::parse("Hs(1)"), Error);
    CHECK_THROWS_AS(Sampler::parse("X"), Error);
}

TEST_CASE("reproducibility")
{
    const auto a = empirical_trace_moments(Sampler::parse("O"), 6, MomentSpec::plain({2}), 500, 42);
    const auto b = empirical_trace_moments(Sampler::parse("O"), 6, MomentSpec::plain({2}), 500, 42);
    CHECK(a.at("moment.re").mean == b.at("moment.re").mean);
    CHECK(a.at("moment.re").std_error == b.at("moment.re").std_error);
    const auto c = empirical_trace_moments(Sampler::parse("O"), 6, MomentSpec::plain({2}), 500, 43);
    CHECK(a.at("moment.re").mean != c.at("moment.re").mean);
    CHECK_THROWS_AS(a.at("moment.im"), Error);
}

TEST_CASE("Haar invariance smoke test")
{
    // Tr(P u) for a fixed permutation P has the same mean as Tr(u), namely 0.
    for (const char* name : {"O", "U"}) {
        const int n = 5;
        const int trials = 20000;
        double sum = 0;
        double sum2 = 0;
        double plain = 0;
        double plain2 = 0;
        for (int t = 0; t < trials; ++t) {
            const auto m = sample(Sampler::parse(name), n, trial_seed(99, t));
            double tp = 0;
            double tr = 0;
            for (int i = 0; i < n; ++i) {
                tp += m((i + 1) % n, i).real();
                tr += m(i, i).real();
            }
            sum += tp;
            sum2 += tp * tp;
            plain += tr;
            plain2 += tr * tr;
        }
        const double mean = sum / trials;
        const double se = std::sqrt((sum2 / trials - mean * mean) / trials);
        const double pmean = plain / trials;
        const double pse = std::sqrt((plain2 / trials - pmean * pmean) / trials);
        CHECK(std::abs(mean - pmean) <= 5 * std::hypot(se, pse));
    }
}

TEST_CASE("exhaustive averages")
{
    const Sampler s = Sampler::parse("S");
    const Sampler h = Sampler::parse("H");
    CHECK(exhaustive_trace_moment(s, 4, MomentSpec::plain({1})) == 1);
    CHECK(exhaustive_trace_moment(s, 4, MomentSpec::plain({1, 1})) == 2);
    CHECK(exhaustive_trace_moment(s, 7, MomentSpec::plain({1, 1, 1})) == 5);
    for (int n = 1; n <= 4; ++n)
        CHECK(exhaustive_trace_moment(h, n, MomentSpec::plain({1})) == 0);
    CHECK(exhaustive_trace_moment(h, 3, MomentSpec::plain({1, 1})) == 1);
    const Sampler h3 = Sampler::parse("Hs(3)");
    CHECK(exhaustive_word_moment(h3, 3, {parse_colors("1*")}) == 1);
    CHECK(exhaustive_word_moment(h3, 3, {parse_colors("111")}) == 1); // only fixed points survive the phase average
    CHECK_THROWS_AS(exhaustive_trace_moment(Sampler::parse("O"), 3, MomentSpec::plain({1})), Error);
}

TEST_CASE("statistics")
{
    const auto o = empirical_trace_statistics(Sampler::parse("O"), 20, {1, 2}, 20000, 7);
    CHECK(std::abs(o.at("mean[1]").mean) <= 5 * o.at("mean[1]").std_error);
    CHECK(std::abs(o.at("cov[1,1]").mean - 1.0) <= 5 * o.at("cov[1,1]").std_error);
    const auto s = empirical_cycle_statistics(GroupKind::S, 50, 2, 20000, 8);
    CHECK(std::abs(s.at("mean[C2]").mean - 0.5) <= 5 * s.at("mean[C2]").std_error);
    CHECK(std::abs(s.at("k3[C1,C1,C1]").mean - 1.0) <= 5 * s.at("k3[C1,C1,C1]").std_error);
    const auto h = empirical_cycle_statistics(GroupKind::H, 50, 1, 20000, 9);
    CHECK(std::abs(h.at("mean[Z1-]").mean + 0.5) <= 5 * h.at("mean[Z1-]").std_error);
}
