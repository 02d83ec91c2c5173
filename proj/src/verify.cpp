#include "wgcalc/verify.hpp"

#include "wgcalc/asymptotics.hpp"
#include "wgcalc/error.hpp"
#include "wgcalc/laws.hpp"
#include "wgcalc/montecarlo.hpp"
#include "wgcalc/weingarten.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

namespace wgc {

namespace {

constexpr double kBand = 5.0; // Monte Carlo acceptance band in standard errors

const Kind kSupported[] = {Kind::O, Kind::S, Kind::H, Kind::B, Kind::O_plus, Kind::S_plus, Kind::H_plus, Kind::B_plus};
const Kind kClassical[] = {Kind::O, Kind::S, Kind::H, Kind::B};
const Kind kFree[] = {Kind::O_plus, Kind::S_plus, Kind::H_plus, Kind::B_plus};

std::vector<std::vector<int>> compositions(int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= left; ++part) {
            cur.push_back(part);
            rec(left - part);
            cur.pop_back();
        }
    };
    rec(total);
    return out;
}

// All r-tuples with entries in 1..kmax.
std::vector<std::vector<int>> tuples(int r, int kmax)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 1);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < r && cur[i] == kmax)
            cur[i++] = 1;
        if (i == r)
            break;
        ++cur[i];
    }
    return out;
}

std::vector<ColorString> star_patterns(int r, bool with_stars)
{
    std::vector<ColorString> out;
    if (!with_stars) {
        out.emplace_back(static_cast<std::size_t>(r), Color::one);
        return out;
    }
    for (int mask = 0; mask < (1 << r); ++mask) {
        ColorString e;
        for (int i = 0; i < r; ++i)
            e.push_back((mask >> i) & 1 ? Color::star : Color::one);
        out.push_back(e);
    }
    return out;
}

std::string spec_text(const MomentSpec& spec)
{
    std::string out = "(";
    for (int i = 0; i < spec.cycles(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(spec.lengths[i]);
        if (spec.star(i) == Color::star)
            out += "*";
    }
    return out + ")";
}

std::string words_text(const std::vector<ColorString>& words)
{
    std::string out = "(";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i)
            out += ",";
        out += format_colors(words[i]);
    }
    return out + ")";
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    void check(std::string name, std::string expected, std::string actual, bool passed)
    {
        report_.checks.push_back({std::move(name), std::move(expected), std::move(actual), passed});
    }

    void equal(std::string name, const Rational& expected, const Rational& actual)
    {
        check(std::move(name), to_string(expected), to_string(actual), expected == actual);
    }

    void within(std::string name, double expected, const Estimate& e)
    {
        const bool ok = std::abs(e.mean - expected) <= kBand * e.std_error;
        check(std::move(name), fmt(expected),
              fmt(e.mean) + " +- " + fmt(e.std_error), ok);
    }

private:
    SuiteReport& report_;
};

std::uint64_t count_invariant(const Category& cat, const MomentSpec& spec, bool connected)
{
    std::uint64_t count = 0;
    for_each_invariant_partition(TracePermutation::make(spec), connected, [&](const Partition& p) {
        if (contains(cat, p))
            ++count;
    });
    return count;
}

MomentSpec sub_spec(const MomentSpec& spec, const std::vector<int>& idx)
{
    MomentSpec out;
    for (int i : idx) {
        out.lengths.push_back(spec.lengths[i]);
        out.stars.push_back(spec.star(i));
    }
    return out;
}

void classical_exactness(Recorder& rec, const SuiteLimits& limits)
{
    const int kmax = limits.kmax > 0 ? limits.kmax : 6;
    for (Kind kind : kClassical) {
        const Category cat = Category::of(kind);
        for (int k = 1; k <= kmax; ++k)
            for (const auto& lengths : compositions(k)) {
                const MomentSpec spec = MomentSpec::plain(lengths);
                const Rational count(static_cast<unsigned long>(asymptotic_moment_count(cat, spec)));
                std::string values;
                bool ok = true;
                for (int n = k; n <= k + 3; ++n) {
                    const Rational v = trace_moment_exact(cat, n, spec);
                    values += (values.empty() ? "" : " ") + to_string(v);
                    ok = ok && v == count;
                }
                rec.check(cat.name() + " " + spec_text(spec) + " n=" + std::to_string(k) + ".." +
                              std::to_string(k + 3),
                          to_string(count), values, ok);
            }
    }
}

void brute_force(Recorder& rec, const SuiteLimits& limits)
{
    const int kmax_s = limits.kmax > 0 ? limits.kmax : 5;
    const int kmax_h = std::min(kmax_s, 4);
    struct Case {
        Kind kind;
        Sampler sampler;
        int kmax;
        int nmax;
    };
    const Case cases[] = {{Kind::S, Sampler::parse("S"), kmax_s, 6}, {Kind::H, Sampler::parse("H"), kmax_h, 4}};
    for (const auto& c : cases) {
        const Category cat = Category::of(c.kind);
        for (int k = 1; k <= c.kmax; ++k)
            for (const auto& lengths : compositions(k))
                for (int n = k; n <= c.nmax; ++n) {
                    const MomentSpec spec = MomentSpec::plain(lengths);
                    rec.equal(cat.name() + " " + spec_text(spec) + " n=" + std::to_string(n),
                              exhaustive_trace_moment(c.sampler, n, spec), trace_moment_exact(cat, n, spec));
                }
    }
}

void cumulant_identity(Recorder& rec, const SuiteLimits& limits)
{
    const int kmax = limits.kmax > 0 ? limits.kmax : 4;
    for (Kind kind : kSupported) {
        const Category cat = Category::of(kind);
        for (int r = 1; r <= 3; ++r)
            for (const auto& lengths : tuples(r, kmax))
                for (const auto& stars : star_patterns(r, cat.is_free())) {
                    const MomentSpec spec{lengths, stars};
                    MomentOracle moments = [&](const std::vector<int>& idx) {
                        if (idx.empty())
                            return Rational(1);
                        return Rational(static_cast<unsigned long>(asymptotic_moment_count(cat, sub_spec(spec, idx))));
                    };
                    const Rational inverted = cat.is_free() ? cumulants_from_moments_free(moments, r)
                                                            : cumulants_from_moments_classical(moments, r);
                    rec.equal(cat.name() + " " + spec_text(spec), inverted,
                              Rational(static_cast<unsigned long>(asymptotic_cumulant_count(cat, spec))));
                }
    }
}

void laws(Recorder& rec, const SuiteLimits& limits)
{
    const int kmax = limits.kmax > 0 ? limits.kmax : 6;
    for (Kind kind : kSupported) {
        const Category cat = Category::of(kind);
        for (int r = 1; r <= 4; ++r)
            for (const auto& lengths : tuples(r, kmax))
                for (const auto& stars : star_patterns(r, cat.is_free())) {
                    const MomentSpec spec{lengths, stars};
                    rec.equal(cat.name() + " closed form " + spec_text(spec),
                              Rational(static_cast<long>(closed_form_cumulant(cat, spec))),
                              Rational(static_cast<unsigned long>(asymptotic_cumulant_count(cat, spec))));
                }
    }
    // Limit laws of single traces.
    for (Kind kind : {Kind::O, Kind::B, Kind::O_plus, Kind::B_plus, Kind::S, Kind::H}) {
        const Category cat = Category::of(kind);
        for (int k = 1; k <= kmax; ++k) {
            const LawDescriptor law = trace_law(cat, k, 4);
            const auto kappa = law_cumulants(law, law.family == LawFamily::circular ? 2 : 4);
            const std::string K = std::to_string(k);
            for (std::size_t p = 1; p <= kappa.size(); ++p) {
                MomentSpec spec = MomentSpec::plain(std::vector<int>(p, k));
                if (law.family == LawFamily::circular && p == 2)
                    spec.stars = {Color::one, Color::star};
                rec.equal(cat.name() + " u_" + K + " kappa" + std::to_string(p) + " vs " + law.name(), kappa[p - 1],
                          Rational(static_cast<unsigned long>(asymptotic_cumulant_count(cat, spec))));
            }
            if (law.family == LawFamily::circular)
                rec.equal(cat.name() + " kappa2(u_" + K + ",u_" + K + ")", 0,
                          Rational(static_cast<unsigned long>(
                              asymptotic_cumulant_count(cat, MomentSpec{{k, k}, {Color::one, Color::one}}))));
        }
    }
    for (Kind kind : {Kind::S, Kind::H, Kind::S_plus, Kind::H_plus}) {
        const auto report = cycle_decomposition_check(kind, kmax);
        rec.check(Category::of(kind).name() + " cycle decomposition (" + std::to_string(report.checks) + " specs)",
                  "0 mismatches", std::to_string(report.mismatches.size()) + " mismatches" +
                                      (report.ok() ? "" : ": " + report.mismatches.front()),
                  report.ok());
    }
}

void free_convergence(Recorder& rec, const SuiteLimits& limits)
{
    const int kmax = limits.kmax > 0 ? limits.kmax : 4;
    for (Kind kind : kFree) {
        const Category cat = Category::of(kind);
        for (int k = 1; k <= kmax; ++k)
            for (const auto& lengths : compositions(k))
                for (const auto& stars : star_patterns(static_cast<int>(lengths.size()), true)) {
                    const MomentSpec spec{lengths, stars};
                    const Rational count(static_cast<unsigned long>(asymptotic_moment_count(cat, spec)));
                    for (int m : {8, 16, 32}) {
                        Rational dev_m = abs(trace_moment_exact(cat, m, spec) - count);
                        if (sgn(dev_m) == 0)
                            continue;
                        Rational dev_2m = abs(trace_moment_exact(cat, 2 * m, spec) - count);
                        rec.check(cat.name() + " " + spec_text(spec) + " m=" + std::to_string(m),
                                  "dev(2m) <= 0.6 dev(m) = " + to_string(Rational(dev_m * Rational(3, 5))),
                                  "dev(2m) = " + to_string(dev_2m), 5 * dev_2m <= 3 * dev_m);
                    }
                }
    }
}

void montecarlo(Recorder& rec, const SuiteLimits& limits)
{
    const std::int64_t trials = limits.trials > 0 ? limits.trials : 100000;
    const auto o = empirical_trace_statistics(Sampler::parse("O"), 50, {1, 2}, trials, limits.seed);
    rec.within("O n=50 mean Tr(u)", 0.0, o.at("mean[1]"));
    rec.within("O n=50 mean Tr(u^2)", 1.0, o.at("mean[2]"));
    rec.within("O n=50 var Tr(u)", 1.0, o.at("cov[1,1]"));
    rec.within("O n=50 var Tr(u^2)", 2.0, o.at("cov[2,2]"));

    const auto s = empirical_cycle_statistics(GroupKind::S, 100, 3, trials, limits.seed + 1);
    for (int l = 1; l <= 3; ++l)
        rec.within("S n=100 mean C" + std::to_string(l), 1.0 / l, s.at("mean[C" + std::to_string(l) + "]"));
    for (const char* id : {"cov[C1,C2]", "cov[C1,C3]", "cov[C2,C3]"})
        rec.within(std::string("S n=100 ") + id, 0.0, s.at(id));

    const auto h = empirical_cycle_statistics(GroupKind::H, 100, 3, trials, limits.seed + 2);
    for (int l = 1; l <= 3; ++l) {
        const std::string L = std::to_string(l);
        rec.within("H n=100 mean Z" + L + "+", 1.0 / (2 * l), h.at("mean[Z" + L + "+]"));
        rec.within("H n=100 mean Z" + L + "-", -1.0 / (2 * l), h.at("mean[Z" + L + "-]"));
    }
}

void z_variables(Recorder& rec, const SuiteLimits& limits)
{
    const int lmax = limits.kmax > 0 ? limits.kmax : 3;
    for (int l = 1; l <= lmax; ++l)
        for (int r = 1; r <= 3; ++r)
            for (const auto& es : tuples(r, 3)) {
                std::vector<Partition> sigmas;
                std::vector<int> ks;
                int sum = 0;
                std::string name = "l=" + std::to_string(l) + " e=(";
                for (std::size_t i = 0; i < es.size(); ++i) {
                    ks.push_back(es[i] * l);
                    sigmas.push_back(cyclic_partition(l, es[i] * l));
                    sum += es[i];
                    name += (i ? "," : "") + std::to_string(es[i]);
                }
                long expected = 0;
                if (sum % 2 == 0) {
                    expected = 1;
                    for (int i = 1; i < r; ++i)
                        expected *= l;
                }
                rec.equal(name + ")", expected, Rational(static_cast<unsigned long>(z_cumulant_count(sigmas, ks))));
            }
}

void half_liberated(Recorder& rec, const SuiteLimits& limits)
{
    const int kmax = limits.kmax > 0 ? limits.kmax : 3;
    const std::int64_t trials = limits.trials > 0 ? limits.trials : 100000;
    const Category upairs = Category::of(Kind::U_pairs);
    const Sampler u = Sampler::parse("U");

    // (a) exact U_n moments against sampling.
    const int n = 4;
    std::vector<std::vector<ColorString>> cases;
    for (int k = 1; k <= kmax; ++k) {
        const ColorString w = alternating_word(k);
        cases.push_back({w});
        cases.push_back({w, conjugate(w)});
        cases.push_back({w, w});
    }
    std::uint64_t seed = limits.seed;
    for (const auto& words : cases) {
        const Rational exact = unitary_trace_moment_exact(n, words);
        const auto batch = empirical_word_moments(u, n, words, trials, seed++);
        rec.within("U n=4 " + words_text(words) + " re", exact.get_d(), batch.at("moment.re"));
        rec.within("U n=4 " + words_text(words) + " im", 0.0, batch.at("moment.im"));
    }

    // (b) asymptotic U-pairs counts.
    auto count = [&](const std::vector<ColorString>& words) {
        return Rational(static_cast<unsigned long>(colored_moment_count(upairs, words)));
    };
    const int kb = std::max(kmax, 6);
    for (int k = 1; k <= kb; ++k) {
        const ColorString w = alternating_word(k);
        const ColorString wc = conjugate(w);
        const std::string K = std::to_string(k);
        const Rational mean = count({w});
        if (k % 2 == 0) {
            rec.equal("v_" + K + " mean", (k / 2) % 2 == 1 ? 1 : 0, mean);
            rec.equal("v_" + K + " variance", k / 2, count({w, w}) - mean * mean);
        } else {
            rec.equal("v_" + K + " mean", 0, mean);
            rec.equal("v_" + K + " E|v|^2", 1, count({w, wc}));
            rec.equal("v_" + K + " E v^2", 0, count({w, w}));
            for (int p = 1; p <= 3 && p * 2 * k <= 18; ++p) {
                std::vector<ColorString> words;
                for (int i = 0; i < p; ++i) {
                    words.push_back(w);
                    words.push_back(wc);
                }
                Rational factorial = 1;
                for (int i = 2; i <= p; ++i)
                    factorial *= i;
                rec.equal("v_" + K + " E|v|^" + std::to_string(2 * p) + " (symmetrized Rayleigh moment)",
                          law_moments(LawDescriptor::symmetrized_rayleigh(1), 2 * p)[2 * p - 1], count(words));
            }
        }
        for (int j = 1; j < k && j + k <= kb; ++j) {
            const ColorString v = alternating_word(j);
            rec.equal("E v_" + std::to_string(j) + " v_" + K + " factorizes", count({v}) * mean, count({v, w}));
        }
    }

    // (c) P^s(eps) against the H and H* categories.
    const Category h = Category::of(Kind::H);
    const Category hstar = Category::of(Kind::H_star);
    for (int r = 1; r <= 3; ++r)
        for (const auto& ks : tuples(r, 4)) {
            std::vector<ColorString> words;
            bool all_even = true;
            for (int k : ks) {
                words.push_back(alternating_word(k));
                all_even = all_even && k % 2 == 0;
            }
            const MomentSpec spec = MomentSpec::plain(ks);
            const Rational s2(static_cast<unsigned long>(hs_cumulant_count(2, words)));
            rec.equal("s=2 " + words_text(words) + " vs H count", Rational(static_cast<unsigned long>(
                                                                    asymptotic_cumulant_count(h, spec))), s2);
            rec.equal("s=2 " + words_text(words) + " vs H closed form",
                      Rational(static_cast<long>(closed_form_cumulant(h, spec))), s2);
            if (all_even)
                rec.equal("s=inf " + words_text(words) + " vs H* count",
                          Rational(static_cast<unsigned long>(count_invariant(hstar, spec, true))),
                          Rational(static_cast<unsigned long>(hs_cumulant_count(Category::infinity, words))));
        }

    // (d) compound Poisson decomposition of v_k.
    for (int s : {2, 3, Category::infinity}) {
        const std::string S = s == Category::infinity ? "inf" : std::to_string(s);
        for (int r = 1; r <= 3; ++r)
            for (const auto& ks : tuples(r, 4))
                for (const auto& conj : star_patterns(r, true)) {
                    std::vector<ColorString> words;
                    for (int i = 0; i < r; ++i) {
                        const ColorString w = alternating_word(ks[i]);
                        words.push_back(conj[i] == Color::one ? w : conjugate(w));
                    }
                    rec.equal("Cp s=" + S + " " + words_text(words), cp_decomposition_cumulant(s, words),
                              Rational(static_cast<unsigned long>(hs_cumulant_count(s, words))));
                }
    }
}

using SuiteFn = void (*)(Recorder&, const SuiteLimits&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"classical-exactness", classical_exactness},
        {"brute-force", brute_force},
        {"cumulant-identity", cumulant_identity},
        {"laws", laws},
        {"free-convergence", free_convergence},
        {"montecarlo", montecarlo},
        {"z-variables", z_variables},
        {"half-liberated", half_liberated},
    };
    return suites;
}

} // namespace

bool SuiteReport::passed() const
{
    return failures() == 0 && !checks.empty();
}

int SuiteReport::failures() const
{
    int f = 0;
    for (const auto& c : checks)
        f += c.passed ? 0 : 1;
    return f;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteLimits& limits)
{
    for (const auto& [suite, fn] : registry()) {
        if (suite != name)
            continue;
        SuiteReport report;
        report.suite = suite;
        Recorder rec(report);
        const auto start = std::chrono::steady_clock::now();
        fn(rec, limits);
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    fail(ErrorKind::unknown_suite, "unknown suite '" + std::string(name) + "'");
}

} // namespace wgc
