#include "wgcalc/montecarlo.hpp"

#include "wgcalc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace wgc {

namespace {

using Rng = std::mt19937_64;
using cd = std::complex<double>;

constexpr std::uint64_t kMaxExhaustive = 5'000'000;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// u e_j = omega^{phase[j]} e_{perm[j]}, omega = exp(2 pi i / s).
struct Monomial {
    std::vector<int> perm;
    std::vector<int> phase;
};

Monomial sample_monomial(int n, int s, Rng& rng)
{
    Monomial m;
    m.perm.resize(static_cast<std::size_t>(n));
    std::iota(m.perm.begin(), m.perm.end(), 0);
    std::shuffle(m.perm.begin(), m.perm.end(), rng);
    m.phase.assign(static_cast<std::size_t>(n), 0);
    if (s > 1) {
        std::uniform_int_distribution<int> root(0, s - 1);
        for (auto& p : m.phase)
            p = root(rng);
    }
    return m;
}

int mod(long a, int m)
{
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Tr(v^{e_1} ... v^{e_k}) as coefficients of omega^0..omega^{s-1}.
std::vector<long> word_trace(const Monomial& m, const ColorString& word, int s)
{
    std::vector<long> out(static_cast<std::size_t>(s), 0);
    const int n = static_cast<int>(m.perm.size());
    for (int j = 0; j < n; ++j) {
        int at = j;
        long phase = 0;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            phase += *it == Color::one ? m.phase[at] : -m.phase[at];
            at = m.perm[at];
        }
        if (at == j)
            ++out[mod(phase, s)];
    }
    return out;
}

std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b)
{
    const int s = static_cast<int>(a.size());
    std::vector<long> out(a.size(), 0);
    for (int i = 0; i < s; ++i)
        if (a[i])
            for (int j = 0; j < s; ++j)
                out[(i + j) % s] += a[i] * b[j];
    return out;
}

cd evaluate(const std::vector<long>& coeffs)
{
    const int s = static_cast<int>(coeffs.size());
    cd out = 0;
    for (int j = 0; j < s; ++j)
        if (coeffs[j])
            out += static_cast<double>(coeffs[j]) * std::polar(1.0, 2 * std::numbers::pi * j / s);
    return out;
}

Eigen::MatrixXd haar_orthogonal(int n, Rng& rng)
{
    std::normal_distribution<double> normal;
    Eigen::MatrixXd g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            g(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0)
            q.col(j) *= -1.0;
    return q;
}

Eigen::MatrixXcd haar_unitary(int n, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cd(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const double a = std::abs(r(j, j));
        if (a > 0)
            q.col(j) *= r(j, j) / a;
    }
    return q;
}

// H (1 + g) H with H the Householder reflection taking e_1 to (1, ..., 1)/sqrt(n).
Eigen::MatrixXd haar_bistochastic(int n, Rng& rng)
{
    if (n == 1)
        return Eigen::MatrixXd::Ones(1, 1);
    Eigen::VectorXd w = -Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    w(0) += 1.0;
    const Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - 2.0 * w * w.transpose() / w.squaredNorm();
    Eigen::MatrixXd mid = Eigen::MatrixXd::Zero(n, n);
    mid(0, 0) = 1.0;
    mid.bottomRightCorner(n - 1, n - 1) = haar_orthogonal(n - 1, rng);
    return h * mid * h;
}

Eigen::MatrixXcd dense_sample(const Sampler& group, int n, Rng& rng)
{
    switch (group.kind) {
    case GroupKind::O: return haar_orthogonal(n, rng).cast<cd>();
    case GroupKind::B: return haar_bistochastic(n, rng).cast<cd>();
    case GroupKind::U: return haar_unitary(n, rng);
    default: break;
    }
    fail(ErrorKind::invalid_argument, group.name() + " is not a dense sampler");
}

int roots_of(const Sampler& group)
{
    switch (group.kind) {
    case GroupKind::S: return 1;
    case GroupKind::H: return 2;
    case GroupKind::Hs: return group.s;
    default: return 0;
    }
}

double pairwise_sum(const double* x, std::size_t len)
{
    if (len <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < len; ++i)
            s += x[i];
        return s;
    }
    const std::size_t half = len / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, len - half);
}

double mean_of(const std::vector<double>& x)
{
    return x.empty() ? 0.0 : pairwise_sum(x.data(), x.size()) / static_cast<double>(x.size());
}

Estimate estimate(std::string id, const std::vector<double>& x, double scale = 1.0)
{
    const double m = mean_of(x);
    std::vector<double> sq(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        sq[i] = (x[i] - m) * (x[i] - m);
    const double n = static_cast<double>(x.size());
    const double var = pairwise_sum(sq.data(), sq.size()) / (n - 1);
    return {std::move(id), scale * m, scale * std::sqrt(var / n)};
}

std::vector<ColorString> words_of(const MomentSpec& spec)
{
    std::vector<ColorString> words;
    for (int i = 0; i < spec.cycles(); ++i)
        words.emplace_back(static_cast<std::size_t>(spec.lengths[i]), spec.star(i));
    return words;
}

cd dense_word_trace(const Eigen::MatrixXcd& v, const ColorString& word)
{
    if (word.size() == 1)
        return word[0] == Color::one ? v.trace() : std::conj(v.trace());
    const Eigen::MatrixXcd vbar = v.conjugate();
    if (word.size() == 2) {
        const auto& a = word[0] == Color::one ? v : vbar;
        const auto& b = word[1] == Color::one ? v : vbar;
        return (a.array() * b.transpose().array()).sum();
    }
    Eigen::MatrixXcd acc = word[0] == Color::one ? v : vbar;
    for (std::size_t i = 1; i < word.size(); ++i)
        acc = acc * (word[i] == Color::one ? v : vbar);
    return acc.trace();
}

// Product of word traces for one sampled element.
cd sample_product(const Sampler& group, int n, const std::vector<ColorString>& words, Rng& rng)
{
    if (group.is_monomial()) {
        const int s = roots_of(group);
        const Monomial m = sample_monomial(n, s, rng);
        std::vector<long> acc(static_cast<std::size_t>(s), 0);
        acc[0] = 1;
        for (const auto& w : words)
            acc = multiply(acc, word_trace(m, w, s));
        return evaluate(acc);
    }
    const Eigen::MatrixXcd v = dense_sample(group, n, rng);
    cd acc = 1;
    for (const auto& w : words)
        acc *= dense_word_trace(v, w);
    return acc;
}

void check_run(int n, std::int64_t trials)
{
    if (n < 1)
        fail(ErrorKind::invalid_argument, "n must be at least 1");
    if (trials < 2)
        fail(ErrorKind::invalid_argument, "at least 2 trials are required");
}

SampleBatch batch_header(const Sampler& group, int n, std::int64_t trials, std::uint64_t seed)
{
    SampleBatch b;
    b.group = group.name();
    b.n = n;
    b.trials = trials;
    b.seed = seed;
    return b;
}

SampleBatch run_words(const Sampler& group, int n, const std::vector<ColorString>& words, std::int64_t trials,
                      std::uint64_t seed)
{
    check_run(n, trials);
    std::vector<double> re(static_cast<std::size_t>(trials)), im(static_cast<std::size_t>(trials));
    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        const cd value = sample_product(group, n, words, rng);
        re[t] = value.real();
        im[t] = value.imag();
    }
    SampleBatch b = batch_header(group, n, trials, seed);
    b.estimates.push_back(estimate("moment.re", re));
    if (group.is_complex())
        b.estimates.push_back(estimate("moment.im", im));
    return b;
}

// Centered-product estimates for covariances and third-order k-statistics.
void add_joint_statistics(SampleBatch& b, const std::vector<std::string>& names,
                          const std::vector<std::vector<double>>& values, int max_order)
{
    const std::size_t vars = names.size();
    const std::size_t N = values.empty() ? 0 : values[0].size();
    const double n = static_cast<double>(N);
    std::vector<std::vector<double>> centered(vars, std::vector<double>(N));
    for (std::size_t v = 0; v < vars; ++v) {
        const double m = mean_of(values[v]);
        b.estimates.push_back(estimate("mean[" + names[v] + "]", values[v]));
        for (std::size_t t = 0; t < N; ++t)
            centered[v][t] = values[v][t] - m;
    }
    std::vector<double> prod(N);
    for (std::size_t a = 0; a < vars; ++a)
        for (std::size_t c = a; c < vars; ++c) {
            for (std::size_t t = 0; t < N; ++t)
                prod[t] = centered[a][t] * centered[c][t];
            b.estimates.push_back(estimate("cov[" + names[a] + "," + names[c] + "]", prod, n / (n - 1)));
        }
    if (max_order < 3)
        return;
    for (std::size_t a = 0; a < vars; ++a)
        for (std::size_t c = a; c < vars; ++c)
            for (std::size_t d = c; d < vars; ++d) {
                for (std::size_t t = 0; t < N; ++t)
                    prod[t] = centered[a][t] * centered[c][t] * centered[d][t];
                b.estimates.push_back(estimate("k3[" + names[a] + "," + names[c] + "," + names[d] + "]", prod,
                                               n * n / ((n - 1) * (n - 2))));
            }
}

// Phi_s as integer coefficients, lowest degree first.
std::vector<long> cyclotomic(int s)
{
    std::vector<long> poly(static_cast<std::size_t>(s + 1), 0);
    poly[0] = -1;
    poly[s] = 1;
    for (int d = 1; d < s; ++d) {
        if (s % d != 0)
            continue;
        const std::vector<long> div = cyclotomic(d);
        std::vector<long> quot(poly.size() - div.size() + 1, 0);
        for (int i = static_cast<int>(poly.size()) - 1; i >= static_cast<int>(div.size()) - 1; --i) {
            const long c = poly[i];
            const int shift = i - static_cast<int>(div.size()) + 1;
            quot[shift] = c;
            for (std::size_t j = 0; j < div.size(); ++j)
                poly[shift + j] -= c * div[j];
        }
        poly = quot;
    }
    return poly;
}

// Reduces sum c_j omega^j modulo Phi_s; the value must be an integer.
Integer reduce_to_integer(std::vector<Integer> coeffs, int s)
{
    const std::vector<long> phi = cyclotomic(s);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= deg; --i) {
        const Integer c = coeffs[i];
        if (sgn(c) == 0)
            continue;
        for (int j = 0; j <= deg; ++j)
            coeffs[i - deg + j] -= c * phi[j];
    }
    for (int i = 1; i < std::min<int>(deg, static_cast<int>(coeffs.size())); ++i)
        if (sgn(coeffs[i]) != 0)
            fail(ErrorKind::invalid_argument, "exhaustive average is not rational");
    return coeffs[0];
}

Rational exhaustive_words(const Sampler& group, int n, const std::vector<ColorString>& words)
{
    if (!group.is_monomial())
        fail(ErrorKind::invalid_argument, "exhaustive mode needs a finite group (S, H or Hs)");
    if (n < 1)
        fail(ErrorKind::invalid_argument, "n must be at least 1");
    const int s = roots_of(group);
    std::uint64_t order = 1;
    for (int i = 2; i <= n; ++i)
        order *= static_cast<std::uint64_t>(i);
    for (int i = 0; i < n; ++i) {
        order *= static_cast<std::uint64_t>(s);
        if (order > kMaxExhaustive)
            break;
    }
    if (order > kMaxExhaustive)
        fail(ErrorKind::limit_exceeded, group.name() + " at n=" + std::to_string(n) +
                                            " is too large to enumerate (limit " +
                                            std::to_string(kMaxExhaustive) + " elements)");
    std::vector<Integer> total(static_cast<std::size_t>(s), Integer(0));
    Monomial m;
    m.perm.resize(static_cast<std::size_t>(n));
    std::iota(m.perm.begin(), m.perm.end(), 0);
    do {
        m.phase.assign(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<long> acc(static_cast<std::size_t>(s), 0);
            acc[0] = 1;
            for (const auto& w : words)
                acc = multiply(acc, word_trace(m, w, s));
            for (int j = 0; j < s; ++j)
                total[j] += acc[j];
            int i = 0;
            while (i < n && m.phase[i] == s - 1)
                m.phase[i++] = 0;
            if (i == n)
                break;
            ++m.phase[i];
        }
    } while (std::next_permutation(m.perm.begin(), m.perm.end()));
    Rational out(reduce_to_integer(std::move(total), s), Integer(static_cast<unsigned long>(order)));
    out.canonicalize();
    return out;
}

} // namespace

Sampler Sampler::parse(std::string_view name)
{
    if (name == "O")
        return {GroupKind::O, 2};
    if (name == "S")
        return {GroupKind::S, 1};
    if (name == "H")
        return {GroupKind::H, 2};
    if (name == "B")
        return {GroupKind::B, 2};
    if (name == "U")
        return {GroupKind::U, 2};
    if (name.size() > 4 && name.substr(0, 3) == "Hs(" && name.back() == ')') {
        const auto inner = name.substr(3, name.size() - 4);
        int s = 0;
        auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), s);
        if (ec != std::errc{} || ptr != inner.data() + inner.size() || s < 2)
            fail(ErrorKind::parse, "Hs(s) sampler needs an integer s >= 2");
        return {GroupKind::Hs, s};
    }
    fail(ErrorKind::parse, "unknown sampler '" + std::string(name) + "' (expected O, S, H, B, U or Hs(s))");
}

std::string Sampler::name() const
{
    switch (kind) {
    case GroupKind::O: return "O";
    case GroupKind::S: return "S";
    case GroupKind::H: return "H";
    case GroupKind::B: return "B";
    case GroupKind::U: return "U";
    case GroupKind::Hs: return "Hs(" + std::to_string(s) + ")";
    }
    return "?";
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    return splitmix64(splitmix64(seed) ^ (trial * 0xd1b54a32d192ed03ull));
}

SampledMatrix sample(const Sampler& group, int n, std::uint64_t seed)
{
    if (n < 1)
        fail(ErrorKind::invalid_argument, "n must be at least 1");
    Rng rng(trial_seed(seed, 0));
    SampledMatrix out;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(n) * n, cd(0));
    if (group.is_monomial()) {
        const int s = roots_of(group);
        const Monomial m = sample_monomial(n, s, rng);
        for (int j = 0; j < n; ++j)
            out.entries[static_cast<std::size_t>(m.perm[j]) * n + j] =
                s == 1 ? cd(1) : (s == 2 ? cd(m.phase[j] ? -1.0 : 1.0) : std::polar(1.0, 2 * std::numbers::pi * m.phase[j] / s));
        return out;
    }
    const Eigen::MatrixXcd v = dense_sample(group, n, rng);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.entries[static_cast<std::size_t>(i) * n + j] = v(i, j);
    return out;
}

const Estimate& SampleBatch::at(std::string_view id) const
{
    for (const auto& e : estimates)
        if (e.id == id)
            return e;
    fail(ErrorKind::invalid_argument, "no estimate named '" + std::string(id) + "'");
}

SampleBatch empirical_trace_moments(const Sampler& group, int n, const MomentSpec& spec, std::int64_t trials,
                                    std::uint64_t seed)
{
    spec.validate();
    return run_words(group, n, words_of(spec), trials, seed);
}

SampleBatch empirical_word_moments(const Sampler& group, int n, const std::vector<ColorString>& words,
                                   std::int64_t trials, std::uint64_t seed)
{
    if (!group.is_complex())
        fail(ErrorKind::invalid_argument, "word moments need a complex sampler (U or Hs)");
    if (words.empty() || std::any_of(words.begin(), words.end(), [](const auto& w) { return w.empty(); }))
        fail(ErrorKind::color_string, "words must be nonempty");
    return run_words(group, n, words, trials, seed);
}

SampleBatch empirical_trace_statistics(const Sampler& group, int n, const std::vector<int>& powers,
                                       std::int64_t trials, std::uint64_t seed)
{
    check_run(n, trials);
    if (powers.empty() || std::any_of(powers.begin(), powers.end(), [](int k) { return k < 1; }))
        fail(ErrorKind::invalid_argument, "powers must be positive");
    std::vector<std::vector<double>> values(powers.size(), std::vector<double>(static_cast<std::size_t>(trials)));
    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        if (group.is_monomial()) {
            const int s = roots_of(group);
            const Monomial m = sample_monomial(n, s, rng);
            for (std::size_t i = 0; i < powers.size(); ++i)
                values[i][t] = evaluate(word_trace(m, ColorString(static_cast<std::size_t>(powers[i]), Color::one), s)).real();
        } else {
            const Eigen::MatrixXcd v = dense_sample(group, n, rng);
            for (std::size_t i = 0; i < powers.size(); ++i)
                values[i][t] = dense_word_trace(v, ColorString(static_cast<std::size_t>(powers[i]), Color::one)).real();
        }
    }
    SampleBatch b = batch_header(group, n, trials, seed);
    std::vector<std::string> names;
    for (int k : powers)
        names.push_back(std::to_string(k));
    add_joint_statistics(b, names, values, 2);
    return b;
}

SampleBatch empirical_cycle_statistics(GroupKind group, int n, int l_max, std::int64_t trials, std::uint64_t seed)
{
    check_run(n, trials);
    if (group != GroupKind::S && group != GroupKind::H)
        fail(ErrorKind::invalid_argument, "cycle statistics are defined for S and H");
    if (l_max < 1 || l_max > n)
        fail(ErrorKind::invalid_argument, "l_max must lie in 1..n");
    const bool signed_cycles = group == GroupKind::H;
    std::vector<std::string> names;
    for (int l = 1; l <= l_max; ++l) {
        if (signed_cycles) {
            names.push_back("Z" + std::to_string(l) + "+");
            names.push_back("Z" + std::to_string(l) + "-");
        } else {
            names.push_back("C" + std::to_string(l));
        }
    }
    std::vector<std::vector<double>> values(names.size(), std::vector<double>(static_cast<std::size_t>(trials)));
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        const Monomial m = sample_monomial(n, signed_cycles ? 2 : 1, rng);
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            if (seen[j])
                continue;
            int len = 0;
            int sign_parity = 0;
            for (int at = j; !seen[at]; at = m.perm[at]) {
                seen[at] = 1;
                sign_parity ^= m.phase[at];
                ++len;
            }
            if (len > l_max)
                continue;
            if (!signed_cycles)
                values[len - 1][t] += 1.0;
            else if (sign_parity == 0)
                values[2 * (len - 1)][t] += 1.0;
            else
                values[2 * (len - 1) + 1][t] -= 1.0;
        }
    }
    SampleBatch b = batch_header(Sampler{group, signed_cycles ? 2 : 1}, n, trials, seed);
    add_joint_statistics(b, names, values, 3);
    return b;
}

Rational exhaustive_trace_moment(const Sampler& group, int n, const MomentSpec& spec)
{
    spec.validate();
    return exhaustive_words(group, n, words_of(spec));
}

Rational exhaustive_word_moment(const Sampler& group, int n, const std::vector<ColorString>& words)
{
    if (words.empty() || std::any_of(words.begin(), words.end(), [](const auto& w) { return w.empty(); }))
        fail(ErrorKind::color_string, "words must be nonempty");
    return exhaustive_words(group, n, words);
}

} // namespace wgc
