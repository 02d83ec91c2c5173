#include "wgcalc/weingarten.hpp"

#include "wgcalc/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace wgc {

namespace {

constexpr int kMaxTableDim = 2500;

using TableKey = std::tuple<int, int, int, int, std::vector<std::uint8_t>>;

std::mutex g_table_mutex;
std::map<TableKey, std::shared_ptr<const WeingartenTable>> g_tables;

// Fraction-free Gauss-Jordan on [G | I]. A Gram matrix is positive semidefinite,
// so a zero leading minor means G is singular and no row exchange is attempted.
// Returns false on a zero pivot; otherwise adj holds det * G^-1 and det = det G.
bool bareiss_inverse(std::vector<Integer> left, int dim, std::vector<Integer>& adj, Integer& det)
{
    const std::size_t N = static_cast<std::size_t>(dim);
    adj.assign(N * N, Integer(0));
    auto L = [&](std::size_t i, std::size_t j) -> Integer& { return left[i * N + j]; };
    auto R = [&](std::size_t i, std::size_t j) -> Integer& { return adj[i * N + j]; };

    Integer prev = 1;
    mpz_class tmp;
    for (std::size_t c = 0; c < N; ++c) {
        if (sgn(L(c, c)) == 0)
            return false;
        // Row c still carries its implicit identity entry, scaled to the previous pivot.
        R(c, c) = prev;
        const Integer pivot = L(c, c);
        for (std::size_t i = 0; i < N; ++i) {
            if (i == c)
                continue;
            const Integer a = L(i, c);
            for (std::size_t j = c + 1; j < N; ++j) {
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), L(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), a.get_mpz_t(), L(c, j).get_mpz_t());
                mpz_divexact(L(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            for (std::size_t j = 0; j <= c; ++j) {
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), R(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), a.get_mpz_t(), R(c, j).get_mpz_t());
                mpz_divexact(R(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            L(i, c) = 0;
        }
        prev = pivot;
    }
    det = N == 0 ? Integer(1) : prev;
    return true;
}

Integer power(int n, int e)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e));
    return out;
}

// Sum over basis pairs of adj(p,q) n^{|p v gamma(q)|}, divided by det.
Rational gamma_double_sum(const WeingartenTable& table, const Permutation& gamma)
{
    const auto basis = table.basis();
    const int dim = table.dim();
    std::vector<Partition> moved;
    moved.reserve(basis.size());
    for (const auto& q : basis)
        moved.push_back(apply_perm(gamma, q));
    std::vector<Integer> by_exponent(static_cast<std::size_t>(table.k() + 1), Integer(0));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const Integer& w = table.adjugate(a, b);
            if (sgn(w) != 0)
                by_exponent[join(basis[a], moved[b]).block_count()] += w;
        }
    Integer total = 0;
    for (std::size_t e = 0; e < by_exponent.size(); ++e)
        if (sgn(by_exponent[e]) != 0)
            total += by_exponent[e] * power(table.n(), static_cast<int>(e));
    Rational out(total, table.determinant());
    out.canonicalize();
    return out;
}

} // namespace

int MomentSpec::total() const
{
    return std::accumulate(lengths.begin(), lengths.end(), 0);
}

void MomentSpec::validate() const
{
    if (lengths.empty())
        fail(ErrorKind::invalid_argument, "moment spec needs at least one trace");
    for (int l : lengths)
        if (l < 1)
            fail(ErrorKind::invalid_argument, "trace powers must be positive");
    if (!stars.empty() && stars.size() != lengths.size())
        fail(ErrorKind::size_mismatch, "star pattern length " + std::to_string(stars.size()) +
                                           " differs from number of traces " + std::to_string(lengths.size()));
}

TracePermutation TracePermutation::make(const MomentSpec& spec)
{
    for (int l : spec.lengths)
        if (l < 1)
            fail(ErrorKind::invalid_argument, "cycle lengths must be positive");
    if (!spec.stars.empty() && spec.stars.size() != spec.lengths.size())
        fail(ErrorKind::size_mismatch, "star pattern and cycle lengths differ in size");
    TracePermutation out;
    out.lengths = spec.lengths;
    out.stars = spec.stars.empty() ? ColorString(spec.lengths.size(), Color::one) : spec.stars;
    std::vector<int> images;
    int start = 0;
    for (std::size_t c = 0; c < spec.lengths.size(); ++c) {
        const int len = spec.lengths[c];
        for (int t = 0; t < len; ++t) {
            const int step = out.stars[c] == Color::one ? 1 : len - 1;
            images.push_back(start + (t + step) % len);
        }
        start += len;
    }
    out.perm = Permutation(std::move(images));
    out.cycles = cycle_partition(spec.lengths);
    return out;
}

WeingartenTable::WeingartenTable(Category cat, int k, int n, ColorString eps)
    : cat_(cat), k_(k), n_(n), eps_(std::move(eps))
{
    if (n < 1)
        fail(ErrorKind::invalid_argument, "n must be at least 1");
    basis_ = enumerate_category(cat_, k_, eps_);
    const int dim = this->dim();
    if (dim > kMaxTableDim)
        fail(ErrorKind::limit_exceeded, "Weingarten table of dimension " + std::to_string(dim) +
                                            " exceeds the limit " + std::to_string(kMaxTableDim));
    const auto& basis = *basis_;
    gram_.resize(static_cast<std::size_t>(dim) * dim);
    std::vector<Integer> powers;
    for (int e = 0; e <= k_; ++e)
        powers.push_back(power(n_, e));
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            const Integer& v = powers[join(basis[a], basis[b]).block_count()];
            gram_[index(a, b)] = v;
            gram_[index(b, a)] = v;
        }
    if (!bareiss_inverse(gram_, dim, adj_, det_))
        fail(ErrorKind::singular_gram, "Gram matrix of " + cat_.name() + " is singular at k=" + std::to_string(k_) +
                                           ", n=" + std::to_string(n_));
}

Rational WeingartenTable::wg(int a, int b) const
{
    Rational q(adj_[index(a, b)], det_);
    q.canonicalize();
    return q;
}

bool WeingartenTable::verify_inverse() const
{
    const int dim = this->dim();
    Integer acc;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            acc = 0;
            for (int c = 0; c < dim; ++c)
                mpz_addmul(acc.get_mpz_t(), adj_[index(a, c)].get_mpz_t(), gram_[index(c, b)].get_mpz_t());
            if (acc != (a == b ? det_ : Integer(0)))
                return false;
        }
    return true;
}

std::shared_ptr<const WeingartenTable> build_table(const Category& cat, int k, int n, std::span<const Color> eps)
{
    check_colors(cat, k, eps);
    TableKey key{static_cast<int>(cat.kind), cat.s, k, n, {}};
    for (Color c : eps)
        std::get<4>(key).push_back(static_cast<std::uint8_t>(c));
    {
        std::lock_guard lock(g_table_mutex);
        if (auto it = g_tables.find(key); it != g_tables.end())
            return it->second;
    }
    auto table = std::make_shared<const WeingartenTable>(cat, k, n, ColorString(eps.begin(), eps.end()));
    std::lock_guard lock(g_table_mutex);
    return g_tables.emplace(std::move(key), std::move(table)).first->second;
}

Rational haar_integral(const WeingartenTable& table, std::span<const int> i, std::span<const int> j)
{
    const int k = table.k();
    if (static_cast<int>(i.size()) != k || static_cast<int>(j.size()) != k)
        fail(ErrorKind::size_mismatch, "index sequences must have length " + std::to_string(k));
    for (auto seq : {i, j})
        for (int x : seq)
            if (x < 1 || x > table.n())
                fail(ErrorKind::invalid_argument, "index " + std::to_string(x) + " outside 1.." +
                                                      std::to_string(table.n()));
    const Partition ki = kernel(i);
    const Partition kj = kernel(j);
    const auto basis = table.basis();
    std::vector<int> rows, cols;
    for (int a = 0; a < table.dim(); ++a) {
        if (basis[a].refines(ki))
            rows.push_back(a);
        if (basis[a].refines(kj))
            cols.push_back(a);
    }
    Integer total = 0;
    for (int a : rows)
        for (int b : cols)
            total += table.adjugate(a, b);
    Rational out(total, table.determinant());
    out.canonicalize();
    return out;
}

Rational trace_moment_exact(const Category& cat, int n, const MomentSpec& spec)
{
    spec.validate();
    if (cat.needs_colors())
        fail(ErrorKind::unsupported_category,
             cat.name() + " moments need color words; use the unitary moment for U-pairs");
    const auto gamma = TracePermutation::make(spec);
    const auto table = build_table(cat, spec.total(), n);
    if (table->dim() == 0)
        return Rational(0);
    return gamma_double_sum(*table, gamma.perm);
}

Rational colored_trace_moment_exact(const Category& cat, int n, const std::vector<ColorString>& words)
{
    if (!cat.needs_colors())
        fail(ErrorKind::color_string, cat.name() + " does not take color words");
    MomentSpec spec;
    ColorString eps;
    for (const auto& w : words) {
        if (w.empty())
            fail(ErrorKind::color_string, "empty word in unitary moment");
        spec.lengths.push_back(static_cast<int>(w.size()));
        eps.insert(eps.end(), w.begin(), w.end());
    }
    spec.validate();
    const auto gamma = TracePermutation::make(spec);
    const auto table = build_table(cat, spec.total(), n, eps);
    if (table->dim() == 0)
        return Rational(0);
    return gamma_double_sum(*table, gamma.perm);
}

Rational unitary_trace_moment_exact(int n, const std::vector<ColorString>& words)
{
    return colored_trace_moment_exact(Category::of(Kind::U_pairs), n, words);
}

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    Rational q;
    if (q.set_str(std::string(text), 10) != 0 || sgn(q.get_den()) == 0)
        fail(ErrorKind::parse, "bad rational '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

} // namespace wgc
