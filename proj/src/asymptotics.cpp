#include "wgcalc/asymptotics.hpp"

#include "wgcalc/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wgc {

namespace {

struct CycleInfo {
    int start;
    int length;
    int orientation; // +1 unstarred, -1 starred
};

std::vector<CycleInfo> cycle_info(const TracePermutation& gamma)
{
    std::vector<CycleInfo> out;
    int start = 0;
    for (std::size_t c = 0; c < gamma.lengths.size(); ++c) {
        out.push_back({start, gamma.lengths[c], gamma.stars[c] == Color::one ? 1 : -1});
        start += gamma.lengths[c];
    }
    return out;
}

int mod(int a, int m)
{
    int r = a % m;
    return r < 0 ? r + m : r;
}

// An invariant partition is fixed by a connection pattern pi on the cycles and, per
// block V of pi, a period l dividing every length in V and offsets c_i in Z_l (the
// first one 0). Its blocks are B_j = union over i in V of the tau_l-block c_i + s_i j.
class InvariantGenerator {
public:
    InvariantGenerator(const TracePermutation& gamma, const std::function<void(const Partition&)>& visit)
        : cycles_(cycle_info(gamma)), labels_(static_cast<std::size_t>(gamma.size()), 0), visit_(visit)
    {
    }

    void run(const Partition& pi)
    {
        blocks_ = pi.blocks();
        assign_block(0, 0);
    }

private:
    void assign_block(std::size_t b, int label_base)
    {
        if (b == blocks_.size()) {
            visit_(Partition::from_labels(labels_));
            return;
        }
        const auto& members = blocks_[b];
        int g = 0;
        for (int c : members)
            g = std::gcd(g, cycles_[c].length);
        for (int l = 1; l <= g; ++l) {
            if (g % l != 0)
                continue;
            offsets_.assign(members.size(), 0);
            assign_offsets(b, 1, l, label_base);
        }
    }

    void assign_offsets(std::size_t b, std::size_t m, int l, int label_base)
    {
        const auto& members = blocks_[b];
        if (m == members.size()) {
            for (std::size_t i = 0; i < members.size(); ++i) {
                const CycleInfo& cy = cycles_[members[i]];
                for (int t = 0; t < cy.length; ++t)
                    labels_[cy.start + t] = label_base + mod(cy.orientation * ((t % l) - offsets_[i]), l);
            }
            std::vector<int> saved = offsets_;
            assign_block(b + 1, label_base + l);
            offsets_ = std::move(saved);
            return;
        }
        for (int c = 0; c < l; ++c) {
            offsets_[m] = c;
            assign_offsets(b, m + 1, l, label_base);
        }
    }

    std::vector<CycleInfo> cycles_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> offsets_;
    const std::function<void(const Partition&)>& visit_;
};

std::uint64_t count_members(const Category& cat, const TracePermutation& gamma, bool connected,
                            std::span<const Color> eps)
{
    std::uint64_t count = 0;
    for_each_invariant_partition(gamma, connected, [&](const Partition& p) {
        if (contains(cat, p, eps))
            ++count;
    });
    return count;
}

void require_plain(const Category& cat)
{
    if (cat.needs_colors())
        fail(ErrorKind::color_string, cat.name() + " counts take one color word per trace");
}

MomentSpec spec_of_words(const std::vector<ColorString>& words, ColorString& concat)
{
    MomentSpec spec;
    for (const auto& w : words) {
        if (w.empty())
            fail(ErrorKind::color_string, "color words must be nonempty");
        spec.lengths.push_back(static_cast<int>(w.size()));
        concat.insert(concat.end(), w.begin(), w.end());
    }
    spec.validate();
    return spec;
}

// Cap on the total number of points handled by the invariant generator.
void check_size(int k)
{
    const int cap = std::max(enumeration_limits().pairings, 32);
    if (k > cap)
        fail(ErrorKind::limit_exceeded, "total trace degree " + std::to_string(k) + " exceeds " + std::to_string(cap));
}

bool all_equal(const std::vector<int>& v)
{
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

} // namespace

void for_each_invariant_partition(const TracePermutation& gamma, bool connected,
                                  const std::function<void(const Partition&)>& visit)
{
    const int r = static_cast<int>(gamma.lengths.size());
    InvariantGenerator gen(gamma, visit);
    if (connected) {
        gen.run(Partition::one_block(r));
        return;
    }
    for_each_partition(r, [&](const Partition& pi) { gen.run(pi); });
}

std::uint64_t asymptotic_moment_count(const Category& cat, const MomentSpec& spec)
{
    spec.validate();
    require_plain(cat);
    check_size(spec.total());
    return count_members(cat, TracePermutation::make(spec), false, {});
}

std::uint64_t asymptotic_cumulant_count(const Category& cat, const MomentSpec& spec)
{
    spec.validate();
    if (!supports_cumulant_count(cat))
        fail(ErrorKind::unsupported_category,
             cat.name() + ": partition sets are not closed under block deletion, so cumulants are not counts");
    check_size(spec.total());
    return count_members(cat, TracePermutation::make(spec), true, {});
}

std::uint64_t colored_moment_count(const Category& cat, const std::vector<ColorString>& words)
{
    if (!cat.needs_colors())
        fail(ErrorKind::color_string, cat.name() + " does not take color words");
    ColorString eps;
    const MomentSpec spec = spec_of_words(words, eps);
    check_size(spec.total());
    return count_members(cat, TracePermutation::make(spec), false, eps);
}

std::uint64_t colored_cumulant_count(const Category& cat, const std::vector<ColorString>& words)
{
    if (!cat.needs_colors())
        fail(ErrorKind::color_string, cat.name() + " does not take color words");
    ColorString eps;
    const MomentSpec spec = spec_of_words(words, eps);
    check_size(spec.total());
    return count_members(cat, TracePermutation::make(spec), true, eps);
}

std::uint64_t hs_cumulant_count(int s, const std::vector<ColorString>& words)
{
    return colored_cumulant_count(Category::hs_complex(s), words);
}

Rational cumulants_from_moments_classical(const MomentOracle& moments, int r)
{
    if (r < 1)
        fail(ErrorKind::invalid_argument, "cumulant order must be positive");
    std::map<std::vector<int>, Rational> memo;
    auto moment = [&](const std::vector<int>& idx) -> const Rational& {
        auto it = memo.find(idx);
        if (it == memo.end())
            it = memo.emplace(idx, moments(idx)).first;
        return it->second;
    };
    Rational total = 0;
    for_each_partition(r, [&](const Partition& sigma) {
        Rational term = static_cast<long>(mobius_to_top(sigma));
        for (const auto& block : sigma.blocks())
            term *= moment(block);
        total += term;
    });
    return total;
}

Rational cumulants_from_moments_free(const MomentOracle& moments, int r)
{
    if (r < 1)
        fail(ErrorKind::invalid_argument, "cumulant order must be positive");
    // Noncrossing partitions of each size, computed once.
    std::vector<std::vector<Partition>> nc(static_cast<std::size_t>(r + 1));
    for (int m = 1; m <= r; ++m)
        for_each_partition(m, [&](const Partition& p) {
            if (p.block_count() > 1 && is_noncrossing(p))
                nc[m].push_back(p);
        });
    std::map<std::vector<int>, Rational> kappa;
    std::function<Rational(const std::vector<int>&)> cumulant = [&](const std::vector<int>& idx) -> Rational {
        if (auto it = kappa.find(idx); it != kappa.end())
            return it->second;
        Rational value = moments(idx);
        for (const auto& pi : nc[idx.size()]) {
            Rational term = 1;
            for (const auto& block : pi.blocks()) {
                std::vector<int> sub;
                for (int x : block)
                    sub.push_back(idx[x]);
                term *= cumulant(sub);
            }
            value -= term;
        }
        kappa.emplace(idx, value);
        return value;
    };
    std::vector<int> all(static_cast<std::size_t>(r));
    std::iota(all.begin(), all.end(), 0);
    return cumulant(all);
}

std::int64_t closed_form_cumulant(const Category& cat, const MomentSpec& spec)
{
    spec.validate();
    const auto& k = spec.lengths;
    const int r = spec.cycles();
    const bool equal = all_equal(k);
    const bool opposite_stars = r == 2 && spec.star(0) != spec.star(1);
    const int total = spec.total();
    switch (cat.kind) {
    case Kind::O:
    case Kind::B: {
        const int shift = cat.kind == Kind::B ? 1 : 0;
        if (r == 1)
            return (k[0] % 2 == 0 ? 1 : 0) + shift;
        if (r == 2)
            return equal ? k[0] : 0;
        return 0;
    }
    case Kind::O_plus:
    case Kind::B_plus: {
        const int shift = cat.kind == Kind::B_plus ? 1 : 0;
        if (r == 1)
            return (k[0] == 2 ? 1 : 0) + shift;
        if (r == 2 && equal)
            return k[0] <= 2 || opposite_stars ? 1 : 0;
        return 0;
    }
    case Kind::S:
    case Kind::H: {
        int g = 0;
        for (int x : k)
            g = std::gcd(g, x);
        std::int64_t sum = 0;
        for (int q = 1; q <= g; ++q) {
            if (g % q != 0)
                continue;
            if (cat.kind == Kind::H && (total / q) % 2 != 0)
                continue;
            std::int64_t term = 1;
            for (int i = 1; i < r; ++i)
                term *= q;
            sum += term;
        }
        return sum;
    }
    case Kind::S_plus: {
        if (r == 1)
            return k[0] >= 2 ? 2 : 1;
        if (r == 2 && equal && (k[0] == 2 || (k[0] >= 3 && opposite_stars)))
            return 2;
        return 1;
    }
    case Kind::H_plus: {
        if (r == 2 && equal && (k[0] == 2 || (k[0] >= 3 && opposite_stars)))
            return 2;
        return total % 2 == 0 ? 1 : 0;
    }
    default:
        fail(ErrorKind::unsupported_category, "no closed-form cumulant for " + cat.name());
    }
}

std::uint64_t z_cumulant_count(const std::vector<Partition>& sigmas, const std::vector<int>& ks)
{
    if (sigmas.size() != ks.size() || sigmas.empty())
        fail(ErrorKind::size_mismatch, "one partition per cycle length is required");
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (sigmas[i].size() != ks[i])
            fail(ErrorKind::size_mismatch, "partition " + std::to_string(i + 1) + " has " +
                                               std::to_string(sigmas[i].size()) + " points, expected " +
                                               std::to_string(ks[i]));
    const MomentSpec spec = MomentSpec::plain(ks);
    check_size(spec.total());
    const auto gamma = TracePermutation::make(spec);
    const Category h = Category::of(Kind::H);
    std::vector<std::vector<int>> cycle_points;
    int start = 0;
    for (int len : ks) {
        std::vector<int> pts(static_cast<std::size_t>(len));
        std::iota(pts.begin(), pts.end(), start);
        cycle_points.push_back(std::move(pts));
        start += len;
    }
    std::uint64_t count = 0;
    for_each_invariant_partition(gamma, true, [&](const Partition& q) {
        for (std::size_t i = 0; i < sigmas.size(); ++i)
            if (restrict_to(q, cycle_points[i]) != sigmas[i])
                return;
        if (contains(h, q))
            ++count;
    });
    return count;
}

Rational compound_poisson_cumulant(int s, const std::vector<int>& ls, const std::vector<int>& ks,
                                   const std::vector<ColorString>& words)
{
    if (ls.size() != ks.size() || ks.size() != words.size() || ks.empty())
        fail(ErrorKind::size_mismatch, "l values, k values and color words must have the same nonzero length");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ls[i] < 1 || ks[i] < 1)
            fail(ErrorKind::invalid_argument, "l and k values must be positive");
        if (ks[i] % ls[i] != 0)
            fail(ErrorKind::divisibility, std::to_string(ls[i]) + " does not divide " + std::to_string(ks[i]));
        if (static_cast<int>(words[i].size()) != ks[i])
            fail(ErrorKind::color_string, "color word " + std::to_string(i + 1) + " must have length " +
                                              std::to_string(ks[i]));
    }
    if (!all_equal(ls))
        return Rational(0);
    const int l = ls[0];
    std::vector<int> labels;
    ColorString eps;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        for (int t = 0; t < ks[i]; ++t)
            labels.push_back(t % l);
        eps.insert(eps.end(), words[i].begin(), words[i].end());
    }
    if (!contains(Category::hs_complex(s), Partition::from_labels(labels), eps))
        return Rational(0);
    return make_rational(1, l);
}

ColorString alternating_word(int k)
{
    if (k < 1)
        fail(ErrorKind::invalid_argument, "word length must be positive");
    ColorString out;
    for (int i = 0; i < k; ++i)
        out.push_back(i % 2 == 0 ? Color::one : Color::star);
    return out;
}

ColorString cyclic_shift(const ColorString& eps, int t)
{
    ColorString out;
    const int k = static_cast<int>(eps.size());
    for (int i = 0; i < k; ++i)
        out.push_back(eps[static_cast<std::size_t>(mod(i + t, k))]);
    return out;
}

ColorString conjugate(const ColorString& eps)
{
    ColorString out;
    for (Color c : eps)
        out.push_back(opposite(c));
    return out;
}

Rational cp_decomposition_cumulant(int s, const std::vector<ColorString>& words)
{
    if (words.empty())
        fail(ErrorKind::invalid_argument, "at least one word is required");
    std::vector<int> ks;
    int g = 0;
    for (const auto& w : words) {
        if (w.empty())
            fail(ErrorKind::color_string, "color words must be nonempty");
        ks.push_back(static_cast<int>(w.size()));
        g = std::gcd(g, ks.back());
    }
    const std::size_t r = words.size();
    Rational total = 0;
    for (int l = 1; l <= g; ++l) {
        if (g % l != 0)
            continue;
        const std::vector<int> ls(r, l);
        std::vector<int> shifts(r, 1);
        while (true) {
            std::vector<ColorString> shifted;
            for (std::size_t i = 0; i < r; ++i)
                shifted.push_back(cyclic_shift(words[i], shifts[i]));
            total += compound_poisson_cumulant(s, ls, ks, shifted);
            std::size_t i = 0;
            while (i < r && shifts[i] == l)
                shifts[i++] = 1;
            if (i == r)
                break;
            ++shifts[i];
        }
    }
    return total;
}

} // namespace wgc
