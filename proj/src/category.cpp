#include "wgcalc/category.hpp"

#include "wgcalc/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

namespace wgc {

namespace {

int math_mod(int a, int m)
{
    int r = a % m;
    return r < 0 ? r + m : r;
}

bool balanced(int diff, int s)
{
    return s == Category::infinity ? diff == 0 : math_mod(diff, s) == 0;
}

int parse_s(std::string_view text, std::string_view name)
{
    if (text == "inf" || text == "infinity")
        return Category::infinity;
    int s = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(ErrorKind::parse, "bad parameter in category name '" + std::string(name) + "'");
    if (s < 2)
        fail(ErrorKind::invalid_argument, "category parameter s must be >= 2 or inf");
    return s;
}

std::string s_name(int s)
{
    return s == Category::infinity ? "inf" : std::to_string(s);
}

// Pairings and (when allow_singletons) partial matchings, as label vectors.
void matchings_rec(std::vector<int>& labels, int next, bool allow_singletons,
                   const std::function<bool(int, int)>& may_pair, std::vector<Partition>& out)
{
    const int k = static_cast<int>(labels.size());
    int i = 0;
    while (i < k && labels[i] >= 0)
        ++i;
    if (i == k) {
        out.push_back(Partition::from_labels(labels));
        return;
    }
    if (allow_singletons) {
        labels[i] = next;
        matchings_rec(labels, next + 1, allow_singletons, may_pair, out);
        labels[i] = -1;
    }
    for (int j = i + 1; j < k; ++j) {
        if (labels[j] >= 0 || !may_pair(i, j))
            continue;
        labels[i] = labels[j] = next;
        matchings_rec(labels, next + 1, allow_singletons, may_pair, out);
        labels[i] = labels[j] = -1;
    }
}

bool block_condition(const Category& cat, const Partition& p, std::span<const Color> eps)
{
    const auto sizes = p.block_sizes();
    auto all_sizes = [&](auto pred) { return std::all_of(sizes.begin(), sizes.end(), pred); };
    switch (cat.kind) {
    case Kind::O:
    case Kind::O_plus:
        return all_sizes([](int s) { return s == 2; });
    case Kind::S:
    case Kind::S_plus:
        return true;
    case Kind::H:
    case Kind::H_plus:
        return all_sizes([](int s) { return s % 2 == 0; });
    case Kind::B:
    case Kind::B_plus:
        return all_sizes([](int s) { return s == 1 || s == 2; });
    case Kind::O_star: {
        if (!all_sizes([](int s) { return s == 2; }))
            return false;
        for (const auto& b : p.blocks())
            if ((b[0] + b[1]) % 2 == 0)
                return false;
        return true;
    }
    case Kind::H_star:
    case Kind::H_series: {
        if (p.size() % 2 != 0)
            return false;
        const int s = cat.kind == Kind::H_star ? Category::infinity : cat.s;
        std::vector<int> diff(static_cast<std::size_t>(p.block_count()), 0);
        // Points are 1-indexed in the leg-parity convention: index 0 is an odd leg.
        for (int i = 0; i < p.size(); ++i)
            diff[p.label(i)] += i % 2 == 0 ? 1 : -1;
        return std::all_of(diff.begin(), diff.end(), [s](int d) { return balanced(d, s); });
    }
    case Kind::U_pairs: {
        if (!all_sizes([](int s) { return s == 2; }))
            return false;
        for (const auto& b : p.blocks())
            if (eps[b[0]] == eps[b[1]])
                return false;
        return true;
    }
    case Kind::Hs_complex: {
        std::vector<int> diff(static_cast<std::size_t>(p.block_count()), 0);
        for (int i = 0; i < p.size(); ++i)
            diff[p.label(i)] += eps[i] == Color::one ? 1 : -1;
        return std::all_of(diff.begin(), diff.end(), [&](int d) { return balanced(d, cat.s); });
    }
    }
    return false;
}

using CacheKey = std::tuple<int, int, int, std::vector<std::uint8_t>>;

std::mutex g_cache_mutex;
std::map<CacheKey, std::shared_ptr<const std::vector<Partition>>> g_cache;

std::vector<Partition> build_category(const Category& cat, int k, std::span<const Color> eps)
{
    std::vector<Partition> out;
    const bool b_kind = cat.kind == Kind::B || cat.kind == Kind::B_plus;
    const bool even_only = cat.kind == Kind::H || cat.kind == Kind::H_plus || cat.kind == Kind::H_star ||
                           cat.kind == Kind::H_series;
    if (cat.pairings_only()) {
        if (k % 2 != 0 && !b_kind)
            return out;
        const int cap = enumeration_limits().pairings;
        if (k > cap)
            fail(ErrorKind::limit_exceeded, cat.name() + " enumeration limited to k <= " + std::to_string(cap) +
                                                " (got " + std::to_string(k) + ")");
        std::function<bool(int, int)> may_pair = [](int, int) { return true; };
        if (cat.kind == Kind::O_star)
            may_pair = [](int i, int j) { return (i + j) % 2 == 1; };
        else if (cat.kind == Kind::U_pairs)
            may_pair = [eps](int i, int j) { return eps[i] != eps[j]; };
        std::vector<int> labels(static_cast<std::size_t>(k), -1);
        matchings_rec(labels, 0, b_kind, may_pair, out);
        if (cat.is_free())
            std::erase_if(out, [](const Partition& p) { return !is_noncrossing(p); });
        std::sort(out.begin(), out.end());
        return out;
    }
    if (even_only && k % 2 != 0)
        return out;
    const int cap = enumeration_limits().all_partitions;
    if (k > cap)
        fail(ErrorKind::limit_exceeded, cat.name() + " enumeration limited to k <= " + std::to_string(cap) +
                                            " (got " + std::to_string(k) + ")");
    for_each_partition(k, [&](const Partition& p) {
        if (block_condition(cat, p, eps) && (!cat.is_free() || is_noncrossing(p)))
            out.push_back(p);
    });
    return out;
}

} // namespace

ColorString parse_colors(std::string_view text)
{
    ColorString out;
    for (char c : text) {
        if (c == '1')
            out.push_back(Color::one);
        else if (c == '*')
            out.push_back(Color::star);
        else if (c != ',' && c != ' ')
            fail(ErrorKind::color_string, "color strings use only '1' and '*', got '" + std::string(text) + "'");
    }
    return out;
}

std::string format_colors(std::span<const Color> colors)
{
    std::string out;
    for (Color c : colors)
        out += c == Color::one ? '1' : '*';
    return out;
}

Category Category::parse(std::string_view name)
{
    static const std::pair<std::string_view, Kind> plain[] = {
        {"O", Kind::O},           {"S", Kind::S},           {"H", Kind::H},           {"B", Kind::B},
        {"O+", Kind::O_plus},     {"S+", Kind::S_plus},     {"H+", Kind::H_plus},     {"B+", Kind::B_plus},
        {"O*", Kind::O_star},     {"H*", Kind::H_star},     {"U-pairs", Kind::U_pairs},
    };
    for (const auto& [text, kind] : plain)
        if (name == text)
            return Category::of(kind);
    auto parametrized = [&](std::string_view prefix) -> std::optional<int> {
        if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix && name.back() == ')')
            return parse_s(name.substr(prefix.size(), name.size() - prefix.size() - 1), name);
        return std::nullopt;
    };
    if (auto s = parametrized("H("))
        return Category::h_series(*s);
    if (auto s = parametrized("Hs("))
        return Category::hs_complex(*s);
    fail(ErrorKind::parse, "unknown category '" + std::string(name) + "'");
}

std::string Category::name() const
{
    switch (kind) {
    case Kind::O: return "O";
    case Kind::S: return "S";
    case Kind::H: return "H";
    case Kind::B: return "B";
    case Kind::O_plus: return "O+";
    case Kind::S_plus: return "S+";
    case Kind::H_plus: return "H+";
    case Kind::B_plus: return "B+";
    case Kind::O_star: return "O*";
    case Kind::H_star: return "H*";
    case Kind::H_series: return "H(" + s_name(s) + ")";
    case Kind::U_pairs: return "U-pairs";
    case Kind::Hs_complex: return "Hs(" + s_name(s) + ")";
    }
    return "?";
}

bool Category::is_free() const
{
    return kind == Kind::O_plus || kind == Kind::S_plus || kind == Kind::H_plus || kind == Kind::B_plus;
}

bool Category::is_classical() const
{
    return kind == Kind::O || kind == Kind::S || kind == Kind::H || kind == Kind::B;
}

bool Category::pairings_only() const
{
    switch (kind) {
    case Kind::O:
    case Kind::O_plus:
    case Kind::B:
    case Kind::B_plus:
    case Kind::O_star:
    case Kind::U_pairs:
        return true;
    default:
        return false;
    }
}

void check_colors(const Category& cat, int k, std::span<const Color> eps)
{
    if (cat.needs_colors()) {
        if (static_cast<int>(eps.size()) != k)
            fail(ErrorKind::color_string, cat.name() + " needs a color string of length " + std::to_string(k) +
                                              " (got " + std::to_string(eps.size()) + ")");
    } else if (!eps.empty()) {
        fail(ErrorKind::color_string, cat.name() + " does not take a color string");
    }
    if ((cat.kind == Kind::H_series || cat.kind == Kind::Hs_complex) && cat.s != Category::infinity && cat.s < 2)
        fail(ErrorKind::invalid_argument, "category parameter s must be >= 2 or inf");
}

bool contains(const Category& cat, const Partition& p, std::span<const Color> eps)
{
    check_colors(cat, p.size(), eps);
    if (!block_condition(cat, p, eps))
        return false;
    return !cat.is_free() || is_noncrossing(p);
}

std::shared_ptr<const std::vector<Partition>> enumerate_category(const Category& cat, int k,
                                                                 std::span<const Color> eps)
{
    if (k < 0)
        fail(ErrorKind::invalid_argument, "k must be nonnegative");
    check_colors(cat, k, eps);
    CacheKey key{static_cast<int>(cat.kind), cat.s, k, {}};
    if (cat.needs_colors())
        for (Color c : eps)
            std::get<3>(key).push_back(static_cast<std::uint8_t>(c));
    {
        std::lock_guard lock(g_cache_mutex);
        if (auto it = g_cache.find(key); it != g_cache.end())
            return it->second;
    }
    auto built = std::make_shared<const std::vector<Partition>>(build_category(cat, k, eps));
    std::lock_guard lock(g_cache_mutex);
    return g_cache.emplace(std::move(key), std::move(built)).first->second;
}

bool supports_cumulant_count(const Category& cat)
{
    return cat.is_classical() || cat.is_free();
}

} // namespace wgc
