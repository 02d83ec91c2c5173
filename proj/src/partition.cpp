#include "wgcalc/partition.hpp"

#include "wgcalc/error.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <numeric>

namespace wgc {

namespace {

void require(bool ok, ErrorKind kind, const char* what)
{
    if (!ok)
        fail(kind, what);
}

// Union-find over a handful of points; the sizes here never exceed a few dozen.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

std::atomic<int> g_limit_all{-1};
std::atomic<int> g_limit_pairings{-1};
std::once_flag g_limits_once;

void init_limits()
{
    EnumerationLimits defaults;
    int all = defaults.all_partitions;
    int pairings = defaults.pairings;
    if (const char* env = std::getenv("WG_MAX_K")) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), value);
        if (ec == std::errc{} && value >= 0) {
            all = value;
            pairings = value;
        }
    }
    int expected = -1;
    g_limit_all.compare_exchange_strong(expected, all);
    expected = -1;
    g_limit_pairings.compare_exchange_strong(expected, pairings);
}

void enumerate_rec(std::vector<int>& labels, int pos, int next_label,
                   const std::function<void(const Partition&)>& visit)
{
    const int k = static_cast<int>(labels.size());
    if (pos == k) {
        visit(Partition::from_labels(labels));
        return;
    }
    for (int b = 0; b <= next_label; ++b) {
        labels[pos] = b;
        enumerate_rec(labels, pos + 1, b == next_label ? next_label + 1 : next_label, visit);
    }
}

} // namespace

Partition Partition::from_labels(std::span<const int> labels)
{
    Partition p;
    p.labels_.resize(labels.size());
    std::vector<std::pair<int, int>> seen; // (raw label, canonical label)
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int raw = labels[i];
        auto it = std::find_if(seen.begin(), seen.end(), [raw](const auto& e) { return e.first == raw; });
        if (it == seen.end()) {
            seen.emplace_back(raw, static_cast<int>(seen.size()));
            p.labels_[i] = seen.back().second;
        } else {
            p.labels_[i] = it->second;
        }
    }
    p.blocks_ = static_cast<int>(seen.size());
    return p;
}

Partition Partition::from_blocks(int k, const std::vector<std::vector<int>>& blocks)
{
    require(k >= 0, ErrorKind::invalid_argument, "partition size must be nonnegative");
    std::vector<int> labels(static_cast<std::size_t>(k), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        require(!blocks[b].empty(), ErrorKind::invalid_argument, "empty block");
        for (int x : blocks[b]) {
            require(x >= 0 && x < k, ErrorKind::invalid_argument, "block element out of range");
            require(labels[x] < 0, ErrorKind::invalid_argument, "element appears in two blocks");
            labels[x] = static_cast<int>(b);
        }
    }
    require(std::none_of(labels.begin(), labels.end(), [](int l) { return l < 0; }),
            ErrorKind::invalid_argument, "blocks do not cover every point");
    return from_labels(labels);
}

Partition Partition::one_block(int k)
{
    std::vector<int> labels(static_cast<std::size_t>(std::max(k, 0)), 0);
    return from_labels(labels);
}

Partition Partition::singletons(int k)
{
    std::vector<int> labels(static_cast<std::size_t>(std::max(k, 0)));
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

std::vector<std::vector<int>> Partition::blocks() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < size(); ++i)
        out[labels_[i]].push_back(i);
    return out;
}

std::vector<int> Partition::block_sizes() const
{
    std::vector<int> sizes(static_cast<std::size_t>(blocks_), 0);
    for (int l : labels_)
        ++sizes[l];
    return sizes;
}

bool Partition::refines(const Partition& other) const
{
    if (size() != other.size())
        return false;
    // Each block of *this must map to a single block of other.
    std::vector<int> target(static_cast<std::size_t>(blocks_), -1);
    for (int i = 0; i < size(); ++i) {
        int& t = target[labels_[i]];
        if (t < 0)
            t = other.labels_[i];
        else if (t != other.labels_[i])
            return false;
    }
    return true;
}

std::size_t Partition::hash() const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int l : labels_) {
        h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<char> hit(images_.size(), 0);
    for (int v : images_) {
        require(v >= 0 && v < size(), ErrorKind::invalid_argument, "permutation image out of range");
        require(!hit[v], ErrorKind::invalid_argument, "permutation is not a bijection");
        hit[v] = 1;
    }
}

Permutation Permutation::identity(int k)
{
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& c : cycles) {
        for (std::size_t t = 0; t < c.size(); ++t) {
            require(c[t] >= 0 && c[t] < k, ErrorKind::invalid_argument, "cycle element out of range");
            images[c[t]] = c[(t + 1) % c.size()];
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i)
        inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

EnumerationLimits enumeration_limits()
{
    std::call_once(g_limits_once, init_limits);
    return {g_limit_all.load(), g_limit_pairings.load()};
}

void set_enumeration_limits(EnumerationLimits limits)
{
    std::call_once(g_limits_once, init_limits);
    g_limit_all.store(limits.all_partitions);
    g_limit_pairings.store(limits.pairings);
}

void for_each_partition(int k, const std::function<void(const Partition&)>& visit)
{
    require(k >= 0, ErrorKind::invalid_argument, "partition size must be nonnegative");
    if (k == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> labels(static_cast<std::size_t>(k), 0);
    enumerate_rec(labels, 1, 1, visit);
}

std::vector<Partition> enumerate_partitions(int k)
{
    const int cap = enumeration_limits().all_partitions;
    if (k > cap)
        fail(ErrorKind::limit_exceeded,
             "partition enumeration limited to k <= " + std::to_string(cap) + " (got " + std::to_string(k) + ")");
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(bell_number(std::max(k, 0))));
    for_each_partition(k, [&out](const Partition& p) { out.push_back(p); });
    return out;
}

Partition join(const Partition& p, const Partition& q)
{
    require(p.size() == q.size(), ErrorKind::size_mismatch, "join of partitions of different sizes");
    const int k = p.size();
    // First point seen in each block; union every point with its block leader in both.
    DisjointSets sets(k);
    std::vector<int> lead_p(static_cast<std::size_t>(p.block_count()), -1);
    std::vector<int> lead_q(static_cast<std::size_t>(q.block_count()), -1);
    for (int i = 0; i < k; ++i) {
        int& a = lead_p[p.label(i)];
        if (a < 0)
            a = i;
        else
            sets.unite(a, i);
        int& b = lead_q[q.label(i)];
        if (b < 0)
            b = i;
        else
            sets.unite(b, i);
    }
    std::vector<int> labels(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        labels[i] = sets.find(i);
    return Partition::from_labels(labels);
}

Partition kernel(std::span<const int> indices)
{
    return Partition::from_labels(indices);
}

bool is_noncrossing(const Partition& p)
{
    const int k = p.size();
    std::vector<int> last(static_cast<std::size_t>(p.block_count()), -1);
    for (int i = 0; i < k; ++i)
        last[p.label(i)] = i;
    std::vector<char> opened(static_cast<std::size_t>(p.block_count()), 0);
    std::vector<int> stack;
    for (int i = 0; i < k; ++i) {
        const int b = p.label(i);
        if (opened[b]) {
            if (stack.empty() || stack.back() != b)
                return false;
        } else {
            opened[b] = 1;
            if (i != last[b])
                stack.push_back(b);
            continue;
        }
        if (i == last[b])
            stack.pop_back();
    }
    return true;
}

Partition apply_perm(const Permutation& g, const Partition& p)
{
    require(g.size() == p.size(), ErrorKind::size_mismatch, "permutation and partition sizes differ");
    std::vector<int> labels(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        labels[g(i)] = p.label(i);
    return Partition::from_labels(labels);
}

Partition cycle_partition(std::span<const int> cycle_lengths)
{
    std::vector<int> labels;
    for (std::size_t c = 0; c < cycle_lengths.size(); ++c) {
        require(cycle_lengths[c] >= 1, ErrorKind::invalid_argument, "cycle lengths must be positive");
        labels.insert(labels.end(), static_cast<std::size_t>(cycle_lengths[c]), static_cast<int>(c));
    }
    return Partition::from_labels(labels);
}

Partition lift(const Partition& sigma, std::span<const int> cycle_lengths)
{
    require(sigma.size() == static_cast<int>(cycle_lengths.size()), ErrorKind::size_mismatch,
            "lift: partition size must equal the number of cycles");
    std::vector<int> labels;
    for (std::size_t c = 0; c < cycle_lengths.size(); ++c) {
        require(cycle_lengths[c] >= 1, ErrorKind::invalid_argument, "cycle lengths must be positive");
        labels.insert(labels.end(), static_cast<std::size_t>(cycle_lengths[c]), sigma.label(static_cast<int>(c)));
    }
    return Partition::from_labels(labels);
}

Partition cyclic_partition(int l, int k)
{
    require(l >= 1 && k >= 1, ErrorKind::invalid_argument, "cyclic partition needs positive l and k");
    if (k % l != 0)
        fail(ErrorKind::divisibility, std::to_string(l) + " does not divide " + std::to_string(k));
    std::vector<int> labels(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        labels[i] = i % l;
    return Partition::from_labels(labels);
}

std::int64_t mobius_to_top(const Partition& sigma)
{
    const int b = sigma.block_count();
    if (b <= 1)
        return 1;
    std::int64_t value = 1;
    for (int i = 2; i < b; ++i)
        value *= i;
    return (b - 1) % 2 == 0 ? value : -value;
}

Partition restrict_to(const Partition& p, std::span<const int> points)
{
    std::vector<int> labels;
    labels.reserve(points.size());
    for (int x : points) {
        require(x >= 0 && x < p.size(), ErrorKind::invalid_argument, "restriction point out of range");
        labels.push_back(p.label(x));
    }
    return Partition::from_labels(labels);
}

Partition parse_partition(std::string_view text)
{
    std::vector<std::vector<int>> blocks;
    int max_point = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '{' || s.front() == '('))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '}' || s.back() == ')'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return Partition{};
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        std::string_view block_text = trim(text.substr(start, bar == std::string_view::npos ? text.npos : bar - start));
        if (block_text.empty())
            fail(ErrorKind::parse, "empty block in partition '" + std::string(text) + "'");
        std::vector<int> block;
        std::size_t pos = 0;
        while (pos <= block_text.size()) {
            std::size_t comma = block_text.find(',', pos);
            std::string_view item = trim(block_text.substr(pos, comma == std::string_view::npos ? block_text.npos : comma - pos));
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size() || value < 1)
                fail(ErrorKind::parse, "bad element '" + std::string(item) + "' in partition");
            block.push_back(value - 1);
            max_point = std::max(max_point, value);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        blocks.push_back(std::move(block));
        if (bar == std::string_view::npos)
            break;
        start = bar + 1;
    }
    try {
        return Partition::from_blocks(max_point, blocks);
    } catch (const Error& e) {
        fail(ErrorKind::parse, std::string("invalid partition: ") + e.what());
    }
}

std::string format_partition(const Partition& p)
{
    std::string out;
    const auto blocks = p.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b)
            out += '|';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(blocks[b][i] + 1);
        }
    }
    return out;
}

std::uint64_t bell_number(int k)
{
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < k; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row)
            next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

} // namespace wgc
