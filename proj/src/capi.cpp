#include "wgcalc/wgcalc.h"

#include "wgcalc/asymptotics.hpp"
#include "wgcalc/error.hpp"
#include "wgcalc/laws.hpp"
#include "wgcalc/montecarlo.hpp"
#include "wgcalc/verify.hpp"
#include "wgcalc/weingarten.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

struct wgc_partition_list {
    std::vector<wgc::Partition> items;
};

struct wgc_table {
    std::shared_ptr<const wgc::WeingartenTable> table;
};

struct wgc_sample_batch {
    wgc::SampleBatch batch;
};

struct wgc_report {
    wgc::SuiteReport report;
};

namespace {

thread_local std::string last_error;

wgc_status status_of(wgc::ErrorKind kind)
{
    switch (kind) {
    case wgc::ErrorKind::invalid_argument: return WGC_ERR_INVALID_ARGUMENT;
    case wgc::ErrorKind::size_mismatch: return WGC_ERR_SIZE_MISMATCH;
    case wgc::ErrorKind::limit_exceeded: return WGC_ERR_LIMIT_EXCEEDED;
    case wgc::ErrorKind::singular_gram: return WGC_ERR_SINGULAR_GRAM;
    case wgc::ErrorKind::unsupported_category: return WGC_ERR_UNSUPPORTED_CATEGORY;
    case wgc::ErrorKind::color_string: return WGC_ERR_COLOR_STRING;
    case wgc::ErrorKind::divisibility: return WGC_ERR_DIVISIBILITY;
    case wgc::ErrorKind::parse: return WGC_ERR_PARSE;
    case wgc::ErrorKind::unknown_suite: return WGC_ERR_UNKNOWN_SUITE;
    }
    return WGC_ERR_INTERNAL;
}

template <class F>
wgc_status guard(F&& body) noexcept
{
    try {
        body();
        last_error.clear();
        return WGC_OK;
    } catch (const wgc::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return WGC_ERR_LIMIT_EXCEEDED;
    } catch (const std::exception& e) {
        last_error = e.what();
        return WGC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return WGC_ERR_INTERNAL;
    }
}

void require(const void* ptr, const char* what)
{
    if (ptr == nullptr)
        wgc::fail(wgc::ErrorKind::invalid_argument, std::string(what) + " must not be null");
}

char* dup(const std::string& text)
{
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void put(char** out, const std::string& text)
{
    require(out, "output");
    *out = dup(text);
}

wgc::Category category(const char* name)
{
    require(name, "category");
    return wgc::Category::parse(name);
}

wgc::ColorString colors(const char* text)
{
    if (text == nullptr || *text == '\0')
        return {};
    return wgc::parse_colors(text);
}

wgc::MomentSpec spec(const int* lengths, const int* stars, size_t r)
{
    if (r > 0)
        require(lengths, "lengths");
    wgc::MomentSpec out;
    out.lengths.assign(lengths, lengths + r);
    if (stars != nullptr)
        for (size_t i = 0; i < r; ++i) {
            if (stars[i] != 0 && stars[i] != 1)
                wgc::fail(wgc::ErrorKind::invalid_argument, "star flags must be 0 or 1");
            out.stars.push_back(stars[i] ? wgc::Color::star : wgc::Color::one);
        }
    out.validate();
    return out;
}

std::vector<wgc::ColorString> words(const char* const* list, size_t r)
{
    if (r > 0)
        require(list, "words");
    std::vector<wgc::ColorString> out;
    for (size_t i = 0; i < r; ++i) {
        require(list[i], "word");
        out.push_back(wgc::parse_colors(list[i]));
    }
    return out;
}

const wgc::WeingartenTable& table_of(const wgc_table* table)
{
    require(table, "table");
    return *table->table;
}

void check_index(const wgc::WeingartenTable& t, size_t a)
{
    if (a >= static_cast<size_t>(t.dim()))
        wgc::fail(wgc::ErrorKind::invalid_argument, "basis index " + std::to_string(a) + " out of range");
}

wgc::Sampler sampler(const char* group)
{
    require(group, "group");
    return wgc::Sampler::parse(group);
}

std::string json_rationals(const std::vector<wgc::Rational>& values)
{
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i)
        out += (i ? ",\"" : "\"") + wgc::to_string(values[i]) + "\"";
    return out + "]";
}

std::string join_names(const std::vector<std::string>& names)
{
    std::string out;
    for (const auto& n : names)
        out += (out.empty() ? "" : ",") + n;
    return out;
}

} // namespace

extern "C" {

const char* wgc_version(void)
{
    return "1.0.0";
}

const char* wgc_status_name(wgc_status status)
{
    switch (status) {
    case WGC_OK: return "ok";
    case WGC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case WGC_ERR_SIZE_MISMATCH: return "size-mismatch";
    case WGC_ERR_LIMIT_EXCEEDED: return "limit-exceeded";
    case WGC_ERR_SINGULAR_GRAM: return "singular-gram";
    case WGC_ERR_UNSUPPORTED_CATEGORY: return "unsupported-category";
    case WGC_ERR_COLOR_STRING: return "color-string";
    case WGC_ERR_DIVISIBILITY: return "divisibility";
    case WGC_ERR_PARSE: return "parse";
    case WGC_ERR_UNKNOWN_SUITE: return "unknown-suite";
    case WGC_ERR_INTERNAL: return "internal";
    }
    return "internal";
}

const char* wgc_last_error(void)
{
    return last_error.c_str();
}

void wgc_free(char* text)
{
    std::free(text);
}

wgc_status wgc_partitions_all(int k, wgc_partition_list** out)
{
    return guard([&] {
        require(out, "output");
        auto list = std::make_unique<wgc_partition_list>();
        list->items = wgc::enumerate_partitions(k);
        *out = list.release();
    });
}

wgc_status wgc_partitions_category(const char* cat, int k, const char* eps, wgc_partition_list** out)
{
    return guard([&] {
        require(out, "output");
        auto list = std::make_unique<wgc_partition_list>();
        list->items = *wgc::enumerate_category(category(cat), k, colors(eps));
        *out = list.release();
    });
}

size_t wgc_partition_list_size(const wgc_partition_list* list)
{
    return list ? list->items.size() : 0;
}

wgc_status wgc_partition_list_get(const wgc_partition_list* list, size_t index, char** out)
{
    return guard([&] {
        require(list, "list");
        if (index >= list->items.size())
            wgc::fail(wgc::ErrorKind::invalid_argument, "partition index out of range");
        put(out, wgc::format_partition(list->items[index]));
    });
}

void wgc_partition_list_free(wgc_partition_list* list)
{
    delete list;
}

wgc_status wgc_partition_canonical(const char* partition, char** out)
{
    return guard([&] {
        require(partition, "partition");
        put(out, wgc::format_partition(wgc::parse_partition(partition)));
    });
}

wgc_status wgc_partition_join(const char* a, const char* b, char** out)
{
    return guard([&] {
        require(a, "partition");
        require(b, "partition");
        put(out, wgc::format_partition(wgc::join(wgc::parse_partition(a), wgc::parse_partition(b))));
    });
}

wgc_status wgc_partition_is_noncrossing(const char* partition, int* out)
{
    return guard([&] {
        require(partition, "partition");
        require(out, "output");
        *out = wgc::is_noncrossing(wgc::parse_partition(partition)) ? 1 : 0;
    });
}

wgc_status wgc_partition_block_count(const char* partition, int* out)
{
    return guard([&] {
        require(partition, "partition");
        require(out, "output");
        *out = wgc::parse_partition(partition).block_count();
    });
}

wgc_status wgc_partition_mobius(const char* partition, int64_t* out)
{
    return guard([&] {
        require(partition, "partition");
        require(out, "output");
        *out = wgc::mobius_to_top(wgc::parse_partition(partition));
    });
}

wgc_status wgc_cyclic_partition(int l, int k, char** out)
{
    return guard([&] { put(out, wgc::format_partition(wgc::cyclic_partition(l, k))); });
}

wgc_status wgc_category_name(const char* cat, char** out)
{
    return guard([&] { put(out, category(cat).name()); });
}

wgc_status wgc_category_contains(const char* cat, const char* partition, const char* eps, int* out)
{
    return guard([&] {
        require(partition, "partition");
        require(out, "output");
        const auto c = category(cat);
        const auto p = wgc::parse_partition(partition);
        const auto e = colors(eps);
        wgc::check_colors(c, p.size(), e);
        *out = wgc::contains(c, p, e) ? 1 : 0;
    });
}

const char* wgc_category_names(void)
{
    return "O,S,H,B,O+,S+,H+,B+,O*,H*,H(s),U-pairs,Hs(s)";
}

wgc_status wgc_table_build(const char* cat, int k, int n, const char* eps, wgc_table** out)
{
    return guard([&] {
        require(out, "output");
        auto t = std::make_unique<wgc_table>();
        t->table = wgc::build_table(category(cat), k, n, colors(eps));
        *out = t.release();
    });
}

size_t wgc_table_dim(const wgc_table* table)
{
    return table ? static_cast<size_t>(table->table->dim()) : 0;
}

wgc_status wgc_table_basis(const wgc_table* table, size_t index, char** out)
{
    return guard([&] {
        const auto& t = table_of(table);
        check_index(t, index);
        put(out, wgc::format_partition(t.basis()[index]));
    });
}

wgc_status wgc_table_gram(const wgc_table* table, size_t a, size_t b, char** out)
{
    return guard([&] {
        const auto& t = table_of(table);
        check_index(t, a);
        check_index(t, b);
        put(out, wgc::to_string(wgc::Rational(t.gram(static_cast<int>(a), static_cast<int>(b)))));
    });
}

wgc_status wgc_table_weingarten(const wgc_table* table, size_t a, size_t b, char** out)
{
    return guard([&] {
        const auto& t = table_of(table);
        check_index(t, a);
        check_index(t, b);
        put(out, wgc::to_string(t.wg(static_cast<int>(a), static_cast<int>(b))));
    });
}

wgc_status wgc_table_determinant(const wgc_table* table, char** out)
{
    return guard([&] { put(out, wgc::to_string(wgc::Rational(table_of(table).determinant()))); });
}

wgc_status wgc_table_verify(const wgc_table* table, int* out)
{
    return guard([&] {
        const auto& t = table_of(table);
        require(out, "output");
        *out = t.verify_inverse() ? 1 : 0;
    });
}

wgc_status wgc_table_integrate(const wgc_table* table, const int* i, const int* j, size_t k, char** out)
{
    return guard([&] {
        const auto& t = table_of(table);
        if (k > 0) {
            require(i, "i");
            require(j, "j");
        }
        put(out, wgc::to_string(wgc::haar_integral(t, std::span<const int>(i, k), std::span<const int>(j, k))));
    });
}

void wgc_table_free(wgc_table* table)
{
    delete table;
}

wgc_status wgc_trace_moment(const char* cat, int n, const int* lengths, const int* stars, size_t r, char** out)
{
    return guard([&] { put(out, wgc::to_string(wgc::trace_moment_exact(category(cat), n, spec(lengths, stars, r)))); });
}

wgc_status wgc_word_moment(const char* cat, int n, const char* const* list, size_t r, char** out)
{
    return guard([&] {
        require(cat, "category");
        const auto w = words(list, r);
        if (std::string(cat) == "U")
            put(out, wgc::to_string(wgc::unitary_trace_moment_exact(n, w)));
        else
            put(out, wgc::to_string(wgc::colored_trace_moment_exact(category(cat), n, w)));
    });
}

wgc_status wgc_moment_count(const char* cat, const int* lengths, const int* stars, size_t r, uint64_t* out)
{
    return guard([&] {
        require(out, "output");
        *out = wgc::asymptotic_moment_count(category(cat), spec(lengths, stars, r));
    });
}

wgc_status wgc_cumulant_count(const char* cat, const int* lengths, const int* stars, size_t r, uint64_t* out)
{
    return guard([&] {
        require(out, "output");
        *out = wgc::asymptotic_cumulant_count(category(cat), spec(lengths, stars, r));
    });
}

wgc_status wgc_word_moment_count(const char* cat, const char* const* list, size_t r, uint64_t* out)
{
    return guard([&] {
        require(out, "output");
        *out = wgc::colored_moment_count(category(cat), words(list, r));
    });
}

wgc_status wgc_word_cumulant_count(const char* cat, const char* const* list, size_t r, uint64_t* out)
{
    return guard([&] {
        require(out, "output");
        *out = wgc::colored_cumulant_count(category(cat), words(list, r));
    });
}

wgc_status wgc_closed_form_cumulant(const char* cat, const int* lengths, const int* stars, size_t r, int64_t* out)
{
    return guard([&] {
        require(out, "output");
        *out = wgc::closed_form_cumulant(category(cat), spec(lengths, stars, r));
    });
}

wgc_status wgc_hs_cumulant_count(int s, const char* const* list, size_t r, uint64_t* out)
{
    return guard([&] {
        require(out, "output");
        *out = wgc::hs_cumulant_count(s, words(list, r));
    });
}

wgc_status wgc_cp_decomposition_cumulant(int s, const char* const* list, size_t r, char** out)
{
    return guard([&] { put(out, wgc::to_string(wgc::cp_decomposition_cumulant(s, words(list, r)))); });
}

wgc_status wgc_z_cumulant_count(int l, const int* e, size_t r, uint64_t* out)
{
    return guard([&] {
        require(out, "output");
        if (r > 0)
            require(e, "e");
        std::vector<wgc::Partition> sigmas;
        std::vector<int> ks;
        for (size_t i = 0; i < r; ++i) {
            if (l < 1 || e[i] < 1)
                wgc::fail(wgc::ErrorKind::invalid_argument, "l and e must be positive");
            ks.push_back(l * e[i]);
            sigmas.push_back(wgc::cyclic_partition(l, l * e[i]));
        }
        *out = wgc::z_cumulant_count(sigmas, ks);
    });
}

wgc_status wgc_trace_law(const char* cat, int k, int r_max, char** out)
{
    return guard([&] {
        const auto law = wgc::trace_law(category(cat), k, r_max);
        const int orders = law.family == wgc::LawFamily::circular ? std::min(r_max, 2) : r_max;
        std::string json = "{\"family\":\"" + law.name() + "\",\"mean\":\"" + wgc::to_string(law.mean) +
                           "\",\"variance\":\"" + wgc::to_string(law.variance) + "\",\"lambda\":\"" +
                           wgc::to_string(law.lambda) + "\",\"jump_moments\":" + json_rationals(law.jump_moments) +
                           ",\"cumulants\":" + json_rationals(wgc::law_cumulants(law, orders)) + "}";
        put(out, json);
    });
}

wgc_status wgc_cycle_decomposition_mismatches(const char* cat, int k_max, int* checks, int* mismatches)
{
    return guard([&] {
        require(checks, "checks");
        require(mismatches, "mismatches");
        const auto c = category(cat);
        if (c.kind != wgc::Kind::S && c.kind != wgc::Kind::H && c.kind != wgc::Kind::S_plus &&
            c.kind != wgc::Kind::H_plus)
            wgc::fail(wgc::ErrorKind::unsupported_category, "cycle decomposition is defined for S, H, S+ and H+");
        const auto report = wgc::cycle_decomposition_check(c.kind, k_max);
        *checks = report.checks;
        *mismatches = static_cast<int>(report.mismatches.size());
    });
}

wgc_status wgc_sample_trace_moment(const char* group, int n, const int* lengths, const int* stars, size_t r,
                                   int64_t trials, uint64_t seed, wgc_sample_batch** out)
{
    return guard([&] {
        require(out, "output");
        auto b = std::make_unique<wgc_sample_batch>();
        b->batch = wgc::empirical_trace_moments(sampler(group), n, spec(lengths, stars, r), trials, seed);
        *out = b.release();
    });
}

wgc_status wgc_sample_word_moment(const char* group, int n, const char* const* list, size_t r, int64_t trials,
                                  uint64_t seed, wgc_sample_batch** out)
{
    return guard([&] {
        require(out, "output");
        auto b = std::make_unique<wgc_sample_batch>();
        b->batch = wgc::empirical_word_moments(sampler(group), n, words(list, r), trials, seed);
        *out = b.release();
    });
}

wgc_status wgc_sample_trace_statistics(const char* group, int n, const int* powers, size_t count, int64_t trials,
                                       uint64_t seed, wgc_sample_batch** out)
{
    return guard([&] {
        require(out, "output");
        if (count > 0)
            require(powers, "powers");
        auto b = std::make_unique<wgc_sample_batch>();
        b->batch = wgc::empirical_trace_statistics(sampler(group), n, std::vector<int>(powers, powers + count),
                                                   trials, seed);
        *out = b.release();
    });
}

wgc_status wgc_sample_cycle_statistics(const char* group, int n, int l_max, int64_t trials, uint64_t seed,
                                       wgc_sample_batch** out)
{
    return guard([&] {
        require(out, "output");
        const auto g = sampler(group);
        if (g.kind != wgc::GroupKind::S && g.kind != wgc::GroupKind::H)
            wgc::fail(wgc::ErrorKind::invalid_argument, "cycle statistics need group S or H");
        auto b = std::make_unique<wgc_sample_batch>();
        b->batch = wgc::empirical_cycle_statistics(g.kind, n, l_max, trials, seed);
        *out = b.release();
    });
}

size_t wgc_sample_batch_size(const wgc_sample_batch* batch)
{
    return batch ? batch->batch.estimates.size() : 0;
}

wgc_status wgc_sample_batch_get(const wgc_sample_batch* batch, size_t index, const char** id, double* mean,
                                double* std_error)
{
    return guard([&] {
        require(batch, "batch");
        if (index >= batch->batch.estimates.size())
            wgc::fail(wgc::ErrorKind::invalid_argument, "estimate index out of range");
        const auto& e = batch->batch.estimates[index];
        if (id)
            *id = e.id.c_str();
        if (mean)
            *mean = e.mean;
        if (std_error)
            *std_error = e.std_error;
    });
}

void wgc_sample_batch_free(wgc_sample_batch* batch)
{
    delete batch;
}

wgc_status wgc_exhaustive_trace_moment(const char* group, int n, const int* lengths, const int* stars, size_t r,
                                       char** out)
{
    return guard([&] {
        put(out, wgc::to_string(wgc::exhaustive_trace_moment(sampler(group), n, spec(lengths, stars, r))));
    });
}

wgc_status wgc_exhaustive_word_moment(const char* group, int n, const char* const* list, size_t r, char** out)
{
    return guard([&] { put(out, wgc::to_string(wgc::exhaustive_word_moment(sampler(group), n, words(list, r)))); });
}

const char* wgc_suite_names(void)
{
    static const std::string names = join_names(wgc::suite_names());
    return names.c_str();
}

wgc_status wgc_suite_run(const char* suite, int kmax, int64_t trials, uint64_t seed, wgc_report** out)
{
    return guard([&] {
        require(suite, "suite");
        require(out, "output");
        wgc::SuiteLimits limits;
        limits.kmax = kmax;
        limits.trials = trials;
        limits.seed = seed;
        auto r = std::make_unique<wgc_report>();
        r->report = wgc::run_suite(suite, limits);
        *out = r.release();
    });
}

size_t wgc_report_size(const wgc_report* report)
{
    return report ? report->report.checks.size() : 0;
}

wgc_status wgc_report_get(const wgc_report* report, size_t index, const char** name, const char** expected,
                          const char** actual, int* passed)
{
    return guard([&] {
        require(report, "report");
        if (index >= report->report.checks.size())
            wgc::fail(wgc::ErrorKind::invalid_argument, "check index out of range");
        const auto& c = report->report.checks[index];
        if (name)
            *name = c.name.c_str();
        if (expected)
            *expected = c.expected.c_str();
        if (actual)
            *actual = c.actual.c_str();
        if (passed)
            *passed = c.passed ? 1 : 0;
    });
}

double wgc_report_seconds(const wgc_report* report)
{
    return report ? report->report.seconds : 0.0;
}

void wgc_report_free(wgc_report* report)
{
    delete report;
}

} // extern "C"
