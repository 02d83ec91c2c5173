#include "wgcalc/wgcalc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

struct Failure {
    wgc_status status;
    std::string message;
};

struct UsageError {
    std::string message;
};

void check(wgc_status status)
{
    if (status != WGC_OK)
        throw Failure{status, wgc_last_error()};
}

std::string take(char* text)
{
    std::string out = text ? text : "";
    wgc_free(text);
    return out;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Result {
    json record;
    Table table;
    bool failed = false;
};

struct Options {
    std::string group;
    std::vector<int> k;
    std::vector<std::string> stars;
    int n = 0;
    int s = 0;
    std::vector<std::string> eps;
    long long trials = 10000;
    long long verify_trials = 0;
    unsigned long long seed = 20240601;
    std::string format = "json";
    std::string out;
    std::vector<int> i;
    std::vector<int> j;
    int kmax = 0;
    int lmax = 0;
    int order = 2;
    std::string suite = "all";
    bool exhaustive = false;
    bool traces = false;
};

std::string category_name(const Options& o)
{
    if (o.group.empty())
        throw UsageError{"--group is required"};
    std::string g = o.group;
    const auto pos = g.find("(s)");
    if (pos != std::string::npos || g == "Hs") {
        if (o.s == 0 && pos != std::string::npos)
            throw UsageError{"--s is required for " + g};
        const std::string s = o.s == 0 ? "inf" : std::to_string(o.s);
        g = pos != std::string::npos ? g.substr(0, pos) + "(" + s + ")" : g + "(" + s + ")";
    }
    char* canonical = nullptr;
    if (g == "U")
        return g;
    if (wgc_category_name(g.c_str(), &canonical) != WGC_OK)
        throw UsageError{wgc_last_error()};
    return take(canonical);
}

bool colored(const std::string& cat)
{
    return cat == "U" || cat == "U-pairs" || cat.rfind("Hs(", 0) == 0;
}

std::vector<int> star_flags(const Options& o)
{
    std::vector<int> out;
    if (o.stars.empty())
        return out;
    if (o.stars.size() != o.k.size())
        throw UsageError{"--stars needs one entry per --k entry"};
    for (const auto& s : o.stars) {
        if (s == "1")
            out.push_back(0);
        else if (s == "*")
            out.push_back(1);
        else
            throw UsageError{"--stars entries must be 1 or *"};
    }
    return out;
}

std::vector<const char*> word_ptrs(const Options& o)
{
    std::vector<const char*> out;
    for (const auto& w : o.eps)
        out.push_back(w.c_str());
    return out;
}

void need_k(const Options& o)
{
    if (o.k.empty())
        throw UsageError{"--k is required"};
}

void need_n(const Options& o)
{
    if (o.n < 1)
        throw UsageError{"--n must be a positive integer"};
}

int single_k(const Options& o)
{
    need_k(o);
    if (o.k.size() != 1)
        throw UsageError{"--k must be a single integer here"};
    return o.k[0];
}

std::string spec_text(const Options& o)
{
    if (!o.eps.empty() && o.k.empty()) {
        std::string out;
        for (const auto& w : o.eps)
            out += (out.empty() ? "" : ",") + w;
        return "(" + out + ")";
    }
    std::string out;
    for (std::size_t i = 0; i < o.k.size(); ++i) {
        out += (i ? "," : "") + std::to_string(o.k[i]);
        if (!o.stars.empty() && o.stars[i] == "*")
            out += "*";
    }
    return "(" + out + ")";
}

json base_record(const std::string& command, json inputs)
{
    json r;
    r["tool_version"] = wgc_version();
    r["command"] = command;
    r["inputs"] = std::move(inputs);
    return r;
}

json spec_inputs(const Options& o, const std::string& cat)
{
    json in;
    in["category"] = cat;
    if (!o.k.empty())
        in["k"] = o.k;
    if (!o.stars.empty())
        in["stars"] = o.stars;
    if (!o.eps.empty())
        in["eps"] = o.eps;
    return in;
}

Result cmd_partitions(const Options& o)
{
    const int k = single_k(o);
    wgc_partition_list* list = nullptr;
    json in;
    in["k"] = k;
    if (o.group.empty()) {
        check(wgc_partitions_all(k, &list));
    } else {
        const std::string cat = category_name(o);
        in["category"] = cat;
        const std::string eps = o.eps.empty() ? "" : o.eps.front();
        if (!eps.empty())
            in["eps"] = eps;
        check(wgc_partitions_category(cat.c_str(), k, eps.c_str(), &list));
    }
    Result res;
    res.table.header = {"index", "partition"};
    json items = json::array();
    const std::size_t size = wgc_partition_list_size(list);
    for (std::size_t idx = 0; idx < size; ++idx) {
        char* text = nullptr;
        const wgc_status st = wgc_partition_list_get(list, idx, &text);
        if (st != WGC_OK) {
            wgc_partition_list_free(list);
            check(st);
        }
        const std::string p = take(text);
        items.push_back(p);
        res.table.rows.push_back({std::to_string(idx + 1), p});
    }
    wgc_partition_list_free(list);
    res.record = base_record("partitions", in);
    res.record["count"] = size;
    res.record["values"] = items;
    res.record["provenance"] = "exact";
    return res;
}

Result cmd_categories(const Options& o)
{
    const int k = o.k.empty() ? 4 : single_k(o);
    std::vector<std::string> names;
    if (!o.group.empty()) {
        names.push_back(category_name(o));
    } else {
        std::stringstream all(wgc_category_names());
        for (std::string name; std::getline(all, name, ',');) {
            if (name.find("(s)") != std::string::npos)
                name = name.substr(0, name.find("(s)")) + "(2)";
            names.push_back(name);
        }
    }
    const std::string eps = o.eps.empty() ? "" : o.eps.front();
    Result res;
    res.table.header = {"category", "k", "size"};
    json values = json::array();
    for (const auto& name : names) {
        json entry;
        entry["category"] = name;
        std::string size = "";
        if (colored(name) && eps.empty()) {
            entry["size"] = nullptr;
            entry["note"] = "needs --eps";
        } else {
            wgc_partition_list* list = nullptr;
            check(wgc_partitions_category(name.c_str(), k, colored(name) ? eps.c_str() : "", &list));
            size = std::to_string(wgc_partition_list_size(list));
            entry["size"] = wgc_partition_list_size(list);
            wgc_partition_list_free(list);
        }
        values.push_back(entry);
        res.table.rows.push_back({name, std::to_string(k), size.empty() ? "-" : size});
    }
    json in;
    in["k"] = k;
    if (!eps.empty())
        in["eps"] = eps;
    res.record = base_record("categories", in);
    res.record["values"] = values;
    res.record["provenance"] = "count";
    return res;
}

struct TableHandle {
    wgc_table* t = nullptr;
    ~TableHandle() { wgc_table_free(t); }
};

json table_inputs(const Options& o, const std::string& cat, int k)
{
    json in;
    in["category"] = cat;
    in["k"] = k;
    in["n"] = o.n;
    if (!o.eps.empty())
        in["eps"] = o.eps.front();
    return in;
}

Result cmd_matrix(const Options& o, bool weingarten)
{
    const std::string cat = category_name(o);
    const int k = single_k(o);
    need_n(o);
    const std::string eps = o.eps.empty() ? "" : o.eps.front();
    TableHandle h;
    check(wgc_table_build(cat.c_str(), k, o.n, eps.c_str(), &h.t));
    const std::size_t dim = wgc_table_dim(h.t);
    Result res;
    json basis = json::array();
    json matrix = json::array();
    res.table.header = {"row", "col", "p", "q", weingarten ? "weingarten" : "gram"};
    for (std::size_t a = 0; a < dim; ++a) {
        char* text = nullptr;
        check(wgc_table_basis(h.t, a, &text));
        basis.push_back(take(text));
    }
    for (std::size_t a = 0; a < dim; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < dim; ++b) {
            char* text = nullptr;
            check(weingarten ? wgc_table_weingarten(h.t, a, b, &text) : wgc_table_gram(h.t, a, b, &text));
            const std::string v = take(text);
            row.push_back(v);
            res.table.rows.push_back({std::to_string(a + 1), std::to_string(b + 1), basis[a].get<std::string>(),
                                      basis[b].get<std::string>(), v});
        }
        matrix.push_back(row);
    }
    res.record = base_record(weingarten ? "weingarten" : "gram", table_inputs(o, cat, k));
    res.record["basis"] = basis;
    res.record["values"] = matrix;
    if (weingarten) {
        char* det = nullptr;
        check(wgc_table_determinant(h.t, &det));
        int verified = 0;
        check(wgc_table_verify(h.t, &verified));
        res.record["gram_determinant"] = take(det);
        res.record["inverse_verified"] = verified == 1;
    }
    res.record["provenance"] = "exact";
    return res;
}

Result cmd_integrate(const Options& o)
{
    const std::string cat = category_name(o);
    need_n(o);
    if (o.i.empty() || o.i.size() != o.j.size())
        throw UsageError{"--i and --j must be nonempty and of equal length"};
    const int k = static_cast<int>(o.i.size());
    const std::string eps = o.eps.empty() ? "" : o.eps.front();
    TableHandle h;
    check(wgc_table_build(cat.c_str(), k, o.n, eps.c_str(), &h.t));
    char* text = nullptr;
    check(wgc_table_integrate(h.t, o.i.data(), o.j.data(), o.i.size(), &text));
    const std::string value = take(text);
    json in = table_inputs(o, cat, k);
    in["i"] = o.i;
    in["j"] = o.j;
    Result res;
    res.record = base_record("integrate", in);
    res.record["value"] = value;
    res.record["provenance"] = "exact";
    res.table.header = {"category", "n", "i", "j", "value"};
    auto list = [](const std::vector<int>& v) {
        std::string out;
        for (int x : v)
            out += (out.empty() ? "" : " ") + std::to_string(x);
        return out;
    };
    res.table.rows.push_back({cat, std::to_string(o.n), list(o.i), list(o.j), value});
    return res;
}

Result cmd_moment(const Options& o)
{
    const std::string cat = category_name(o);
    need_n(o);
    std::string value;
    if (colored(cat)) {
        if (o.eps.empty())
            throw UsageError{"--eps words are required for " + cat};
        const auto words = word_ptrs(o);
        char* text = nullptr;
        check(wgc_word_moment(cat.c_str(), o.n, words.data(), words.size(), &text));
        value = take(text);
    } else {
        need_k(o);
        const auto stars = star_flags(o);
        char* text = nullptr;
        check(wgc_trace_moment(cat.c_str(), o.n, o.k.data(), stars.empty() ? nullptr : stars.data(), o.k.size(),
                               &text));
        value = take(text);
    }
    json in = spec_inputs(o, cat);
    in["n"] = o.n;
    Result res;
    res.record = base_record("moment", in);
    res.record["spec"] = spec_text(o);
    res.record["value"] = value;
    res.record["provenance"] = "exact";
    res.table.header = {"category", "spec", "n", "value"};
    res.table.rows.push_back({cat, spec_text(o), std::to_string(o.n), value});
    return res;
}

Result cmd_asym(const Options& o, bool cumulant)
{
    const std::string cat = category_name(o);
    uint64_t count = 0;
    if (colored(cat)) {
        if (cat == "U")
            throw UsageError{"asymptotic counts use U-pairs, not U"};
        if (o.eps.empty())
            throw UsageError{"--eps words are required for " + cat};
        const auto words = word_ptrs(o);
        check(cumulant ? wgc_word_cumulant_count(cat.c_str(), words.data(), words.size(), &count)
                       : wgc_word_moment_count(cat.c_str(), words.data(), words.size(), &count));
    } else {
        need_k(o);
        const auto stars = star_flags(o);
        const int* sp = stars.empty() ? nullptr : stars.data();
        check(cumulant ? wgc_cumulant_count(cat.c_str(), o.k.data(), sp, o.k.size(), &count)
                       : wgc_moment_count(cat.c_str(), o.k.data(), sp, o.k.size(), &count));
    }
    const std::string command = cumulant ? "cumulant-asym" : "moment-asym";
    Result res;
    res.record = base_record(command, spec_inputs(o, cat));
    res.record["category"] = cat;
    res.record["spec"] = spec_text(o);
    res.record["count"] = count;
    res.record["provenance"] = "count";
    res.table.header = {"category", "spec", "count"};
    res.table.rows.push_back({cat, spec_text(o), std::to_string(count)});
    return res;
}

Result cmd_laws(const Options& o)
{
    const std::string cat = category_name(o);
    if (colored(cat))
        throw UsageError{"laws covers the uncolored categories"};
    const int kmax = o.kmax > 0 ? o.kmax : 4;
    if (o.order < 1 || o.order > 4)
        throw UsageError{"--order must be between 1 and 4"};
    Result res;
    res.table.header = {"spec", "cumulant"};
    json cumulants = json::array();
    const bool is_free = cat.find('+') != std::string::npos;
    std::vector<int> lengths;
    std::vector<int> stars;
    std::function<void(int, int)> rec = [&](int r, int from) {
        if (static_cast<int>(lengths.size()) == r) {
            int64_t value = 0;
            check(wgc_closed_form_cumulant(cat.c_str(), lengths.data(), stars.data(), lengths.size(), &value));
            std::string spec;
            for (std::size_t i = 0; i < lengths.size(); ++i)
                spec += (i ? "," : "") + std::to_string(lengths[i]) + (stars[i] ? "*" : "");
            spec = "(" + spec + ")";
            json entry;
            entry["spec"] = spec;
            entry["cumulant"] = value;
            cumulants.push_back(entry);
            res.table.rows.push_back({spec, std::to_string(value)});
            return;
        }
        for (int k = from; k <= kmax; ++k)
            for (int st = 0; st <= (is_free ? 1 : 0); ++st) {
                lengths.push_back(k);
                stars.push_back(st);
                rec(r, k);
                lengths.pop_back();
                stars.pop_back();
            }
    };
    for (int r = 1; r <= o.order; ++r)
        rec(r, 1);
    json laws = json::array();
    for (int k = 1; k <= kmax; ++k) {
        char* text = nullptr;
        const wgc_status st = wgc_trace_law(cat.c_str(), k, 4, &text);
        json entry;
        entry["k"] = k;
        if (st == WGC_OK)
            entry["law"] = json::parse(take(text));
        else if (st == WGC_ERR_UNSUPPORTED_CATEGORY)
            entry["law"] = nullptr;
        else
            check(st);
        laws.push_back(entry);
    }
    json in;
    in["category"] = cat;
    in["kmax"] = kmax;
    in["order"] = o.order;
    res.record = base_record("laws", in);
    res.record["values"] = cumulants;
    res.record["trace_laws"] = laws;
    int checks = 0;
    int mismatches = 0;
    if (wgc_cycle_decomposition_mismatches(cat.c_str(), kmax, &checks, &mismatches) == WGC_OK) {
        json d;
        d["checks"] = checks;
        d["mismatches"] = mismatches;
        res.record["cycle_decomposition"] = d;
    }
    res.record["provenance"] = "exact";
    return res;
}

struct BatchHandle {
    wgc_sample_batch* b = nullptr;
    ~BatchHandle() { wgc_sample_batch_free(b); }
};

Result cmd_sample(const Options& o)
{
    if (o.group.empty())
        throw UsageError{"--group is required"};
    need_n(o);
    std::string group = o.group;
    if (group == "Hs" || group == "Hs(s)") {
        if (o.s < 2)
            throw UsageError{"--s >= 2 is required for Hs"};
        group = "Hs(" + std::to_string(o.s) + ")";
    }
    const bool complex_group = group == "U" || group.rfind("Hs(", 0) == 0;
    json in;
    in["group"] = group;
    in["n"] = o.n;
    if (!o.k.empty())
        in["k"] = o.k;
    if (!o.stars.empty())
        in["stars"] = o.stars;
    if (!o.eps.empty())
        in["eps"] = o.eps;
    Result res;
    if (o.exhaustive) {
        char* text = nullptr;
        if (!o.eps.empty()) {
            const auto words = word_ptrs(o);
            check(wgc_exhaustive_word_moment(group.c_str(), o.n, words.data(), words.size(), &text));
        } else {
            need_k(o);
            const auto stars = star_flags(o);
            check(wgc_exhaustive_trace_moment(group.c_str(), o.n, o.k.data(), stars.empty() ? nullptr : stars.data(),
                                              o.k.size(), &text));
        }
        const std::string value = take(text);
        in["exhaustive"] = true;
        res.record = base_record("sample", in);
        res.record["spec"] = spec_text(o);
        res.record["value"] = value;
        res.record["provenance"] = "exact";
        res.table.header = {"group", "n", "spec", "value"};
        res.table.rows.push_back({group, std::to_string(o.n), spec_text(o), value});
        return res;
    }
    if (o.trials < 2)
        throw UsageError{"--trials must be at least 2"};
    BatchHandle h;
    if (o.lmax > 0) {
        check(wgc_sample_cycle_statistics(group.c_str(), o.n, o.lmax, o.trials, o.seed, &h.b));
        in["lmax"] = o.lmax;
    } else if (o.traces) {
        need_k(o);
        check(wgc_sample_trace_statistics(group.c_str(), o.n, o.k.data(), o.k.size(), o.trials, o.seed, &h.b));
        in["statistics"] = true;
    } else if (!o.eps.empty()) {
        if (!complex_group)
            throw UsageError{"--eps words need group U or Hs"};
        const auto words = word_ptrs(o);
        check(wgc_sample_word_moment(group.c_str(), o.n, words.data(), words.size(), o.trials, o.seed, &h.b));
    } else {
        need_k(o);
        const auto stars = star_flags(o);
        check(wgc_sample_trace_moment(group.c_str(), o.n, o.k.data(), stars.empty() ? nullptr : stars.data(),
                                      o.k.size(), o.trials, o.seed, &h.b));
    }
    in["trials"] = o.trials;
    in["seed"] = o.seed;
    res.record = base_record("sample", in);
    json estimates = json::array();
    res.table.header = {"id", "mean", "stderr"};
    for (std::size_t idx = 0; idx < wgc_sample_batch_size(h.b); ++idx) {
        const char* id = nullptr;
        double mean = 0;
        double se = 0;
        check(wgc_sample_batch_get(h.b, idx, &id, &mean, &se));
        json e;
        e["id"] = id;
        e["mean"] = mean;
        e["stderr"] = se;
        estimates.push_back(e);
        char mbuf[32];
        char sbuf[32];
        std::snprintf(mbuf, sizeof mbuf, "%.6g", mean);
        std::snprintf(sbuf, sizeof sbuf, "%.3g", se);
        res.table.rows.push_back({id, mbuf, sbuf});
    }
    res.record["values"] = estimates;
    res.record["provenance"] = "montecarlo";
    return res;
}

Result cmd_verify(const Options& o)
{
    std::vector<std::string> suites;
    if (o.suite == "all") {
        std::stringstream all(wgc_suite_names());
        for (std::string name; std::getline(all, name, ',');)
            suites.push_back(name);
    } else {
        suites.push_back(o.suite);
    }
    Result res;
    res.table.header = {"suite", "check", "expected", "actual", "result"};
    json reports = json::array();
    int failures = 0;
    for (const auto& suite : suites) {
        wgc_report* report = nullptr;
        check(wgc_suite_run(suite.c_str(), o.kmax, o.verify_trials, o.seed, &report));
        json checks = json::array();
        int suite_failures = 0;
        for (std::size_t idx = 0; idx < wgc_report_size(report); ++idx) {
            const char* name = nullptr;
            const char* expected = nullptr;
            const char* actual = nullptr;
            int passed = 0;
            wgc_report_get(report, idx, &name, &expected, &actual, &passed);
            json c;
            c["name"] = name;
            c["expected"] = expected;
            c["actual"] = actual;
            c["passed"] = passed == 1;
            checks.push_back(c);
            suite_failures += passed ? 0 : 1;
            res.table.rows.push_back({suite, name, expected, actual, passed ? "pass" : "FAIL"});
        }
        json r;
        r["suite"] = suite;
        r["checks"] = wgc_report_size(report);
        r["failures"] = suite_failures;
        r["seconds"] = wgc_report_seconds(report);
        r["results"] = checks;
        reports.push_back(r);
        failures += suite_failures;
        wgc_report_free(report);
    }
    json in;
    in["suite"] = o.suite;
    if (o.kmax > 0)
        in["kmax"] = o.kmax;
    in["seed"] = o.seed;
    res.record = base_record("verify", in);
    res.record["values"] = reports;
    res.record["passed"] = failures == 0;
    res.record["provenance"] = "exact";
    res.failed = failures > 0;
    return res;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit(std::ostream& os, const Result& res, const std::string& format)
{
    if (format == "json") {
        os << res.record.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t c = 0; c < res.table.header.size(); ++c)
            os << (c ? "," : "") << csv_field(res.table.header[c]);
        os << "\n";
        for (const auto& row : res.table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                os << (c ? "," : "") << csv_field(row[c]);
            os << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(res.table.header.size(), 0);
    for (std::size_t c = 0; c < width.size(); ++c)
        width[c] = res.table.header[c].size();
    for (const auto& row : res.table.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size())
                os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    };
    line(res.table.header);
    for (const auto& row : res.table.rows)
        line(row);
    if (res.record.contains("passed"))
        os << (res.record["passed"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weingarten calculus for easy quantum groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", wgc_version());
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", o.out, "Write output to this file");
    };
    auto group = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--group", o.group, "Category or group name");
        if (required)
            opt->required();
        sub->add_option("--s", o.s, "Parameter s of H(s) and Hs(s); 0 means infinity")->check(CLI::NonNegativeNumber);
    };
    auto kflag = [&](CLI::App* sub) { sub->add_option("--k", o.k, "Cycle lengths (comma list)")->delimiter(','); };
    auto stars = [&](CLI::App* sub) {
        sub->add_option("--stars", o.stars, "Exponents 1 or * (comma list)")->delimiter(',');
    };
    auto eps = [&](CLI::App* sub, const char* help) { sub->add_option("--eps", o.eps, help)->delimiter(','); };
    auto nflag = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Matrix size")->required(); };

    auto* partitions = app.add_subcommand("partitions", "Enumerate P(k) or a category D_k");
    group(partitions, false);
    kflag(partitions);
    eps(partitions, "Color string for colored categories");
    common(partitions);

    auto* categories = app.add_subcommand("categories", "List categories and the sizes of D_k");
    group(categories, false);
    kflag(categories);
    eps(categories, "Color string for colored categories");
    common(categories);

    auto* gram = app.add_subcommand("gram", "Gram matrix n^|p v q| on D_k");
    auto* weingarten = app.add_subcommand("weingarten", "Weingarten matrix W_kn");
    for (auto* sub : {gram, weingarten}) {
        group(sub, true);
        kflag(sub);
        nflag(sub);
        eps(sub, "Color string for colored categories");
        common(sub);
    }

    auto* integrate = app.add_subcommand("integrate", "Haar integral of u_{i1 j1} ... u_{ik jk}");
    group(integrate, true);
    nflag(integrate);
    integrate->add_option("--i", o.i, "Row indices (1-based, comma list)")->delimiter(',')->required();
    integrate->add_option("--j", o.j, "Column indices (1-based, comma list)")->delimiter(',')->required();
    eps(integrate, "Color string for colored categories");
    common(integrate);

    auto* moment = app.add_subcommand("moment", "Exact trace moment at fixed n");
    group(moment, true);
    kflag(moment);
    stars(moment);
    nflag(moment);
    eps(moment, "Color words, one per trace (U, U-pairs, Hs)");
    common(moment);

    auto* moment_asym = app.add_subcommand("moment-asym", "Asymptotic moment count");
    auto* cumulant_asym = app.add_subcommand("cumulant-asym", "Asymptotic cumulant count");
    for (auto* sub : {moment_asym, cumulant_asym}) {
        group(sub, true);
        kflag(sub);
        stars(sub);
        eps(sub, "Color words, one per trace (U-pairs, Hs)");
        common(sub);
    }

    auto* laws = app.add_subcommand("laws", "Expected cumulant tables and limit laws");
    group(laws, true);
    laws->add_option("--kmax", o.kmax, "Largest cycle length")->check(CLI::PositiveNumber);
    laws->add_option("--order", o.order, "Largest cumulant order");
    common(laws);

    auto* sample = app.add_subcommand("sample", "Monte Carlo or exhaustive averages over a matrix group");
    sample->add_option("--group", o.group, "O, S, H, B, U or Hs")->required();
    sample->add_option("--s", o.s, "Roots of unity for Hs");
    kflag(sample);
    stars(sample);
    nflag(sample);
    eps(sample, "Color words, one per trace (U, Hs)");
    sample->add_option("--trials", o.trials, "Number of samples");
    sample->add_option("--seed", o.seed, "Random seed");
    sample->add_flag("--exhaustive", o.exhaustive, "Average over the whole finite group");
    sample->add_flag("--statistics", o.traces, "Means and covariances of Tr(u^k) for k in --k");
    sample->add_option("--lmax", o.lmax, "Cycle statistics for cycle lengths up to lmax (S or H)");
    common(sample);

    auto* verify = app.add_subcommand("verify", "Run cross-validation suites");
    verify->add_option("--suite", o.suite, "Suite name or all");
    verify->add_option("--kmax", o.kmax, "Size bound of the suite")->check(CLI::PositiveNumber);
    verify->add_option("--trials", o.verify_trials, "Monte Carlo trials");
    verify->add_option("--seed", o.seed, "Random seed");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    Result res;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (name == "partitions")
            res = cmd_partitions(o);
        else if (name == "categories")
            res = cmd_categories(o);
        else if (name == "gram")
            res = cmd_matrix(o, false);
        else if (name == "weingarten")
            res = cmd_matrix(o, true);
        else if (name == "integrate")
            res = cmd_integrate(o);
        else if (name == "moment")
            res = cmd_moment(o);
        else if (name == "moment-asym")
            res = cmd_asym(o, false);
        else if (name == "cumulant-asym")
            res = cmd_asym(o, true);
        else if (name == "laws")
            res = cmd_laws(o);
        else if (name == "sample")
            res = cmd_sample(o);
        else
            res = cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n" << sub->help();
        return 2;
    } catch (const Failure& f) {
        json err = base_record(name, json::object());
        err["error"] = wgc_status_name(f.status);
        err["message"] = f.message;
        std::cout << err.dump(2) << "\n";
        std::cerr << "error: " << wgc_status_name(f.status) << ": " << f.message << "\n";
        return 1;
    }

    if (o.out.empty()) {
        emit(std::cout, res, o.format);
    } else {
        std::ofstream file(o.out);
        if (!file) {
            std::cerr << "error: cannot open " << o.out << "\n";
            return 1;
        }
        emit(file, res, o.format);
    }
    return res.failed ? 1 : 0;
}
