#include <doctest.h>

#include "wgcalc/wgcalc.h"

#include <cmath>
#include <string>

namespace {

std::string take(char* text)
{
    std::string out = text ? text : "";
    wgc_free(text);
    return out;
}

} // namespace

TEST_CASE("version and names")
{
    CHECK(std::string(wgc_version()) == "1.0.0");
    CHECK(std::string(wgc_status_name(WGC_ERR_SINGULAR_GRAM)) == "singular-gram");
    CHECK(std::string(wgc_suite_names()).find("half-liberated") != std::string::npos);
}

TEST_CASE("partition lists")
{
    wgc_partition_list* list = nullptr;
    REQUIRE(wgc_partitions_all(4, &list) == WGC_OK);
    CHECK(wgc_partition_list_size(list) == 15);
    char* first = nullptr;
    REQUIRE(wgc_partition_list_get(list, 0, &first) == WGC_OK);
    CHECK(take(first) == "1,2,3,4");
    char* none = nullptr;
    CHECK(wgc_partition_list_get(list, 15, &none) == WGC_ERR_INVALID_ARGUMENT);
    wgc_partition_list_free(list);

    REQUIRE(wgc_partitions_category("U-pairs", 4, "1*1*", &list) == WGC_OK);
    CHECK(wgc_partition_list_size(list) == 2);
    wgc_partition_list_free(list);
    CHECK(wgc_partitions_category("U-pairs", 4, "", &list) == WGC_ERR_COLOR_STRING);
    CHECK(wgc_partitions_category("nope", 4, "", &list) == WGC_ERR_PARSE);
    CHECK(std::string(wgc_last_error()).size() > 0);
}

TEST_CASE("partition helpers")
{
    char* out = nullptr;
    REQUIRE(wgc_partition_join("1,2|3|4", "1|2,3|4", &out) == WGC_OK);
    CHECK(take(out) == "1,2,3|4");
    int nc = -1;
    REQUIRE(wgc_partition_is_noncrossing("1,3|2,4", &nc) == WGC_OK);
    CHECK(nc == 0);
    int64_t mu = 0;
    REQUIRE(wgc_partition_mobius("1|2|3", &mu) == WGC_OK);
    CHECK(mu == 2);
    CHECK(wgc_partition_canonical("1,2|2", &out) == WGC_ERR_PARSE);
    CHECK(wgc_cyclic_partition(4, 6, &out) == WGC_ERR_DIVISIBILITY);
    int member = -1;
    REQUIRE(wgc_category_contains("O+", "1,4|2,3", nullptr, &member) == WGC_OK);
    CHECK(member == 1);
    CHECK(wgc_partition_join(nullptr, "1", &out) == WGC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("tables")
{
    wgc_table* t = nullptr;
    REQUIRE(wgc_table_build("S", 2, 3, nullptr, &t) == WGC_OK);
    REQUIRE(wgc_table_dim(t) == 2);
    char* out = nullptr;
    REQUIRE(wgc_table_weingarten(t, 0, 1, &out) == WGC_OK);
    CHECK(take(out) == "-1/6");
    REQUIRE(wgc_table_gram(t, 1, 1, &out) == WGC_OK);
    CHECK(take(out) == "9/1");
    int ok = 0;
    REQUIRE(wgc_table_verify(t, &ok) == WGC_OK);
    CHECK(ok == 1);
    const int i[] = {1, 2};
    const int j[] = {1, 2};
    REQUIRE(wgc_table_integrate(t, i, j, 2, &out) == WGC_OK);
    CHECK(take(out) == "1/6");
    CHECK(wgc_table_weingarten(t, 2, 0, &out) == WGC_ERR_INVALID_ARGUMENT);
    wgc_table_free(t);
    t = nullptr;
    CHECK(wgc_table_build("S", 3, 2, nullptr, &t) == WGC_ERR_SINGULAR_GRAM);
    CHECK(t == nullptr);
}

TEST_CASE("moments and counts")
{
    char* out = nullptr;
    const int k2[] = {2};
    REQUIRE(wgc_trace_moment("S", 3, k2, nullptr, 1, &out) == WGC_OK);
    CHECK(take(out) == "2/1");
    const char* words[] = {"1*", "*1"};
    REQUIRE(wgc_word_moment("U", 4, words, 2, &out) == WGC_OK);
    CHECK(take(out) == "2/1");
    uint64_t count = 0;
    const int k22[] = {2, 2};
    REQUIRE(wgc_moment_count("O", k22, nullptr, 2, &count) == WGC_OK);
    CHECK(count == 3);
    CHECK(wgc_cumulant_count("O*", k22, nullptr, 2, &count) == WGC_ERR_UNSUPPORTED_CATEGORY);
    const int k33[] = {3, 3};
    const int st[] = {0, 1};
    REQUIRE(wgc_cumulant_count("O+", k33, st, 2, &count) == WGC_OK);
    CHECK(count == 1);
    const int bad[] = {0, 2};
    CHECK(wgc_cumulant_count("O+", k33, bad, 2, &count) == WGC_ERR_INVALID_ARGUMENT);
    int64_t closed = 0;
    REQUIRE(wgc_closed_form_cumulant("S", k22, nullptr, 2, &closed) == WGC_OK);
    CHECK(closed == 3);
    const int e[] = {1, 1};
    REQUIRE(wgc_z_cumulant_count(3, e, 2, &count) == WGC_OK);
    CHECK(count == 3);
    const char* v2[] = {"1*"};
    REQUIRE(wgc_hs_cumulant_count(0, v2, 1, &count) == WGC_OK);
    CHECK(count == 1);
    REQUIRE(wgc_cp_decomposition_cumulant(3, v2, 1, &out) == WGC_OK);
    CHECK(take(out) == "1/1");
    REQUIRE(wgc_trace_law("O", 2, 4, &out) == WGC_OK);
    CHECK(take(out).find("\"gaussian\"") != std::string::npos);
    CHECK(wgc_trace_law("H*", 2, 4, &out) == WGC_ERR_UNSUPPORTED_CATEGORY);
}

TEST_CASE("sampling")
{
    wgc_sample_batch* b = nullptr;
    const int k1[] = {1};
    REQUIRE(wgc_sample_trace_moment("S", 10, k1, nullptr, 1, 2000, 5, &b) == WGC_OK);
    REQUIRE(wgc_sample_batch_size(b) == 1);
    const char* id = nullptr;
    double mean = 0;
    double se = 0;
    REQUIRE(wgc_sample_batch_get(b, 0, &id, &mean, &se) == WGC_OK);
    CHECK(std::string(id) == "moment.re");
    CHECK(std::abs(mean - 1.0) <= 5 * se);
    wgc_sample_batch_free(b);
    char* out = nullptr;
    REQUIRE(wgc_exhaustive_trace_moment("H", 3, k1, nullptr, 1, &out) == WGC_OK);
    CHECK(take(out) == "0/1");
    CHECK(wgc_sample_cycle_statistics("O", 10, 2, 100, 1, &b) == WGC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("suites")
{
    wgc_report* r = nullptr;
    REQUIRE(wgc_suite_run("z-variables", 2, 0, 1, &r) == WGC_OK);
    CHECK(wgc_report_size(r) > 0);
    int passed = 0;
    const char* name = nullptr;
    REQUIRE(wgc_report_get(r, 0, &name, nullptr, nullptr, &passed) == WGC_OK);
    CHECK(passed == 1);
    wgc_report_free(r);
    CHECK(wgc_suite_run("nonsense", 0, 0, 1, &r) == WGC_ERR_UNKNOWN_SUITE);
}
