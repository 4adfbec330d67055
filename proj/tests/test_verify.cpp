#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>

#include <json.hpp>

#include "pil/counting.hpp"
#include "pil/qseries.hpp"
#include "pil/verify.hpp"

using namespace pil::verify;
using pil::Int;

namespace {

Grid small_grid() { return Grid{12, 2, {2, 3}, {1, 2}}; }

} // namespace

TEST_CASE("main theorem check on a small grid") {
    Grid grid{15, 3, {1, 2, 3}, {1, 2}};
    auto report = check_main_theorem(grid);
    CHECK(report.pass());
    CHECK(report.check == "main_theorem");
}

TEST_CASE("beck check and its k >= 2 requirement") {
    CHECK(check_beck(small_grid()).pass());
    Grid bad = small_grid();
    bad.k_values = {1, 2};
    CHECK_THROWS_AS(check_beck(bad), std::invalid_argument);
}

TEST_CASE("corollary, refinement, hovey, glaisher_franklin") {
    CHECK(check_corollary(small_grid()).pass());
    CHECK(check_refinement(small_grid()).pass());
    Grid with_k1{12, 2, {1, 2, 3}, {1, 2, 3}};
    CHECK(check_hovey(with_k1).pass());
    CHECK(check_corollary(with_k1).pass()); // k = 1 rows are 0 == 0
    CHECK(check_glaisher_franklin(with_k1).pass());
}

TEST_CASE("aab, fu_tang, andrews_second") {
    Grid grid{14, 0, {2, 3}, {1}};
    CHECK(check_aab(grid).pass());
    CHECK(check_fu_tang(grid).pass());
    CHECK(check_andrews_second(grid).pass());
}

TEST_CASE("series identities check") {
    const std::array<Int, 2> ks{2, 3};
    const std::array<Int, 2> bs{1, 2};
    auto report = check_series_identities(20, ks, bs);
    CHECK(report.pass());
    CHECK_THROWS_AS(check_series_identities(20, std::array<Int, 1>{1}, bs),
                    std::invalid_argument);
    // Truncation below k*b: every identity degenerates to leading terms.
    CHECK(check_series_identities(2, ks, std::array<Int, 2>{2, 3}).pass());
    CHECK(check_series_identities(0, ks, bs).pass());
}

TEST_CASE("failures are detected and reported with the offending cell") {
    // A deliberately broken comparison: run the beck check shape against a
    // grid cell where the identity cannot hold by perturbing the inputs is
    // not possible through the public API, so instead check the report
    // machinery directly.
    VerificationReport report;
    report.check = "demo";
    report.grid = {{"nmax", {5}}, {"kset", {2, 3}}};
    report.failures.push_back({{{"j", 0}, {"n", 5}}, 3, 4, "1^5"});
    CHECK_FALSE(report.pass());
    auto parsed = nlohmann::json::parse(report.to_json());
    CHECK(parsed["check"] == "demo");
    CHECK(parsed["pass"] == false);
    CHECK(parsed["grid"]["nmax"] == 5);
    CHECK(parsed["grid"]["kset"] == nlohmann::json::array({2, 3}));
    REQUIRE(parsed["failures"].size() == 1);
    CHECK(parsed["failures"][0]["params"]["j"] == 0);
    CHECK(parsed["failures"][0]["lhs"] == 3);
    CHECK(parsed["failures"][0]["rhs"] == 4);
    CHECK(parsed["failures"][0]["witness"] == "1^5");
    CHECK(parsed.contains("elapsed_ms"));
    CHECK_FALSE(nlohmann::json::parse(report.to_json(false)).contains("elapsed_ms"));
}

TEST_CASE("reports are deterministic") {
    Grid grid{10, 2, {2}, {1, 2}};
    auto a = check_beck(grid);
    auto b = check_beck(grid);
    CHECK(a.to_json(false) == b.to_json(false));
    auto s1 = check_series_identities(12, std::array<Int, 1>{2}, std::array<Int, 1>{1});
    auto s2 = check_series_identities(12, std::array<Int, 1>{2}, std::array<Int, 1>{1});
    CHECK(s1.to_json(false) == s2.to_json(false));
}

TEST_CASE("registry covers every identity and dispatches") {
    // Identity -> named check. The test pins the full coverage map so a
    // dropped check fails loudly.
    const std::vector<std::pair<std::string, std::string>> coverage = {
        {"euler", "glaisher_franklin"},
        {"glaisher", "glaisher_franklin"},
        {"franklin", "glaisher_franklin"},
        {"hovey", "hovey"},
        {"main O=D", "main_theorem"},
        {"aab refinement", "aab"},
        {"beck first", "beck"},
        {"andrews second", "andrews_second"},
        {"fu-tang", "fu_tang"},
        {"ballantine-welch companion (b=1)", "beck"},
        {"ballantine-welch cumulative (b=1)", "corollary"},
        {"companion theorem", "beck"},
        {"cumulative corollary", "corollary"},
        {"refined excess proposition", "refinement"},
        {"derivative identity", "series_identities"},
        {"refinement target", "series_identities"},
        {"resmult product identity", "series_identities"},
    };
    auto registry = check_registry();
    for (const auto& [identity, check] : coverage) {
        bool found = std::any_of(registry.begin(), registry.end(),
                                 [&](const CheckInfo& info) { return info.name == check; });
        CHECK_MESSAGE(found, "identity '", identity, "' maps to missing check '", check, "'");
    }
    CHECK(registry.size() == 10);

    for (const auto& info : registry) {
        if (info.name == "main_theorem" || info.name == "series_identities") continue;
        Grid tiny = info.default_grid;
        tiny.n_max = std::min<Int>(tiny.n_max, 8);
        auto report = run_check(info.name, tiny, 8);
        CHECK(report.check == info.name);
        CHECK(report.pass());
    }
    CHECK_THROWS_AS(run_check("nope", small_grid(), 10), std::invalid_argument);
}

TEST_CASE("count_Dbar coefficients agree with the q-series route") {
    auto s = pil::qseries::gf_O_class0(2, 1, 30);
    for (Int n = 0; n <= 30; ++n) {
        for (Int j = 0; j <= 2; ++j) {
            for (Int m = 0; 2 * m <= n + 1; ++m) {
                CHECK(s.coeff(n, j, m) == pil::counting::count_Dbar(j, 2, 1, m, n));
            }
        }
    }
}
