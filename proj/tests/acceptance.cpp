// Acceptance suite: one timed pass/fail line per criterion, exit nonzero on
// any failure. Every comparison is exact integer equality.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pil/bijection.hpp"
#include "pil/counting.hpp"
#include "pil/qseries.hpp"
#include "pil/verify.hpp"

using pil::Int;
using pil::Partition;

namespace {

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

void expect_eq(std::vector<std::string>& problems, Int lhs, Int rhs, const std::string& what) {
    if (lhs != rhs) {
        problems.push_back(what + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
    }
}

void expect_report(std::vector<std::string>& problems, const pil::verify::VerificationReport& r) {
    if (!r.pass()) {
        problems.push_back(r.check + " reported " + std::to_string(r.failures.size()) +
                           " failures; first: " + r.to_text());
    }
}

std::string golden_path() {
#ifdef PIL_GOLDEN_DIR
    return std::string(PIL_GOLDEN_DIR) + "/table29.txt";
#else
    return "tests/golden/table29.txt";
#endif
}

} // namespace

int main() {
    using namespace pil;

    std::vector<Criterion> criteria;

    criteria.push_back({1, "worked example at n=5: counts, total parts, excess", 1.0,
                        [](std::vector<std::string>& problems) {
        // Enumeration path.
        expect_eq(problems, counting::count_O(0, 2, 1, 5), 3, "count_O(0,2,1,5)");
        expect_eq(problems, counting::count_D(0, 2, 1, 5), 3, "count_D(0,2,1,5)");
        Int o_parts = 0;
        Int d_parts = 0;
        for_each_partition(5, [&](const Partition& p) {
            if (counting::o_index(p, 2, 1) == 0) o_parts += total_parts(p);
            if (counting::d_index(p, 2, 1) == 0) d_parts += total_parts(p);
        });
        expect_eq(problems, o_parts, 9, "total parts over the O side");
        expect_eq(problems, d_parts, 5, "total parts over the D side");
        expect_eq(problems, counting::excess(0, 2, 1, 5), 4, "excess(0,2,1,5)");
        expect_eq(problems, counting::count_O(1, 2, 1, 5), 4, "count_O(1,2,1,5)");

        // Series path.
        auto gf_o = qseries::gf_O(2, 1, 8);
        auto gf_d = qseries::gf_D(2, 1, 8);
        expect_eq(problems, gf_o.coeff(5, 0, 0), 3, "[z^0 q^5] gf_O");
        expect_eq(problems, gf_d.coeff(5, 0, 0), 3, "[z^0 q^5] gf_D");
        auto d_o = qseries::gf_O_w(2, 1, 8).d_dw_at_1();
        auto d_d = qseries::gf_D_w(2, 1, 8).d_dw_at_1();
        expect_eq(problems, d_o.coeff(5, 0, 0), 9, "[z^0 q^5] d/dw gf_O_w");
        expect_eq(problems, d_d.coeff(5, 0, 0), 5, "[z^0 q^5] d/dw gf_D_w");
        expect_eq(problems, d_o.coeff(5, 0, 0) - d_d.coeff(5, 0, 0), gf_o.coeff(5, 1, 0),
                  "series excess equals [z^1 q^5] gf_O");
    }});

    criteria.push_back({2, "n=29 table: 8 members, golden file byte-identical", 1.0,
                        [](std::vector<std::string>& problems) {
        expect_eq(problems, counting::count_O(3, 2, 2, 29), 8, "count_O(3,2,2,29)");
        expect_eq(problems, counting::count_D(3, 2, 2, 29), 8, "count_D(3,2,2,29)");
        auto rows = bijection::table29_rows();
        expect_eq(problems, static_cast<Int>(rows.size()), 8, "table row count");
        for (const auto& [left, right] : rows) {
            expect(problems, counting::o_index(left, 2, 2) == 3, "left column O membership");
            expect(problems, counting::d_index(right, 2, 2) == 3, "right column D membership");
        }
        std::ifstream golden(golden_path(), std::ios::binary);
        if (!golden) {
            problems.push_back("golden file missing: " + golden_path());
            return;
        }
        std::ostringstream bytes;
        bytes << golden.rdbuf();
        expect(problems, bijection::table29_text() == bytes.str(),
               "table29_text differs from the golden file");
    }});

    criteria.push_back({3, "n=506 worked example: psi image, weights, j, round trip", 1.0,
                        [](std::vector<std::string>& problems) {
        Partition d_side = Partition::parse("4^5 6 12^7 18^8 24^9 36");
        Partition expected = Partition::parse("4^5 6^7 18^2 24^3 36^4 48^4");
        Partition image = bijection::psi(d_side, 2, 6);
        expect(problems, image == expected, "psi image");
        expect_eq(problems, d_side.weight(), 506, "input weight");
        expect_eq(problems, image.weight(), 506, "image weight");
        expect_eq(problems, counting::d_index(d_side, 2, 6), 3, "input j in the D family");
        expect_eq(problems, counting::o_index(image, 2, 6), 3, "image j in the O family");
        expect(problems, bijection::phi(image, 2, 6) == d_side, "phi(psi) round trip");
    }});

    criteria.push_back({4, "main theorem grid: n<=40, j<=4, k in {1..4}, b in {1..3}", 180.0,
                        [](std::vector<std::string>& problems) {
        expect_report(problems,
                      verify::check_main_theorem({40, 4, {1, 2, 3, 4}, {1, 2, 3}}));
    }});

    criteria.push_back({5, "companion identity grid: n<=30, j<=3, k in {2,3}, b in {1,2}", 120.0,
                        [](std::vector<std::string>& problems) {
        expect_report(problems, verify::check_beck({30, 3, {2, 3}, {1, 2}}));
    }});

    criteria.push_back({6, "refined excess grid, every t in [1, k-1]", 120.0,
                        [](std::vector<std::string>& problems) {
        expect_report(problems, verify::check_refinement({30, 3, {2, 3}, {1, 2}}));
    }});

    criteria.push_back({7, "cumulative excess grid", 120.0,
                        [](std::vector<std::string>& problems) {
        expect_report(problems, verify::check_corollary({30, 3, {2, 3}, {1, 2}}));
    }});

    criteria.push_back({8, "series identities at N=30, k in {2,3}, b in {1,2}", 60.0,
                        [](std::vector<std::string>& problems) {
        const std::vector<Int> ks{2, 3};
        const std::vector<Int> bs{1, 2};
        expect_report(problems, verify::check_series_identities(30, ks, bs));
    }});

    criteria.push_back({9, "bijection properties, exhaustive for n<=25", 120.0,
                        [](std::vector<std::string>& problems) {
        for (Int k : {2, 3}) {
            for (Int b : {1, 2}) {
                auto report = bijection::verify_roundtrip(25, k, b);
                expect_report(problems, report);
            }
        }
    }});

    criteria.push_back({10, "special cases: Hovey, Glaisher, Franklin, AAB, Fu-Tang, Andrews", 120.0,
                        [](std::vector<std::string>& problems) {
        expect_report(problems, verify::check_hovey({25, 0, {1, 2, 3, 4}, {1, 2, 3}}));
        expect_report(problems, verify::check_glaisher_franklin({25, 3, {1, 2, 3, 4}, {1}}));
        expect_report(problems, verify::check_aab({25, 0, {2, 3}, {1}}));
        expect_report(problems, verify::check_fu_tang({25, 0, {2, 3}, {1}}));
        expect_report(problems, verify::check_andrews_second({25, 0, {2}, {1}}));
    }});

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::vector<std::string> problems;
        auto start = std::chrono::steady_clock::now();
        criterion.run(problems);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > criterion.budget_seconds) {
            problems.push_back("runtime " + std::to_string(seconds) + "s exceeds " +
                               std::to_string(criterion.budget_seconds) + "s");
        }
        if (problems.empty()) {
            std::printf("PASS criterion %2d (%.2fs): %s\n", criterion.number, seconds,
                        criterion.label.c_str());
        } else {
            ++failures;
            std::printf("FAIL criterion %2d (%.2fs): %s\n", criterion.number, seconds,
                        criterion.label.c_str());
            for (const auto& problem : problems) {
                std::printf("     - %s\n", problem.c_str());
            }
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
