#include "pil/verify.hpp"

#include <array>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "pil/counting.hpp"
#include "pil/qseries.hpp"

namespace pil::verify {

namespace {

using json = nlohmann::ordered_json;

class Timer {
public:
    explicit Timer(VerificationReport& report) : report_(report) {}
    ~Timer() {
        report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
    }

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::pair<std::string, std::vector<Int>>> grid_desc(const Grid& g) {
    return {{"nmax", {g.n_max}},
            {"jmax", {g.j_max}},
            {"kset", g.k_values},
            {"bset", g.b_values}};
}

void validate_grid(const Grid& g, Int min_k) {
    if (g.n_max < 0) throw std::invalid_argument("nmax must be >= 0");
    if (g.j_max < 0) throw std::invalid_argument("jmax must be >= 0");
    if (g.k_values.empty() || g.b_values.empty()) {
        throw std::invalid_argument("kset and bset must be nonempty");
    }
    for (Int k : g.k_values) {
        if (k < min_k) {
            throw std::invalid_argument("k must be >= " + std::to_string(min_k) +
                                        " for this check");
        }
    }
    for (Int b : g.b_values) {
        if (b < 1) throw std::invalid_argument("b must be >= 1");
    }
}

void expect(VerificationReport& report, std::vector<std::pair<std::string, Int>> params,
            Int lhs, Int rhs) {
    if (lhs != rhs) report.failures.push_back({std::move(params), lhs, rhs, std::nullopt});
}

} // namespace

VerificationReport check_main_theorem(const Grid& grid) {
    validate_grid(grid, 1);
    VerificationReport report;
    report.check = "main_theorem";
    report.grid = grid_desc(grid);
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int b : grid.b_values) {
            auto gf_o = qseries::gf_O(k, b, grid.n_max);
            auto gf_d = qseries::gf_D(k, b, grid.n_max);
            for (Int j = 0; j <= grid.j_max; ++j) {
                for (Int n = 0; n <= grid.n_max; ++n) {
                    Int o_enum = counting::count_O(j, k, b, n);
                    Int d_enum = counting::count_D(j, k, b, n);
                    Int o_gf = gf_o.coeff(n, j, 0);
                    Int d_gf = gf_d.coeff(n, j, 0);
                    if (o_enum != d_enum) {
                        report.failures.push_back(
                            {{{"j", j}, {"k", k}, {"b", b}, {"n", n}, {"cmp", 0}}, o_enum, d_enum, std::nullopt});
                    }
                    if (o_enum != o_gf) {
                        report.failures.push_back(
                            {{{"j", j}, {"k", k}, {"b", b}, {"n", n}, {"cmp", 1}}, o_enum, o_gf, std::nullopt});
                    }
                    if (o_gf != d_gf) {
                        report.failures.push_back(
                            {{{"j", j}, {"k", k}, {"b", b}, {"n", n}, {"cmp", 2}}, o_gf, d_gf, std::nullopt});
                    }
                }
            }
        }
    }
    return report;
}

VerificationReport check_beck(const Grid& grid) {
    validate_grid(grid, 2);
    VerificationReport report;
    report.check = "beck";
    report.grid = grid_desc(grid);
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int b : grid.b_values) {
            for (Int j = 0; j <= grid.j_max; ++j) {
                for (Int n = 0; n <= grid.n_max; ++n) {
                    Int e = counting::excess(j, k, b, n);
                    if (e % (k - 1) != 0) {
                        report.failures.push_back(
                            {{{"j", j}, {"k", k}, {"b", b}, {"n", n}, {"cmp", 0}}, e % (k - 1), 0, std::nullopt});
                        continue;
                    }
                    Int o_next = counting::count_O(j + 1, k, b, n);
                    Int o_here = counting::count_O(j, k, b, n);
                    Int d_next = counting::count_D(j + 1, k, b, n);
                    Int d_here = counting::count_D(j, k, b, n);
                    Int rhs_o = checked_mul(k - 1, checked_sub(checked_mul(j + 1, o_next),
                                                               checked_mul(j, o_here)));
                    Int rhs_d = checked_mul(k - 1, checked_sub(checked_mul(j + 1, d_next),
                                                               checked_mul(j, d_here)));
                    expect(report, {{"j", j}, {"k", k}, {"b", b}, {"n", n}, {"cmp", 1}}, e, rhs_o);
                    expect(report, {{"j", j}, {"k", k}, {"b", b}, {"n", n}, {"cmp", 2}}, e, rhs_d);
                }
            }
        }
    }
    return report;
}

VerificationReport check_corollary(const Grid& grid) {
    validate_grid(grid, 1);
    VerificationReport report;
    report.check = "corollary";
    report.grid = grid_desc(grid);
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int b : grid.b_values) {
            for (Int j = 0; j <= grid.j_max; ++j) {
                for (Int n = 0; n <= grid.n_max; ++n) {
                    Int lhs = counting::excess_cumulative(j, k, b, n);
                    Int rhs = checked_mul(checked_mul(k - 1, j + 1),
                                          counting::count_O(j + 1, k, b, n));
                    expect(report, {{"j", j}, {"k", k}, {"b", b}, {"n", n}}, lhs, rhs);
                }
            }
        }
    }
    return report;
}

VerificationReport check_refinement(const Grid& grid) {
    validate_grid(grid, 2);
    VerificationReport report;
    report.check = "refinement";
    report.grid = grid_desc(grid);
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int b : grid.b_values) {
            for (Int j = 0; j <= grid.j_max; ++j) {
                for (Int n = 0; n <= grid.n_max; ++n) {
                    Int rhs = checked_sub(
                        checked_mul(j + 1, counting::count_O(j + 1, k, b, n)),
                        checked_mul(j, counting::count_O(j, k, b, n)));
                    for (Int t = 1; t <= k - 1; ++t) {
                        Int lhs = counting::excess_refined(j, k, b, t, n);
                        expect(report, {{"j", j}, {"k", k}, {"b", b}, {"t", t}, {"n", n}}, lhs,
                               rhs);
                    }
                }
            }
        }
    }
    return report;
}

VerificationReport check_hovey(const Grid& grid) {
    validate_grid(grid, 1);
    VerificationReport report;
    report.check = "hovey";
    report.grid = grid_desc(grid);
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int b : grid.b_values) {
            for (Int n = 0; n <= grid.n_max; ++n) {
                expect(report, {{"k", k}, {"b", b}, {"n", n}},
                       counting::count_O(0, k, b, n), counting::count_D(0, k, b, n));
            }
        }
    }
    return report;
}

VerificationReport check_glaisher_franklin(const Grid& grid) {
    validate_grid(grid, 1);
    VerificationReport report;
    report.check = "glaisher_franklin";
    report.grid = {{"nmax", {grid.n_max}}, {"jmax", {grid.j_max}}, {"kset", grid.k_values},
                   {"bset", {1}}};
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int j = 0; j <= grid.j_max; ++j) {
            for (Int n = 0; n <= grid.n_max; ++n) {
                expect(report, {{"j", j}, {"k", k}, {"n", n}},
                       counting::count_O(j, k, 1, n), counting::count_D(j, k, 1, n));
            }
        }
    }
    return report;
}

VerificationReport check_aab(const Grid& grid) {
    validate_grid(grid, 2);
    VerificationReport report;
    report.check = "aab";
    report.grid = {{"nmax", {grid.n_max}}, {"kset", grid.k_values}};
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int n = 0; n <= grid.n_max; ++n) {
            Int total = 0;
            for (Int u = 1; u <= std::max<Int>(n, 1); ++u) {
                Int o_side = counting::count_O1k_u(k, u, n);
                Int d_side = counting::count_D1k_u(k, u, n);
                expect(report, {{"k", k}, {"u", u}, {"n", n}}, o_side, d_side);
                total = checked_add(total, o_side);
            }
            expect(report, {{"k", k}, {"u", -1}, {"n", n}}, total,
                   counting::count_O(1, k, 1, n));
        }
    }
    return report;
}

VerificationReport check_fu_tang(const Grid& grid) {
    validate_grid(grid, 2);
    VerificationReport report;
    report.check = "fu_tang";
    report.grid = {{"nmax", {grid.n_max}}, {"kset", grid.k_values}};
    Timer timer(report);
    for (Int k : grid.k_values) {
        for (Int n = 0; n <= grid.n_max; ++n) {
            Int lhs = counting::fu_tang_lhs(k, n);
            expect(report, {{"k", k}, {"n", n}, {"cmp", 0}}, lhs,
                   counting::count_O(1, k, 1, n));
            expect(report, {{"k", k}, {"n", n}, {"cmp", 1}}, lhs,
                   counting::count_D(1, k, 1, n));
        }
    }
    return report;
}

VerificationReport check_andrews_second(const Grid& grid) {
    validate_grid(grid, 1);
    VerificationReport report;
    report.check = "andrews_second";
    report.grid = {{"nmax", {grid.n_max}}};
    Timer timer(report);
    for (Int n = 0; n <= grid.n_max; ++n) {
        expect(report, {{"n", n}}, counting::andrews_second_lhs(n),
               counting::andrews_second_rhs(n));
    }
    return report;
}

namespace {

// Records the first differing coefficient of two series.
void expect_series_equal(VerificationReport& report,
                         std::vector<std::pair<std::string, Int>> params,
                         const qseries::TruncatedSeries& lhs,
                         const qseries::TruncatedSeries& rhs) {
    if (lhs == rhs) return;
    for (Int n = 0; n <= lhs.order(); ++n) {
        if (lhs[n] == rhs[n]) continue;
        qseries::PolyZW diff = lhs[n] - rhs[n];
        const auto& t = diff.terms().front();
        params.emplace_back("n", n);
        params.emplace_back("z", t.z);
        params.emplace_back("w", t.w);
        report.failures.push_back({std::move(params), lhs[n].coeff(t.z, t.w),
                                   rhs[n].coeff(t.z, t.w), std::nullopt});
        return;
    }
}

} // namespace

VerificationReport check_series_identities(Int order, std::span<const Int> k_set,
                                           std::span<const Int> b_set) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    if (k_set.empty() || b_set.empty()) {
        throw std::invalid_argument("kset and bset must be nonempty");
    }
    for (Int k : k_set) {
        if (k < 2) throw std::invalid_argument("k must be >= 2 for this check");
    }
    for (Int b : b_set) {
        if (b < 1) throw std::invalid_argument("b must be >= 1");
    }
    VerificationReport report;
    report.check = "series_identities";
    report.grid = {{"trunc", {order}},
                   {"kset", {k_set.begin(), k_set.end()}},
                   {"bset", {b_set.begin(), b_set.end()}}};
    Timer timer(report);
    qseries::PolyZW one_minus_z = qseries::PolyZW::one_minus_z();
    for (Int k : k_set) {
        for (Int b : b_set) {
            auto jo = qseries::gf_jO(k, b, order);
            // Derivative identity.
            auto lhs_deriv = qseries::gf_O_w(k, b, order).d_dw_at_1() -
                             qseries::gf_D_w(k, b, order).d_dw_at_1();
            auto rhs_deriv = jo.scaled(one_minus_z * qseries::PolyZW(k - 1));
            expect_series_equal(report, {{"eq", 46}, {"k", k}, {"b", b}}, lhs_deriv, rhs_deriv);
            // Refinement target, for each valid t.
            auto class0 = qseries::gf_O_class0(k, b, order);
            auto rhs_target = jo.scaled(one_minus_z);
            for (Int t = 1; t <= k - 1; ++t) {
                auto lhs_target = (qseries::gf_O_class(k, b, t, order) - class0 -
                                   qseries::gf_D_resmult(k, b, t, order))
                                      .d_dw_at_1();
                expect_series_equal(report, {{"eq", 47}, {"k", k}, {"b", b}, {"t", t}},
                                    lhs_target, rhs_target);
            }
            // Product-form identity.
            expect_series_equal(report, {{"eq", 411}, {"k", k}, {"b", b}},
                                qseries::gf_Dbar(k, b, order), class0);
        }
    }
    return report;
}

std::string VerificationReport::to_json(bool include_elapsed) const {
    json out;
    out["check"] = check;
    json g = json::object();
    for (const auto& [name, values] : grid) {
        if (values.size() == 1) {
            g[name] = values.front();
        } else {
            g[name] = values;
        }
    }
    out["grid"] = g;
    json fails = json::array();
    for (const auto& f : failures) {
        json jf;
        json params = json::object();
        for (const auto& [name, value] : f.params) params[name] = value;
        jf["params"] = params;
        jf["lhs"] = f.lhs;
        jf["rhs"] = f.rhs;
        if (f.witness) jf["witness"] = *f.witness;
        fails.push_back(jf);
    }
    out["failures"] = fails;
    out["pass"] = pass();
    if (include_elapsed) out["elapsed_ms"] = elapsed.count();
    return out.dump();
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << check << ": " << (pass() ? "pass" : "FAIL") << " (" << failures.size()
        << " failures, " << elapsed.count() << " ms)\n";
    for (const auto& f : failures) {
        out << "  ";
        for (const auto& [name, value] : f.params) out << name << "=" << value << " ";
        out << "lhs=" << f.lhs << " rhs=" << f.rhs;
        if (f.witness) out << " witness: " << *f.witness;
        out << '\n';
    }
    return out.str();
}

namespace {

const std::array<CheckInfo, 10> kRegistry = {{
    {"main_theorem", "count_O == count_D == series coefficients",
     Grid{40, 4, {1, 2, 3, 4}, {1, 2, 3}}, 0},
    {"beck", "excess == (k-1)((j+1)O_{j+1} - j O_j)", Grid{30, 3, {2, 3}, {1, 2}}, 0},
    {"corollary", "cumulative excess == (k-1)(j+1)O_{j+1}", Grid{30, 3, {2, 3}, {1, 2}}, 0},
    {"refinement", "refined excess matches for every t", Grid{30, 3, {2, 3}, {1, 2}}, 0},
    {"hovey", "count_O(0,k,b,n) == count_D(0,k,b,n)", Grid{25, 0, {1, 2, 3, 4}, {1, 2, 3}}, 0},
    {"glaisher_franklin", "b = 1 family, Euler/Glaisher/Franklin",
     Grid{25, 3, {1, 2, 3, 4}, {1}}, 0},
    {"aab", "one-part refinement count_O1k_u == count_D1k_u", Grid{25, 0, {2, 3}, {1}}, 0},
    {"fu_tang", "fu_tang_lhs == count_O(1,k,1,n)", Grid{25, 0, {2, 3}, {1}}, 0},
    {"andrews_second", "andrews_second_lhs == count_D(1,3,1,n)", Grid{25, 0, {2}, {1}}, 0},
    {"series_identities", "derivative, refinement target, product identities",
     Grid{30, 0, {2, 3}, {1, 2}}, 30},
}};

} // namespace

std::span<const CheckInfo> check_registry() { return kRegistry; }

VerificationReport run_check(std::string_view name, const Grid& grid, Int trunc_order) {
    if (name == "main_theorem") return check_main_theorem(grid);
    if (name == "beck") return check_beck(grid);
    if (name == "corollary") return check_corollary(grid);
    if (name == "refinement") return check_refinement(grid);
    if (name == "hovey") return check_hovey(grid);
    if (name == "glaisher_franklin") return check_glaisher_franklin(grid);
    if (name == "aab") return check_aab(grid);
    if (name == "fu_tang") return check_fu_tang(grid);
    if (name == "andrews_second") return check_andrews_second(grid);
    if (name == "series_identities") {
        return check_series_identities(trunc_order, grid.k_values, grid.b_values);
    }
    throw std::invalid_argument("unknown check: " + std::string(name));
}

} // namespace pil::verify
