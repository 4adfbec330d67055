// pil: exact-arithmetic partition identity laboratory.
//
// Subcommands: count, map, table29, gf, verify. All arithmetic lives in the
// library; this file parses arguments and formats output. Exit codes:
// 0 success/pass, 1 verification failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pil/bijection.hpp"
#include "pil/counting.hpp"
#include "pil/qseries.hpp"
#include "pil/verify.hpp"

namespace {

using pil::Int;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountSpec {
    std::string family;
    std::optional<Int> j, k, b, t, m;
    // Positional layout after the family token. The n slot sits between the
    // two groups and is dropped when --range is given.
    std::vector<char> slots_before_n; // 'j','k','b','u'
    std::vector<char> slots_after_n;  // 't','m'
};

CountSpec family_spec(const std::string& family) {
    CountSpec spec;
    spec.family = family;
    if (family == "O" || family == "D" || family == "Ocum" || family == "Dcum") {
        spec.slots_before_n = {'j', 'k', 'b'};
    } else if (family == "O_m" || family == "D_m" || family == "Dbar") {
        spec.slots_before_n = {'j', 'k', 'b'};
        spec.slots_after_n = {'m'};
    } else if (family == "O_t" || family == "D_t") {
        spec.slots_before_n = {'j', 'k', 'b'};
        spec.slots_after_n = {'t', 'm'};
    } else if (family == "O1u" || family == "D1u") {
        spec.slots_before_n = {'k', 'u'};
    } else {
        throw UsageError("unknown family '" + family +
                         "' (expected O, D, O_m, D_m, O_t, D_t, Dbar, O1u, D1u, Ocum, Dcum)");
    }
    return spec;
}

Int evaluate_count(const CountSpec& s, Int n) {
    using namespace pil::counting;
    auto j = [&] { return *s.j; };
    auto k = [&] { return *s.k; };
    auto b = [&] { return *s.b; };
    if (s.family == "O") return count_O(j(), k(), b(), n);
    if (s.family == "D") return count_D(j(), k(), b(), n);
    if (s.family == "Ocum") return count_O_le(j(), k(), b(), n);
    if (s.family == "Dcum") return count_D_le(j(), k(), b(), n);
    if (s.family == "O_m") return count_O_by_length(j(), k(), b(), *s.m, n);
    if (s.family == "D_m") return count_D_by_length(j(), k(), b(), *s.m, n);
    if (s.family == "O_t") return count_O_class(j(), k(), b(), *s.t, *s.m, n);
    if (s.family == "D_t") return count_D_resmult(j(), k(), b(), *s.t, *s.m, n);
    if (s.family == "Dbar") return count_Dbar(j(), k(), b(), *s.m, n);
    if (s.family == "O1u") return count_O1k_u(*s.k, *s.m, n); // u kept in the m slot
    if (s.family == "D1u") return count_D1k_u(*s.k, *s.m, n);
    throw UsageError("unknown family '" + s.family + "'");
}

pil::counting::CountTable::Key cache_key(const CountSpec& s, Int n) {
    pil::counting::CountTable::Key key;
    key.family = s.family;
    key.j = s.j;
    key.k = s.k;
    key.b = s.b;
    key.t = s.t;
    key.m = s.m;
    key.n = n;
    return key;
}

Int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        Int value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string("expected an integer for ") + what + ", got '" + text + "'");
    }
}

std::pair<Int, Int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw UsageError("range must look like n0..n1, got '" + text + "'");
    }
    Int lo = parse_int(text.substr(0, dots), "range start");
    Int hi = parse_int(text.substr(dots + 2), "range end");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
}

std::string csv_field(const std::optional<Int>& v) {
    return v ? std::to_string(*v) : std::string();
}

json count_json_row(const CountSpec& s, Int n, Int value) {
    json row;
    row["family"] = s.family;
    if (s.j) row["j"] = *s.j;
    if (s.k) row["k"] = *s.k;
    if (s.b) row["b"] = *s.b;
    if (s.t) row["t"] = *s.t;
    if (s.m) row[(s.family == "O1u" || s.family == "D1u") ? "u" : "m"] = *s.m;
    row["n"] = n;
    row["value"] = value;
    return row;
}

struct CountOptions {
    std::vector<std::string> args;
    std::string range;
    std::string format = "text";
    std::string cache_path;
};

int run_count(const CountOptions& opt) {
    if (opt.args.empty()) throw UsageError("count requires a family argument");
    CountSpec spec = family_spec(opt.args.front());

    std::vector<Int> values;
    for (std::size_t i = 1; i < opt.args.size(); ++i) {
        values.push_back(parse_int(opt.args[i], "index"));
    }
    bool ranged = !opt.range.empty();
    std::size_t expected =
        spec.slots_before_n.size() + spec.slots_after_n.size() + (ranged ? 0 : 1);
    if (values.size() != expected) {
        throw UsageError("family " + spec.family + " takes " + std::to_string(expected) +
                         " integer arguments, got " + std::to_string(values.size()));
    }
    std::size_t idx = 0;
    auto assign = [&](char slot) {
        Int v = values[idx++];
        switch (slot) {
        case 'j': spec.j = v; break;
        case 'k': spec.k = v; break;
        case 'b': spec.b = v; break;
        case 't': spec.t = v; break;
        case 'm': spec.m = v; break;
        case 'u': spec.m = v; break; // u rides in the m slot
        }
    };
    for (char slot : spec.slots_before_n) assign(slot);
    Int n0 = 0, n1 = 0;
    if (ranged) {
        std::tie(n0, n1) = parse_range(opt.range);
    } else {
        n0 = n1 = values[idx++];
    }
    for (char slot : spec.slots_after_n) assign(slot);

    pil::counting::CountTable cache;
    bool cache_dirty = false;
    if (!opt.cache_path.empty() && std::filesystem::exists(opt.cache_path)) {
        std::ifstream in(opt.cache_path);
        cache = pil::counting::CountTable::load_csv(in);
    }

    std::vector<std::pair<Int, Int>> rows;
    for (Int n = n0; n <= n1; ++n) {
        std::optional<Int> value;
        if (!opt.cache_path.empty()) value = cache.lookup(cache_key(spec, n));
        if (!value) {
            value = evaluate_count(spec, n);
            if (!opt.cache_path.empty()) {
                cache.insert(cache_key(spec, n), *value);
                cache_dirty = true;
            }
        }
        rows.emplace_back(n, *value);
    }

    if (cache_dirty) {
        std::ofstream out(opt.cache_path);
        cache.save_csv(out);
    }

    if (opt.format == "json") {
        if (ranged) {
            json arr = json::array();
            for (const auto& [n, value] : rows) arr.push_back(count_json_row(spec, n, value));
            std::cout << arr.dump() << '\n';
        } else {
            std::cout << count_json_row(spec, rows.front().first, rows.front().second).dump()
                      << '\n';
        }
    } else if (opt.format == "csv") {
        std::cout << "family,j,k,b,t,m,n,value\n";
        for (const auto& [n, value] : rows) {
            std::cout << spec.family << ',' << csv_field(spec.j) << ',' << csv_field(spec.k)
                      << ',' << csv_field(spec.b) << ',' << csv_field(spec.t) << ','
                      << csv_field(spec.m) << ',' << n << ',' << value << '\n';
        }
    } else {
        if (ranged) {
            for (const auto& [n, value] : rows) std::cout << n << ' ' << value << '\n';
        } else {
            std::cout << rows.front().second << '\n';
        }
    }
    return 0;
}

json classify_json(const pil::Partition& p, Int k, Int b) {
    json side;
    side["partition"] = p.str();
    side["n"] = p.weight();
    side["j_O"] = pil::counting::o_index(p, k, b);
    side["j_D"] = pil::counting::d_index(p, k, b);
    return side;
}

int run_map(const std::string& direction, const std::string& text, Int k, Int b,
            const std::string& format) {
    pil::Partition input = pil::Partition::parse(text);
    pil::Partition image;
    if (direction == "phi") {
        image = pil::bijection::phi(input, k, b);
    } else if (direction == "psi") {
        image = pil::bijection::psi(input, k, b);
    } else {
        throw UsageError("direction must be phi or psi, got '" + direction + "'");
    }
    if (format == "json") {
        json out;
        out["direction"] = direction;
        out["k"] = k;
        out["b"] = b;
        out["input"] = classify_json(input, k, b);
        out["image"] = classify_json(image, k, b);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << image.str() << '\n';
        std::cout << "input:  " << (input.empty() ? "(empty)" : input.str()) << "  n="
                  << input.weight() << " j_O=" << pil::counting::o_index(input, k, b)
                  << " j_D=" << pil::counting::d_index(input, k, b) << " (k=" << k
                  << " b=" << b << ")\n";
        std::cout << "output: " << (image.empty() ? "(empty)" : image.str()) << "  n="
                  << image.weight() << " j_O=" << pil::counting::o_index(image, k, b)
                  << " j_D=" << pil::counting::d_index(image, k, b) << " (k=" << k
                  << " b=" << b << ")\n";
    }
    return 0;
}

struct GfOptions {
    std::vector<std::string> args;
    std::vector<std::string> coeff;
    std::string format = "text";
};

int run_gf(const GfOptions& opt) {
    if (opt.args.empty()) throw UsageError("gf requires a name argument");
    const std::string& name = opt.args.front();
    bool needs_t = (name == "O_t" || name == "D_t");
    std::size_t expected = needs_t ? 5 : 4; // name k b [t] N
    if (opt.args.size() != expected) {
        throw UsageError("gf " + name + " takes " + std::to_string(expected - 1) +
                         " integer arguments (k b " + (needs_t ? "t " : "") + "N)");
    }
    Int k = parse_int(opt.args[1], "k");
    Int b = parse_int(opt.args[2], "b");
    Int t = needs_t ? parse_int(opt.args[3], "t") : 0;
    Int order = parse_int(opt.args.back(), "truncation order");

    pil::qseries::TruncatedSeries series = [&] {
        using namespace pil::qseries;
        if (name == "O") return gf_O(k, b, order);
        if (name == "D") return gf_D(k, b, order);
        if (name == "jO") return gf_jO(k, b, order);
        if (name == "O_w") return gf_O_w(k, b, order);
        if (name == "D_w") return gf_D_w(k, b, order);
        if (name == "O_t") return gf_O_class(k, b, t, order);
        if (name == "O_0") return gf_O_class0(k, b, order);
        if (name == "D_t") return gf_D_resmult(k, b, t, order);
        if (name == "Dbar") return gf_Dbar(k, b, order);
        throw UsageError("unknown gf name '" + name +
                         "' (expected O, D, jO, O_w, D_w, O_t, O_0, D_t, Dbar)");
    }();

    if (opt.coeff.empty()) {
        std::cout << series.dump();
        return 0;
    }

    bool three_var = (name == "O_w" || name == "D_w" || name == "O_t" || name == "O_0" ||
                      name == "D_t" || name == "Dbar");
    Int zdeg = parse_int(opt.coeff[0], "coefficient j");
    Int wdeg = 0;
    if (opt.coeff[1] == "-") {
        if (three_var) throw UsageError("gf " + name + " needs an integer m in --coeff");
        wdeg = 0;
    } else if (three_var) {
        wdeg = parse_int(opt.coeff[1], "coefficient m");
    } else {
        throw UsageError("gf " + name + " is two-variable; use '-' for m in --coeff");
    }
    Int n = parse_int(opt.coeff[2], "coefficient n");
    if (n < 0 || n > order) throw UsageError("coefficient n must lie in [0, truncation order]");
    Int value = series.coeff(n, zdeg, wdeg);
    if (opt.format == "json") {
        json out;
        out["name"] = name;
        out["k"] = k;
        out["b"] = b;
        if (needs_t) out["t"] = t;
        out["trunc"] = order;
        out["j"] = zdeg;
        if (three_var) out["m"] = wdeg;
        out["n"] = n;
        out["value"] = value;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << value << '\n';
    }
    return 0;
}

struct VerifyOptions {
    std::string name;
    std::optional<Int> n_max, j_max, trunc;
    std::vector<Int> k_set, b_set;
    std::string format = "json";
};

int run_verify(const VerifyOptions& opt) {
    std::vector<std::string_view> names;
    if (opt.name == "all") {
        for (const auto& info : pil::verify::check_registry()) names.push_back(info.name);
    } else {
        names.push_back(opt.name);
    }

    std::vector<pil::verify::VerificationReport> reports;
    for (std::string_view name : names) {
        const pil::verify::CheckInfo* info = nullptr;
        for (const auto& entry : pil::verify::check_registry()) {
            if (entry.name == name) info = &entry;
        }
        if (info == nullptr) throw UsageError("unknown check '" + std::string(name) + "'");
        pil::verify::Grid grid = info->default_grid;
        if (opt.n_max) grid.n_max = *opt.n_max;
        if (opt.j_max) grid.j_max = *opt.j_max;
        if (!opt.k_set.empty()) grid.k_values = opt.k_set;
        if (!opt.b_set.empty()) grid.b_values = opt.b_set;
        Int trunc = opt.trunc ? *opt.trunc : (info->default_trunc > 0 ? info->default_trunc : grid.n_max);
        reports.push_back(pil::verify::run_check(name, grid, trunc));
    }

    bool all_pass = true;
    if (opt.format == "text") {
        for (const auto& report : reports) {
            std::cout << report.to_text();
            all_pass = all_pass && report.pass();
        }
    } else if (opt.format == "json") {
        if (reports.size() == 1) {
            std::cout << reports.front().to_json() << '\n';
            all_pass = reports.front().pass();
        } else {
            std::cout << '[';
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << reports[i].to_json();
                all_pass = all_pass && reports[i].pass();
            }
            std::cout << "]\n";
        }
    } else {
        throw UsageError("verify supports --format json|text");
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pil: exact partition identity laboratory"};
    app.require_subcommand(1);

    CountOptions count_opt;
    auto* count = app.add_subcommand(
        "count", "Count a family at one n or over a range (family then indices, n last)");
    count->add_option("args", count_opt.args, "family j k b n [t] [m] (see README)")
        ->expected(-1);
    count->add_option("--range", count_opt.range, "n0..n1 instead of the n argument");
    count->add_option("--format", count_opt.format, "json|csv|text")
        ->envname("PIL_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    count->add_option("--cache", count_opt.cache_path, "CSV cache file")->envname("PIL_CACHE");

    std::string map_direction, map_text;
    Int map_k = 2, map_b = 1;
    std::string map_format = "text";
    auto* map_cmd = app.add_subcommand("map", "Apply phi or psi to a partition");
    map_cmd->add_option("direction", map_direction, "phi|psi")->required();
    map_cmd->add_option("partition", map_text, "partition text (exponent or sum form)")
        ->required();
    map_cmd->add_option("k", map_k, "k (>= 1)")->required();
    map_cmd->add_option("b", map_b, "b (>= 1)")->required();
    map_cmd->add_option("--format", map_format, "json|text")
        ->envname("PIL_FORMAT")
        ->check(CLI::IsMember({"json", "text"}));

    auto* table = app.add_subcommand("table29", "Reproduce the n=29, (k,b)=(2,2), j=3 table");

    GfOptions gf_opt;
    auto* gf = app.add_subcommand("gf", "Dump a generating function or one coefficient");
    gf->add_option("args", gf_opt.args, "name k b [t] N")->expected(-1);
    gf->add_option("--coeff", gf_opt.coeff, "j m n ('-' for m on two-variable series)")
        ->expected(3);
    gf->add_option("--format", gf_opt.format, "json|text (coefficient output)")
        ->envname("PIL_FORMAT")
        ->check(CLI::IsMember({"json", "text"}));

    VerifyOptions verify_opt;
    std::string verify_name;
    auto* verify = app.add_subcommand("verify", "Run a named check (or all) and report");
    std::string check_help = "check name or 'all'; names:";
    for (const auto& info : pil::verify::check_registry()) {
        check_help += ' ';
        check_help += info.name;
    }
    verify->add_option("check", verify_name, check_help)->required();
    Int nmax_flag = -1, jmax_flag = -1, trunc_flag = -1;
    verify->add_option("--nmax", nmax_flag, "largest n in the grid")->envname("PIL_NMAX");
    verify->add_option("--jmax", jmax_flag, "largest j in the grid")->envname("PIL_JMAX");
    verify->add_option("--kset", verify_opt.k_set, "comma separated k values")
        ->envname("PIL_KSET")
        ->delimiter(',');
    verify->add_option("--bset", verify_opt.b_set, "comma separated b values")
        ->envname("PIL_BSET")
        ->delimiter(',');
    verify->add_option("--trunc", trunc_flag, "series truncation order")->envname("PIL_TRUNC");
    verify->add_option("--format", verify_opt.format, "json|text")
        ->envname("PIL_FORMAT")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return run_count(count_opt);
        if (map_cmd->parsed()) return run_map(map_direction, map_text, map_k, map_b, map_format);
        if (table->parsed()) {
            std::cout << pil::bijection::table29_text();
            return 0;
        }
        if (gf->parsed()) return run_gf(gf_opt);
        if (verify->parsed()) {
            verify_opt.name = verify_name;
            if (nmax_flag >= 0) verify_opt.n_max = nmax_flag;
            if (jmax_flag >= 0) verify_opt.j_max = jmax_flag;
            if (trunc_flag >= 0) verify_opt.trunc = trunc_flag;
            return run_verify(verify_opt);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const pil::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
