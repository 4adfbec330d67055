#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pil/bijection.hpp"
#include "pil/counting.hpp"
#include "pil/qseries.hpp"
#include "pil/verify.hpp"

namespace py = pybind11;

using pil::Int;
using pil::Partition;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic partition identity laboratory";

    py::register_exception<pil::ParseError>(m, "PartitionParseError", PyExc_ValueError);

    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def(py::init([](const std::string& text) { return Partition::parse(text); }),
             py::arg("text"))
        .def_static("from_pairs",
                    [](const std::vector<std::pair<Int, Int>>& pairs) {
                        std::vector<pil::PartPair> pp;
                        pp.reserve(pairs.size());
                        for (auto [part, mult] : pairs) pp.push_back({part, mult});
                        return Partition::from_pairs(std::move(pp));
                    })
        .def_property_readonly("pairs",
                               [](const Partition& p) {
                                   std::vector<std::pair<Int, Int>> out;
                                   for (const auto& pp : p.pairs()) {
                                       out.emplace_back(pp.part, pp.mult);
                                   }
                                   return out;
                               })
        .def_property_readonly("weight", &Partition::weight)
        .def("multiplicity", &Partition::multiplicity, py::arg("part"))
        .def("exponent_str", &Partition::exponent_str)
        .def("__str__", &Partition::str)
        .def("__repr__", [](const Partition& p) { return "Partition('" + p.str() + "')"; })
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
        .def("__hash__", [](const Partition& p) { return py::hash(py::str(p.str())); });

    m.def("parse_partition", &Partition::parse, py::arg("text"));
    m.def("enumerate_partitions", &pil::enumerate_partitions, py::arg("n"));
    m.def("total_parts", &pil::total_parts);
    m.def("distinct_parts", &pil::distinct_parts);
    m.def("parts_in_class", &pil::parts_in_class, py::arg("partition"), py::arg("modulus"),
          py::arg("residue"));
    m.def(
        "mult_decomposition",
        [](const Partition& p, Int part, Int k) {
            auto d = pil::mult_decomposition(p, part, k);
            return py::make_tuple(d.residual, d.quotient, d.base_k_digits);
        },
        py::arg("partition"), py::arg("part"), py::arg("k"),
        "Returns (residual, quotient, base_k_digits).");
    m.def("distinct_parts_resmult_at_least", &pil::distinct_parts_resmult_at_least,
          py::arg("partition"), py::arg("b"), py::arg("k"), py::arg("t"));
    m.def(
        "kadic_form",
        [](Int part, Int b, Int k) {
            auto f = pil::kadic_form(part, b, k);
            return py::make_tuple(f.alpha, f.core);
        },
        py::arg("part"), py::arg("b"), py::arg("k"), "Returns (alpha, core).");

    // Counting oracles.
    m.def("is_in_O", &pil::counting::is_in_O);
    m.def("is_in_D", &pil::counting::is_in_D);
    m.def("o_index", &pil::counting::o_index);
    m.def("d_index", &pil::counting::d_index);
    m.def("count_O", &pil::counting::count_O);
    m.def("count_D", &pil::counting::count_D);
    m.def("count_O_le", &pil::counting::count_O_le);
    m.def("count_D_le", &pil::counting::count_D_le);
    m.def("count_O_by_length", &pil::counting::count_O_by_length);
    m.def("count_D_by_length", &pil::counting::count_D_by_length);
    m.def("count_O_class", &pil::counting::count_O_class);
    m.def("count_D_resmult", &pil::counting::count_D_resmult);
    m.def("count_Dbar", &pil::counting::count_Dbar);
    m.def("excess", &pil::counting::excess);
    m.def("excess_cumulative", &pil::counting::excess_cumulative);
    m.def("excess_refined", &pil::counting::excess_refined);
    m.def("count_O1k_u", &pil::counting::count_O1k_u);
    m.def("count_D1k_u", &pil::counting::count_D1k_u);
    m.def("fu_tang_lhs", &pil::counting::fu_tang_lhs);
    m.def("andrews_second_lhs", &pil::counting::andrews_second_lhs);

    // Bijection.
    m.def("phi", &pil::bijection::phi, py::arg("partition"), py::arg("k"), py::arg("b"));
    m.def("psi", &pil::bijection::psi, py::arg("partition"), py::arg("k"), py::arg("b"));
    m.def("table29_text", &pil::bijection::table29_text);
    m.def(
        "verify_roundtrip",
        [](Int n_max, Int k, Int b) {
            return pil::bijection::verify_roundtrip(n_max, k, b).to_json();
        },
        py::arg("n_max"), py::arg("k"), py::arg("b"), "Returns the report as a JSON string.");

    // Truncated series.
    py::class_<pil::qseries::TruncatedSeries>(m, "TruncatedSeries")
        .def_property_readonly("order", &pil::qseries::TruncatedSeries::order)
        .def("coeff", &pil::qseries::TruncatedSeries::coeff, py::arg("q_deg"), py::arg("z_deg"),
             py::arg("w_deg"))
        .def("dump", &pil::qseries::TruncatedSeries::dump)
        .def("subst_w1", &pil::qseries::TruncatedSeries::subst_w1)
        .def("d_dw_at_1", &pil::qseries::TruncatedSeries::d_dw_at_1)
        .def("__eq__", [](const pil::qseries::TruncatedSeries& a,
                          const pil::qseries::TruncatedSeries& b) { return a == b; });

    m.def("gf_O", &pil::qseries::gf_O);
    m.def("gf_D", &pil::qseries::gf_D);
    m.def("gf_jO", &pil::qseries::gf_jO);
    m.def("gf_O_w", &pil::qseries::gf_O_w);
    m.def("gf_D_w", &pil::qseries::gf_D_w);
    m.def("gf_O_class", &pil::qseries::gf_O_class);
    m.def("gf_O_class0", &pil::qseries::gf_O_class0);
    m.def("gf_D_resmult", &pil::qseries::gf_D_resmult);
    m.def("gf_Dbar", &pil::qseries::gf_Dbar);

    // Named checks.
    m.def("check_names", [] {
        std::vector<std::string> names;
        for (const auto& info : pil::verify::check_registry()) {
            names.emplace_back(info.name);
        }
        return names;
    });
    m.def(
        "run_check",
        [](const std::string& name, std::optional<Int> n_max, std::optional<Int> j_max,
           std::optional<std::vector<Int>> k_set, std::optional<std::vector<Int>> b_set,
           std::optional<Int> trunc) {
            const pil::verify::CheckInfo* info = nullptr;
            for (const auto& entry : pil::verify::check_registry()) {
                if (entry.name == name) info = &entry;
            }
            if (info == nullptr) throw std::invalid_argument("unknown check: " + name);
            pil::verify::Grid grid = info->default_grid;
            if (n_max) grid.n_max = *n_max;
            if (j_max) grid.j_max = *j_max;
            if (k_set) grid.k_values = *k_set;
            if (b_set) grid.b_values = *b_set;
            Int order = trunc ? *trunc : (info->default_trunc > 0 ? info->default_trunc : grid.n_max);
            return pil::verify::run_check(name, grid, order).to_json();
        },
        py::arg("name"), py::arg("n_max") = std::nullopt, py::arg("j_max") = std::nullopt,
        py::arg("k_set") = std::nullopt, py::arg("b_set") = std::nullopt,
        py::arg("trunc") = std::nullopt, "Runs a named check; returns the report JSON string.");
}
