#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germ/germfile.hpp"
#include "germ/invariants.hpp"

namespace py = pybind11;
using namespace germ;

namespace {

Mode mode_from(const std::string& order) {
    if (order == "local") return Mode::Local;
    if (order == "global") return Mode::Global;
    throw error("order must be 'local' or 'global'");
}

std::vector<std::string> gen_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.generators()) out.push_back(g.to_string());
    return out;
}

std::vector<std::vector<std::string>> matrix_strings(const PresentationMatrix& m) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.col_count(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

py::list audit_list(const HypothesisAudit& audit) {
    py::list items;
    for (const auto& it : audit.items) {
        const char* s = it.status == HypothesisAudit::Status::Pass   ? "pass"
                        : it.status == HypothesisAudit::Status::Fail ? "fail"
                                                                     : "assumed";
        items.append(py::make_tuple(it.name, s, it.detail));
    }
    return items;
}

py::tuple formula_tuple(const FormulaResult& res) {
    return py::make_tuple(res.rhs, audit_list(res.audit));
}

}  // namespace

PYBIND11_MODULE(_multigerm, m) {
    m.doc() = "multiple point spaces of finite map germs";

    py::register_exception<error>(m, "GermError");

    py::class_<Ideal>(m, "Ideal")
        .def_property_readonly("generators", &gen_strings)
        .def("simplified",
             [](const Ideal& I, const std::string& order) { return I.simplified(mode_from(order)); },
             py::arg("order") = "global")
        .def("is_unit", [](const Ideal& I, const std::string& o) { return I.is_unit(mode_from(o)); },
             py::arg("order") = "local")
        .def("dimension", [](const Ideal& I, const std::string& o) { return dimension(I, mode_from(o)); },
             py::arg("order") = "local")
        .def("colength",
             [](const Ideal& I, const std::string& o) -> py::object {
                 auto c = colength(I, mode_from(o));
                 return c ? py::cast(*c) : py::none();
             },
             py::arg("order") = "local")
        .def("equals",
             [](const Ideal& a, const Ideal& b, const std::string& o) {
                 return equals(a, b, mode_from(o));
             },
             py::arg("other"), py::arg("order") = "local")
        .def("__repr__", [](const Ideal& I) { return "Ideal(" + I.to_string() + ")"; });

    py::class_<MultiGerm>(m, "MultiGerm")
        .def_property_readonly("target_variables",
                               [](const MultiGerm& g) { return g.target->variables(); })
        .def_property_readonly("branch_names",
                               [](const MultiGerm& g) {
                                   std::vector<std::string> names;
                                   for (const auto& b : g.branches) names.push_back(b.name);
                                   return names;
                               })
        .def("__repr__", [](const MultiGerm& g) {
            return "MultiGerm(" + std::to_string(g.branches.size()) + " branches into C^" +
                   std::to_string(g.target->arity()) + ")";
        });

    m.def("parse_germ", &parse_germ_file, py::arg("text"),
          "Parse a germ description from text.");
    m.def("load_germ", &load_germ_file, py::arg("path"),
          "Load a germ description file.");
    m.def("format_germ", &to_germ_file, py::arg("germ"),
          "Serialize a germ back to the file format.");

    m.def("presentations",
          [](const MultiGerm& g) {
              std::vector<std::vector<std::vector<std::string>>> out;
              for (const auto& lam : branch_presentations(g)) out.push_back(matrix_strings(lam));
              return out;
          },
          py::arg("germ"), "Per-branch presentation matrices as nested lists of strings.");

    m.def("fitting_ideal",
          [](const MultiGerm& g, int k) { return FittingLadder::of(g).total_fitting(k); },
          py::arg("germ"), py::arg("k"), "k-th Fitting ideal of the multi-germ.");
    m.def("target_space", [](const MultiGerm& g, int k) { return target_space(g, k); },
          py::arg("germ"), py::arg("k"),
          "Ideal of the k-fold target multiple point space M_k.");
    m.def("source_multipoint", &source_multipoint, py::arg("germ"), py::arg("k"),
          "Source k-fold multiple point ideals, one per branch with source points.");

    m.def("double_formula",
          [](const MultiGerm& g) { return formula_tuple(double_formula(FittingLadder::of(g))); },
          py::arg("germ"),
          "Right-hand side of the double point intersection formula with its hypothesis audit.");
    m.def("triple_formula",
          [](const MultiGerm& g) { return formula_tuple(triple_formula(FittingLadder::of(g))); },
          py::arg("germ"),
          "Right-hand side of the triple point intersection formula with its hypothesis audit.");
    m.def("branch_expansion",
          [](const MultiGerm& g, int k) { return branch_expansion(FittingLadder::of(g), k); },
          py::arg("germ"), py::arg("k"));
    m.def("decomposition_check",
          [](const MultiGerm& g, int k) { return decomposition_check(FittingLadder::of(g), k); },
          py::arg("germ"), py::arg("k"),
          "Radical-level decomposition of M_k into per-branch loci.");
    m.def("preimage_check", &preimage_compare, py::arg("germ"), py::arg("k"),
          "Source space against the preimage of the target space, set-theoretically.");

    m.def("multiplicity",
          [](const Ideal& I, unsigned seed) { return multiplicity_m0(I, {seed}); },
          py::arg("curve"), py::arg("seed") = 1, "Multiplicity m0 of a curve germ.");
    m.def("polar_multiplicity",
          [](const Ideal& I, unsigned seed) {
              return polar_m1(I.simplified(Mode::Global), {seed});
          },
          py::arg("curve"), py::arg("seed") = 1, "First polar multiplicity m1 of a curve germ.");
    m.def("milnor_from_polar", &milnor_from_polar, py::arg("m0"), py::arg("m1"));
    m.def("delta_from_milnor", &delta_from_milnor, py::arg("mu"), py::arg("r"));
    m.def("milnor_from_delta", &milnor_from_delta, py::arg("delta"), py::arg("r"));
    m.def("intersection_number", &intersection_number, py::arg("curve_a"), py::arg("curve_b"));
    m.def("quadruple_count",
          [](const MultiGerm& g) {
              auto q = quadruple_count(g);
              return py::make_tuple(py::cast(q.get_num().get_si()),
                                    py::cast(q.get_den().get_si()));
          },
          py::arg("germ"),
          "Quadruple point count of a stable perturbation, as a (numerator, denominator) pair.");
}
