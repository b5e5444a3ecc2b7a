#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qpoints/cli.hpp"
#include "qpoints/components.hpp"
#include "qpoints/errors.hpp"
#include "qpoints/matrix.hpp"
#include "qpoints/parser.hpp"
#include "qpoints/scalar.hpp"

namespace py = pybind11;
using namespace qpoints;

namespace {

std::vector<std::vector<int>> component_lists(const PointVariety& v) {
    std::vector<std::vector<int>> out;
    out.reserve(v.component_count());
    for (const auto& s : v.components()) out.push_back(s.indices());
    return out;
}

ComponentsOptions make_options(std::optional<std::size_t> max_components, int threads) {
    ComponentsOptions opts;
    opts.max_components = max_components;
    opts.threads = threads;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_qpoints, m) {
    m.doc() = "Irreducible components of point varieties of quantum polynomial algebras";

    py::register_exception<Error>(m, "QpointsError", PyExc_RuntimeError);

    py::class_<UnitMonomial>(m, "UnitMonomial",
                             "An exact non-zero scalar: root of unity times a product of "
                             "symbol and prime powers.")
        .def(py::init<>())
        .def(py::init(&parse_scalar), py::arg("text"))
        .def_static("symbol", &UnitMonomial::symbol, py::arg("name"))
        .def_static("root_of_unity", &UnitMonomial::root_of_unity, py::arg("num"),
                    py::arg("den"))
        .def_static("from_rational", &UnitMonomial::from_rational, py::arg("p"), py::arg("q"))
        .def("inv", [](const UnitMonomial& x) { return inv(x); })
        .def("is_one", [](const UnitMonomial& x) { return is_one(x); })
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__pow__", [](const UnitMonomial& x, std::int64_t k) { return pow(x, k); })
        .def("__truediv__",
             [](const UnitMonomial& x, const UnitMonomial& y) { return x * inv(y); })
        .def("__str__", &format_scalar)
        .def("__repr__",
             [](const UnitMonomial& x) { return "UnitMonomial('" + format_scalar(x) + "')"; })
        .def("__hash__",
             [](const UnitMonomial& x) { return py::hash(py::str(format_scalar(x))); });

    py::class_<QuantumMatrix>(m, "QuantumMatrix",
                              "Parameter matrix of a quantum polynomial algebra: unit "
                              "diagonal, reciprocal symmetry, non-zero entries.")
        .def_static("all_ones", &QuantumMatrix::all_ones, py::arg("n"))
        .def_static("from_upper_triangle", &QuantumMatrix::from_upper_triangle, py::arg("n"),
                    py::arg("upper"))
        .def_property_readonly("n", &QuantumMatrix::n)
        .def_property_readonly("size", &QuantumMatrix::size)
        .def("at", &QuantumMatrix::at, py::arg("i"), py::arg("j"),
             py::return_value_policy::copy)
        .def("is_valid", &QuantumMatrix::is_valid)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &format_matrix_file)
        .def("__repr__", [](const QuantumMatrix& q) {
            return "<QuantumMatrix n=" + std::to_string(q.n()) + ">";
        });

    py::class_<PointVariety>(m, "PointVariety",
                             "The irreducible components of the point variety, as index "
                             "subsets in canonical order.")
        .def_property_readonly("n", &PointVariety::n)
        .def_property_readonly("components", &component_lists)
        .def_property_readonly("dimension", &PointVariety::dimension)
        .def_property_readonly("is_full_space", &PointVariety::is_full_space)
        .def("to_json", &variety_to_json)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const PointVariety& v) {
            return "<PointVariety " + variety_to_json(v) + ">";
        });

    py::enum_<EliminationOrder>(m, "EliminationOrder")
        .value("highest_first", EliminationOrder::highest_first)
        .value("lowest_first", EliminationOrder::lowest_first);

    m.def("parse_scalar", &parse_scalar, py::arg("text"));
    m.def("format_scalar", &format_scalar, py::arg("x"));
    m.def("parse_matrix_file", &parse_matrix_file, py::arg("text"));
    m.def("format_matrix_file", &format_matrix_file, py::arg("q"));

    m.def(
        "delete_index",
        [](const QuantumMatrix& q, int i) {
            auto r = delete_index(q, i);
            return py::make_tuple(r.matrix, r.kept);
        },
        py::arg("q"), py::arg("i"),
        "Remove row and column i; returns (matrix, kept) with kept[new] = old.");
    m.def(
        "localize",
        [](const QuantumMatrix& q, int i) {
            auto r = localize(q, i);
            return py::make_tuple(r.matrix, r.kept);
        },
        py::arg("q"), py::arg("i"),
        "Parameter matrix of the localization at index i; returns (matrix, kept).");

    m.def("coherent", &coherent, py::arg("q"), py::arg("i"), py::arg("j"), py::arg("l"));
    m.def(
        "is_rank_one_subset",
        [](const QuantumMatrix& q, const std::vector<int>& s) {
            return is_rank_one_subset(q, IndexSubset(s));
        },
        py::arg("q"), py::arg("s"));
    m.def("is_rank_one", &is_rank_one, py::arg("q"));
    m.def("rank_one_from_weights", &rank_one_from_weights, py::arg("weights"));
    m.def("gauge_twist", &gauge_twist, py::arg("q"), py::arg("weights"));
    m.def("sign_matrix", &sign_matrix, py::arg("n"));
    m.def(
        "random_matrix",
        [](int n, std::uint64_t seed, int max_phase_denominator, int symbol_count,
           bool fresh_symbol_per_entry) {
            GeneratorPool pool{max_phase_denominator, symbol_count, fresh_symbol_per_entry};
            return random_matrix(n, seed, pool);
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("max_phase_denominator") = 6,
        py::arg("symbol_count") = 0, py::arg("fresh_symbol_per_entry") = false);

    m.def(
        "components",
        [](const QuantumMatrix& q, std::optional<std::size_t> max_components, int threads) {
            return components(q, make_options(max_components, threads));
        },
        py::arg("q"), py::arg("max_components") = py::none(), py::arg("threads") = 1);
    m.def("brute_force_components", &brute_force_components, py::arg("q"));
    m.def("recursive_components", &recursive_components, py::arg("q"),
          py::arg("order") = EliminationOrder::highest_first);
    m.def(
        "membership",
        [](const QuantumMatrix& q, const std::vector<std::optional<UnitMonomial>>& coords) {
            return membership(q, ProjectivePoint(coords));
        },
        py::arg("q"), py::arg("coords"),
        "Is the projective point with these coordinates (None = zero) on the variety?");
    m.def("dimension", [](const QuantumMatrix& q) { return dimension(q); }, py::arg("q"));
    m.def("variety_to_json", &variety_to_json, py::arg("v"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& input) {
            std::istringstream in(input);
            std::ostringstream out, err;
            const int code = cli::run(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("input") = std::string(),
        "Run the command-line driver in-process; returns (exit_code, stdout, stderr).");
}
