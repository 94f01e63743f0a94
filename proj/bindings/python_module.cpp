// Python module exposing the exact-arithmetic toolkit: root systems,
// positive-root nilpotent algebras, the characteristic subalgebra
// computations, and the independent scan oracles. Rationals cross the
// boundary as strings ("-3/2") so no precision is lost.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilchar/algebra_io.hpp"
#include "nilchar/char_subalg.hpp"
#include "nilchar/chevalley.hpp"
#include "nilchar/fixtures.hpp"

namespace py = pybind11;
using namespace nilchar;

namespace {

Rational parse_q(const std::string& s) {
  auto q = Rational::parse(s);
  if (!q) throw std::invalid_argument("bad rational '" + s + "'");
  return *q;
}

QVector vec_from(const std::vector<std::string>& xs) {
  QVector v;
  v.reserve(xs.size());
  for (const auto& s : xs) v.push_back(parse_q(s));
  return v;
}

std::vector<std::string> vec_to(const QVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

QMatrix mat_from(std::size_t cols, const std::vector<std::vector<std::string>>& rows) {
  QMatrix m(cols);
  for (const auto& r : rows) {
    QVector v = vec_from(r);
    if (v.size() != cols)
      throw std::invalid_argument("row length does not match the ambient dimension");
    m.push_row(std::move(v));
  }
  return m;
}

std::vector<std::vector<std::string>> mat_to(const QMatrix& m) {
  std::vector<std::vector<std::string>> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to(m.row(r)));
  return out;
}

using FlatBracket = std::tuple<std::size_t, std::size_t, std::size_t, std::string>;

LieAlgebra algebra_from_table(std::size_t dim, const std::vector<FlatBracket>& entries,
                              const std::vector<std::string>& labels) {
  StructureConstants constants;
  for (const auto& [i, j, k, coeff] : entries) constants[{i, j}].emplace_back(k, parse_q(coeff));
  return LieAlgebra::from_constants(dim, labels, constants);
}

py::dict descent_dict(const LieAlgebra& g) {
  DescentChain chain = second_center_descent(g);
  py::list terms;
  for (const auto& t : chain.terms) terms.append(mat_to(t));
  py::dict d;
  d["dims"] = chain.dims();
  d["terms"] = terms;
  d["stable"] = mat_to(chain.stable());
  return d;
}

py::dict sweep_dict(const LieAlgebra& g) {
  SweepResult res = square_zero_sweep(g);
  py::list trace;
  for (const auto& step : res.trace)
    trace.append(py::make_tuple(step.witness, step.dim_after));
  py::dict d;
  d["bound"] = mat_to(res.bound);
  d["trace"] = trace;
  d["exact_center"] = res.exact_center;
  return d;
}

py::dict reduction_dict(const std::string& type) {
  ShrinkChainResult res = highest_root_reduction(parse_root_type(type));
  py::list steps;
  for (const auto& s : res.steps) steps.append(py::make_tuple(s.witness, s.removed));
  py::dict d;
  d["refused"] = res.refused;
  d["reason"] = res.reason;
  d["steps"] = steps;
  d["final_set"] = res.final_set;
  d["reached_highest_line"] = res.reached_highest_line;
  return d;
}

py::dict type_c_dict(const GradedBasis& nb) {
  TypeCIdeal ideal = type_c_abelian_ideal(nb);
  py::dict d;
  d["subspace"] = mat_to(ideal.subspace);
  d["root_indices"] = ideal.root_indices;
  d["abelian"] = ideal.abelian;
  d["ideal"] = ideal.ideal;
  d["maximal_abelian"] = ideal.maximal_abelian;
  return d;
}

py::dict grid_dict(const LieAlgebra& g, const std::vector<std::vector<std::string>>& candidate,
                   unsigned long long budget) {
  GridScan scan = square_zero_grid_scan(g, mat_from(g.dim(), candidate), budget);
  py::list violations;
  for (const auto& v : scan.violations)
    violations.append(py::make_tuple(v.witness, v.candidate_row));
  py::dict d;
  d["radius"] = scan.radius;
  d["samples"] = scan.samples;
  d["square_zero_witnesses"] = scan.square_zero_witnesses;
  d["violations"] = violations;
  return d;
}

py::dict mod_p_dict(const LieAlgebra& g, const std::vector<std::vector<std::string>>& candidate,
                    long prime, unsigned long long budget) {
  ModPScan scan = square_zero_mod_p_scan(g, mat_from(g.dim(), candidate), prime, budget);
  py::dict d;
  d["prime"] = scan.prime;
  d["square_zero_witnesses"] = scan.square_zero_witnesses;
  d["swept_dim"] = scan.swept_dim;
  d["matches_candidate"] = scan.matches_candidate;
  return d;
}

}  // namespace

PYBIND11_MODULE(nilchar, m) {
  m.doc() =
      "Exact-arithmetic toolkit for characteristic subalgebras of nilpotent "
      "Lie algebras over Q, with positive-root algebras of all split simple "
      "types. Rationals are passed as strings.";

  py::class_<RootSystem>(m, "RootSystem")
      .def_property_readonly("type", [](const RootSystem& rs) { return root_type_str(rs.type()); })
      .def_property_readonly("ambient_dim", &RootSystem::ambient_dim)
      .def_property_readonly("positive_count", &RootSystem::positive_count)
      .def_property_readonly("highest_index", &RootSystem::highest_index)
      .def("positive", [](const RootSystem& rs) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : rs.positive()) out.push_back(vec_to(v));
        return out;
      })
      .def("root_name", py::overload_cast<std::size_t>(&RootSystem::root_name, py::const_))
      .def("positive_index",
           [](const RootSystem& rs, const std::vector<std::string>& coords) {
             return rs.positive_index(vec_from(coords));
           })
      .def("z2_root_set", &RootSystem::z2_root_set)
      .def("z2_pairwise_sums_outside", &RootSystem::z2_pairwise_sums_outside)
      .def("two_alpha_beta_violations",
           [](const RootSystem& rs) { return rs.two_alpha_beta_violations(); })
      .def("__repr__", [](const RootSystem& rs) {
        return "<RootSystem " + root_type_str(rs.type()) + ", " +
               std::to_string(rs.positive_count()) + " positive roots>";
      });

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("labels", &LieAlgebra::labels)
      .def("basis_bracket",
           [](const LieAlgebra& g, std::size_t i, std::size_t j) {
             std::vector<std::pair<std::size_t, std::string>> out;
             for (const auto& [k, c] : g.basis_bracket(i, j)) out.emplace_back(k, c.str());
             return out;
           })
      .def("bracket",
           [](const LieAlgebra& g, const std::vector<std::string>& x,
              const std::vector<std::string>& y) {
             return vec_to(g.bracket(vec_from(x), vec_from(y)));
           })
      .def("nilpotency_class", &LieAlgebra::nilpotency_class)
      .def("center", [](const LieAlgebra& g) { return mat_to(g.center()); })
      .def("upper_central_series_dims",
           [](const LieAlgebra& g) {
             std::vector<std::size_t> dims;
             for (const auto& t : g.upper_central_series()) dims.push_back(t.rows());
             return dims;
           })
      .def("is_ideal",
           [](const LieAlgebra& g, const std::vector<std::vector<std::string>>& rows) {
             return g.is_ideal(mat_from(g.dim(), rows));
           })
      .def("is_abelian",
           [](const LieAlgebra& g, const std::vector<std::vector<std::string>>& rows) {
             return g.is_abelian(mat_from(g.dim(), rows));
           })
      .def("jacobi_ok", [](const LieAlgebra& g) { return g.jacobi_check().empty(); })
      .def("__repr__", [](const LieAlgebra& g) {
        return "<LieAlgebra dim " + std::to_string(g.dim()) + ">";
      });

  py::class_<GradedBasis>(m, "GradedBasis")
      .def_readonly("roots", &GradedBasis::roots)
      .def_readonly("algebra", &GradedBasis::algebra)
      .def("bracket_target", &GradedBasis::bracket_target)
      .def("bracket_coeff", [](const GradedBasis& nb, std::size_t i, std::size_t j) {
        return nb.bracket_coeff(i, j).str();
      });

  m.def("build_root_system",
        [](const std::string& type) { return RootSystem::build(parse_root_type(type)); },
        py::arg("type"), "Root system of a split simple type, e.g. 'B3' or 'e8'.");
  m.def("build_nplus",
        [](const std::string& type, bool chevalley) {
          RootType t = parse_root_type(type);
          return chevalley ? build_nplus_chevalley(t) : build_nplus(t);
        },
        py::arg("type"), py::arg("chevalley") = false,
        "Positive-root nilpotent algebra; chevalley=True picks the integer "
        "normalization instead of the matrix realization.");
  m.def("upper_triangular", &upper_triangular, py::arg("n"),
        "Strictly upper triangular n-by-n matrices under the commutator.");
  m.def("builtin_algebra", &builtin_algebra, py::arg("name"),
        "Bundled fixture by name, see builtin_names().");
  m.def("builtin_names", &builtin_names);
  m.def("from_table", &algebra_from_table, py::arg("dim"), py::arg("brackets"),
        py::arg("labels") = std::vector<std::string>{},
        "Algebra from 0-based quadruples (i, j, k, coeff) meaning "
        "[x_i, x_j] += coeff * x_k; Jacobi and nilpotency are enforced.");
  m.def("rescaled_basis",
        [](const LieAlgebra& g, const std::vector<std::string>& factors) {
          std::vector<Rational> fs;
          for (const auto& s : factors) fs.push_back(parse_q(s));
          return rescaled_basis(g, fs);
        },
        py::arg("algebra"), py::arg("factors"));
  m.def("permuted_basis", &permuted_basis, py::arg("algebra"), py::arg("permutation"));

  m.def("descent", &descent_dict, py::arg("algebra"),
        "Descending centralizer-of-second-center chain; keys dims, terms, stable.");
  m.def("sweep", &sweep_dict, py::arg("algebra"),
        "Square-zero kernel sweep; keys bound, trace, exact_center.");
  m.def("highest_root_reduction", &reduction_dict, py::arg("type"),
        "Coordinate shrink chain aiming at the highest-root line.");
  m.def("type_c_abelian_ideal", &type_c_dict, py::arg("graded"),
        "Span of the symmetric roots of a type C algebra, with its flags.");
  m.def("grid_scan", &grid_dict, py::arg("algebra"), py::arg("candidate"),
        py::arg("budget") = 10'000'000ULL,
        "Integer-grid scan for square-zero witnesses cutting the candidate.");
  m.def("mod_p_scan", &mod_p_dict, py::arg("algebra"), py::arg("candidate"), py::arg("prime"),
        py::arg("budget") = 10'000'000ULL,
        "Exhaustive mod-p sweep compared against the candidate.");
  m.def("z2_spans_second_center", &z2_spans_second_center, py::arg("graded"));

  m.def("to_json", [](const LieAlgebra& g) { return algebra_to_json(g).dump(2); },
        py::arg("algebra"), "Serialize to the JSON file format.");
  m.def("from_json",
        [](const std::string& text) { return algebra_from_json(nlohmann::json::parse(text)); },
        py::arg("text"), "Parse the JSON file format; all checks enforced.");
}
