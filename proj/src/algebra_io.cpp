#include "nilchar/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

using nlohmann::json;

namespace nilchar {
namespace {

json matrix_rows(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json vector_coords(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::size_t index_field(const json& obj, const char* key, std::size_t dim,
                        const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    throw std::invalid_argument(where + ": missing integer field '" + key + "'");
  long long raw = obj[key].get<long long>();
  if (raw < 1 || static_cast<unsigned long long>(raw) > dim)
    throw std::invalid_argument(where + ": index " + std::to_string(raw) +
                                " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(raw) - 1;
}

}  // namespace

json algebra_to_json(const LieAlgebra& g) {
  json doc;
  doc["dim"] = g.dim();
  doc["basis"] = g.labels();
  json brackets = json::array();
  for (const auto& [key, sv] : g.constants()) {
    json entry;
    entry["i"] = key.first + 1;
    entry["j"] = key.second + 1;
    json coeffs = json::object();
    for (const auto& [k, c] : sv) coeffs[std::to_string(k + 1)] = c.str();
    entry["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

LieAlgebra algebra_from_json(const json& doc, CheckPolicy policy) {
  if (!doc.is_object()) throw std::invalid_argument("algebra file: not a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw std::invalid_argument("algebra file: missing integer field 'dim'");
  long long rawdim = doc["dim"].get<long long>();
  if (rawdim < 1) throw std::invalid_argument("algebra file: dim must be positive");
  std::size_t dim = static_cast<std::size_t>(rawdim);

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array() || doc["basis"].size() != dim)
      throw std::invalid_argument("algebra file: 'basis' must list exactly dim labels");
    for (const auto& item : doc["basis"]) {
      if (!item.is_string())
        throw std::invalid_argument("algebra file: basis labels must be strings");
      labels.push_back(item.get<std::string>());
    }
  }

  StructureConstants constants;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array())
      throw std::invalid_argument("algebra file: 'brackets' must be an array");
    std::size_t n = 0;
    for (const auto& entry : doc["brackets"]) {
      std::string where = "brackets[" + std::to_string(n++) + "]";
      if (!entry.is_object())
        throw std::invalid_argument(where + ": not a JSON object");
      std::size_t i = index_field(entry, "i", dim, where);
      std::size_t j = index_field(entry, "j", dim, where);
      if (i >= j) throw std::invalid_argument(where + ": needs i < j");
      if (constants.count({i, j}))
        throw std::invalid_argument(where + ": duplicate pair");
      if (!entry.contains("coeffs") || !entry["coeffs"].is_object())
        throw std::invalid_argument(where + ": missing object field 'coeffs'");
      SparseVec sv;
      for (const auto& [key, val] : entry["coeffs"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          long long rawk = std::stoll(key, &used);
          if (used != key.size() || rawk < 1 ||
              static_cast<unsigned long long>(rawk) > dim)
            throw std::out_of_range(key);
          k = static_cast<std::size_t>(rawk) - 1;
        } catch (const std::exception&) {
          throw std::invalid_argument(where + ": bad coefficient index '" + key + "'");
        }
        if (!val.is_string())
          throw std::invalid_argument(where + ": coefficients must be rational strings");
        auto c = Rational::parse(val.get<std::string>());
        if (!c)
          throw std::invalid_argument(where + ": bad rational '" +
                                      val.get<std::string>() + "'");
        if (!c->is_zero()) sv.emplace_back(k, *c);
      }
      std::sort(sv.begin(), sv.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!sv.empty()) constants[{i, j}] = std::move(sv);
    }
  }
  return LieAlgebra::from_constants(dim, std::move(labels), constants, policy);
}

LieAlgebra load_algebra_file(const std::string& path, CheckPolicy policy) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("algebra file " + path + ": " + e.what());
  }
  return algebra_from_json(doc, policy);
}

json graded_algebra_to_json(const GradedBasis& nb) {
  json doc = algebra_to_json(nb.algebra);
  json grading;
  grading["root_type"] = root_type_str(nb.roots.type());
  grading["coordinates"] = nb.roots.coordinate_names();
  json names = json::array();
  json coords = json::array();
  for (std::size_t i = 0; i < nb.roots.positive_count(); ++i) {
    names.push_back(nb.roots.root_name(i));
    coords.push_back(vector_coords(nb.roots.positive()[i]));
  }
  grading["root_names"] = std::move(names);
  grading["root_coords"] = std::move(coords);
  grading["highest_index"] = nb.roots.highest_index() + 1;
  doc["grading"] = std::move(grading);
  return doc;
}

json root_system_to_json(const RootSystem& rs) {
  json doc;
  doc["root_type"] = root_type_str(rs.type());
  doc["ambient_dim"] = rs.ambient_dim();
  doc["coordinates"] = rs.coordinate_names();
  doc["positive_count"] = rs.positive_count();
  json positive = json::array();
  for (std::size_t i = 0; i < rs.positive_count(); ++i) {
    json entry;
    entry["index"] = i + 1;
    entry["name"] = rs.root_name(i);
    entry["coords"] = vector_coords(rs.positive()[i]);
    positive.push_back(std::move(entry));
  }
  doc["positive"] = std::move(positive);
  doc["highest_index"] = rs.highest_index() + 1;
  doc["highest_name"] = rs.root_name(rs.highest_index());

  json z2 = json::array();
  for (std::size_t idx : rs.z2_root_set()) z2.push_back(idx + 1);
  doc["second_center_roots"] = std::move(z2);
  doc["second_center_sums_outside"] = rs.z2_pairwise_sums_outside();

  json violations = json::array();
  for (const auto& [a, b] : rs.two_alpha_beta_violations())
    violations.push_back(json::array({a + 1, b + 1}));
  doc["two_alpha_beta_violations"] = std::move(violations);
  return doc;
}

json sweep_certificate(const LieAlgebra& g, const SweepResult& sweep) {
  json doc;
  doc["method"] = "square-zero-sweep";
  json trace = json::array();
  for (const auto& step : sweep.trace) {
    json entry;
    entry["witness_index"] = step.witness + 1;
    entry["witness"] = g.labels()[step.witness];
    entry["dim_after"] = step.dim_after;
    trace.push_back(std::move(entry));
  }
  doc["trace"] = std::move(trace);
  doc["bound_dim"] = sweep.bound.rows();
  doc["bound"] = matrix_rows(sweep.bound);
  doc["exact_center"] = sweep.exact_center;
  return doc;
}

json shrink_certificate(const ShrinkChainResult& chain) {
  json doc;
  doc["method"] = "graded-shrink";
  doc["refused"] = chain.refused;
  if (chain.refused) doc["reason"] = chain.reason;
  json steps = json::array();
  for (const auto& step : chain.steps) {
    json entry;
    entry["witness"] = step.witness + 1;
    json removed = json::array();
    for (std::size_t r : step.removed) removed.push_back(r + 1);
    entry["removed"] = std::move(removed);
    steps.push_back(std::move(entry));
  }
  doc["steps"] = std::move(steps);
  json fin = json::array();
  for (std::size_t r : chain.final_set) fin.push_back(r + 1);
  doc["final_set"] = std::move(fin);
  doc["reached_highest_line"] = chain.reached_highest_line;
  return doc;
}

json grid_certificate(const GridScan& scan) {
  json doc;
  doc["method"] = "integer-grid";
  doc["radius"] = scan.radius;
  doc["samples"] = scan.samples;
  doc["square_zero_witnesses"] = scan.square_zero_witnesses;
  json violations = json::array();
  for (const auto& v : scan.violations) {
    json entry;
    entry["witness"] = v.witness;
    entry["candidate_row"] = v.candidate_row + 1;
    violations.push_back(std::move(entry));
  }
  doc["violations"] = std::move(violations);
  return doc;
}

json mod_p_certificate(const ModPScan& scan) {
  json doc;
  doc["method"] = "finite-field";
  doc["prime"] = scan.prime;
  doc["square_zero_witnesses"] = scan.square_zero_witnesses;
  doc["swept_dim"] = scan.swept_dim;
  doc["matches_candidate"] = scan.matches_candidate;
  return doc;
}

json report_to_json(const Report& r) {
  json doc;
  doc["id"] = r.id;
  doc["claim"] = r.claim;
  doc["status"] = r.pass ? "pass" : "fail";
  doc["data"] = r.data;
  return doc;
}

std::string report_line(const Report& r) {
  return (r.pass ? std::string("pass ") : std::string("FAIL ")) + r.id + ": " + r.claim;
}

}  // namespace nilchar
