#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nilchar/char_subalg.hpp"
#include "nilchar/chevalley.hpp"
#include "nilchar/lie_algebra.hpp"
#include "nilchar/root_system.hpp"

namespace nilchar {

// On-disk algebra format. All indices are 1-based in the file:
//   {
//     "dim": 6,
//     "basis": ["x1", ...],                       optional, defaults to x1..xn
//     "brackets": [
//       {"i": 1, "j": 2, "coeffs": {"3": "1"}},   [b_i, b_j] = sum coeffs[k] b_k
//       ...
//     ],
//     "grading": {...}                            optional, informational only
//   }
// Coefficients are exact rationals written as strings ("-3/2").
nlohmann::json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const nlohmann::json& doc,
                             CheckPolicy policy = CheckPolicy::Strict);
LieAlgebra load_algebra_file(const std::string& path,
                             CheckPolicy policy = CheckPolicy::Strict);

// Graded algebra dump: the algebra plus a grading section mapping basis
// vectors to the positive roots that index them.
nlohmann::json graded_algebra_to_json(const GradedBasis& nb);

// Root system dump: positive roots with coordinates, names, highest root,
// the distinguished second-center roots, and the (2a+b) violation pairs.
nlohmann::json root_system_to_json(const RootSystem& rs);

// Certificates: machine-readable traces of how a subalgebra bound was
// obtained, so a reader can replay the computation.
nlohmann::json sweep_certificate(const LieAlgebra& g, const SweepResult& sweep);
nlohmann::json shrink_certificate(const ShrinkChainResult& chain);
nlohmann::json grid_certificate(const GridScan& scan);
nlohmann::json mod_p_certificate(const ModPScan& scan);

// One verification outcome. `data` carries check-specific payloads
// (dimensions, traces, certificates).
struct Report {
  std::string id;
  std::string claim;
  bool pass = false;
  nlohmann::json data;
};

nlohmann::json report_to_json(const Report& r);

// "pass id: claim" / "FAIL id: claim" single-line rendering.
std::string report_line(const Report& r);

}  // namespace nilchar
