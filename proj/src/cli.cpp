#include "nilchar/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilchar/algebra_io.hpp"
#include "nilchar/fixtures.hpp"
#include "nilchar/verify_suites.hpp"

using nlohmann::json;

namespace nilchar {
namespace {

void write_or_print(const json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::invalid_argument("cannot write file: " + out_path);
  file << doc.dump(2) << "\n";
}

std::string join_coords(const RootSystem& rs, std::size_t idx) {
  std::string s = "(";
  const QVector& v = rs.positive()[idx];
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (c) s += ", ";
    s += v[c].str();
  }
  return s + ")";
}

int do_rootsys(const std::string& type_str, bool as_json, const std::string& out_path,
               std::ostream& out) {
  RootSystem rs = RootSystem::build(parse_root_type(type_str));
  if (as_json || !out_path.empty()) {
    write_or_print(root_system_to_json(rs), out_path, out);
    return 0;
  }
  std::string name = root_type_str(rs.type());
  out << name << ": " << rs.positive_count() << " positive roots in "
      << rs.ambient_dim() << " coordinates (";
  const auto& coords = rs.coordinate_names();
  for (std::size_t c = 0; c < coords.size(); ++c) out << (c ? ", " : "") << coords[c];
  out << ")\n";
  for (std::size_t i = 0; i < rs.positive_count(); ++i)
    out << "  " << (i + 1) << "\t" << rs.root_name(i) << "\t" << join_coords(rs, i)
        << "\n";
  out << "highest root: " << rs.root_name(rs.highest_index()) << " (index "
      << (rs.highest_index() + 1) << ")\n";
  out << "second-center roots:";
  for (std::size_t i : rs.z2_root_set()) out << " " << rs.root_name(i);
  out << "\n";
  out << "pairs (alpha, beta) with 2*alpha + beta a root: "
      << rs.two_alpha_beta_violations().size() << "\n";
  out << "second-center pairwise sums stay outside the system: "
      << (rs.z2_pairwise_sums_outside() ? "yes" : "no") << "\n";
  return 0;
}

struct LoadedAlgebra {
  LieAlgebra algebra;
  json file_doc;  // what --out writes: graded dump for types, plain otherwise
  std::string title;
};

LoadedAlgebra load_source(const std::string& type_str, const std::string& builtin,
                          const std::string& file) {
  int given = (!type_str.empty()) + (!builtin.empty()) + (!file.empty());
  if (given != 1)
    throw std::invalid_argument(
        "pick exactly one algebra source: --type, --builtin, or --file");
  if (!type_str.empty()) {
    GradedBasis nb = build_nplus(parse_root_type(type_str));
    return {nb.algebra, graded_algebra_to_json(nb),
            "nplus-" + root_type_str(nb.roots.type())};
  }
  if (!builtin.empty()) {
    LieAlgebra g = builtin_algebra(builtin);
    json doc = algebra_to_json(g);
    return {std::move(g), std::move(doc), builtin};
  }
  LieAlgebra g = load_algebra_file(file);
  json doc = algebra_to_json(g);
  return {std::move(g), std::move(doc), file};
}

json invariants_json(const LieAlgebra& g, const DescentChain& descent,
                     const SweepResult& sweep) {
  json inv;
  inv["dim"] = g.dim();
  inv["class"] = g.nilpotency_class();
  inv["center_dim"] = g.center().rows();
  json ucs = json::array();
  for (const auto& term : g.upper_central_series()) ucs.push_back(term.rows());
  inv["ucs_dims"] = std::move(ucs);
  json dd = json::array();
  for (std::size_t d : descent.dims()) dd.push_back(d);
  inv["descent_dims"] = std::move(dd);
  inv["sweep_bound_dim"] = sweep.bound.rows();
  inv["sweep_exact_center"] = sweep.exact_center;
  return inv;
}

void print_invariants(const LieAlgebra& g, const DescentChain& descent,
                      const SweepResult& sweep, std::ostream& out) {
  out << "class: " << g.nilpotency_class() << "\n";
  out << "center dim: " << g.center().rows() << "\n";
  out << "upper central series dims:";
  for (const auto& term : g.upper_central_series()) out << " " << term.rows();
  out << "\n";
  out << "second-center descent dims:";
  for (std::size_t d : descent.dims()) out << " " << d;
  out << "\n";
  out << "square-zero sweep: bound dim " << sweep.bound.rows()
      << (sweep.exact_center ? " (equals the center)" : " (above the center)");
  if (!sweep.trace.empty()) {
    out << ", trace:";
    for (const auto& step : sweep.trace)
      out << " " << g.labels()[step.witness] << "->" << step.dim_after;
  }
  out << "\n";
}

int do_algebra(const std::string& type_str, const std::string& builtin,
               const std::string& file, bool list, bool as_json,
               const std::string& out_path, std::ostream& out) {
  if (list) {
    for (const auto& name : builtin_names()) out << name << "\n";
    return 0;
  }
  LoadedAlgebra loaded = load_source(type_str, builtin, file);
  const LieAlgebra& g = loaded.algebra;
  DescentChain descent = second_center_descent(g);
  SweepResult sweep = square_zero_sweep(g);

  if (!out_path.empty()) {
    write_or_print(loaded.file_doc, out_path, out);
    return 0;
  }
  if (as_json) {
    json doc;
    doc["algebra"] = loaded.file_doc;
    doc["invariants"] = invariants_json(g, descent, sweep);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "algebra: " << loaded.title << " (dim " << g.dim() << ")\n";
  print_invariants(g, descent, sweep, out);
  if (g.dim() <= 10) {
    out << "brackets:\n";
    for (const auto& [key, sv] : g.constants()) {
      out << "  [" << g.labels()[key.first] << ", " << g.labels()[key.second] << "] =";
      bool first = true;
      for (const auto& [k, c] : sv) {
        out << (first ? " " : " + ");
        const std::string& label = g.labels()[k];
        bool wrap = label.find_first_of("+-") != std::string::npos;
        if (c == Rational(1))
          out << label;
        else if (c == Rational(-1))
          out << "-" << (wrap ? "(" + label + ")" : label);
        else
          out << c.str() << "*" << (wrap ? "(" + label + ")" : label);
        first = false;
      }
      out << "\n";
    }
  } else {
    out << "nonzero bracket pairs: " << g.constants().size() << "\n";
  }
  return 0;
}

int do_verify(const std::vector<std::string>& suites, int max_rank,
              unsigned long long budget, bool list, bool as_json, std::ostream& out) {
  if (list) {
    for (const auto& id : suite_ids()) out << id << "\n";
    return 0;
  }
  SuiteOptions opt;
  opt.max_rank = max_rank;
  opt.scan_budget = budget;
  std::vector<Report> reports = run_suites(suites, opt);
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failed;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << report_line(r) << "\n";
    out << reports.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

int do_explore(const std::string& type_str, const std::string& builtin,
               const std::string& file, unsigned long long budget, long prime,
               bool as_json, std::ostream& out) {
  LoadedAlgebra loaded = load_source(type_str, builtin, file);
  const LieAlgebra& g = loaded.algebra;
  DescentChain descent = second_center_descent(g);
  SweepResult sweep = square_zero_sweep(g);

  GridScan grid = square_zero_grid_scan(g, sweep.bound, budget);

  bool modp_ran = false;
  ModPScan modp;
  std::string modp_note;
  if (prime > 0) {
    modp = square_zero_mod_p_scan(g, sweep.bound, prime, budget);
    modp_ran = true;
  } else {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
      try {
        modp = square_zero_mod_p_scan(g, sweep.bound, p, budget);
        modp_ran = true;
        break;
      } catch (const std::exception& e) {
        modp_note = e.what();
      }
    }
  }

  bool bound_holds = grid.violations.empty();
  if (as_json) {
    json doc;
    doc["algebra"] = loaded.file_doc;
    doc["invariants"] = invariants_json(g, descent, sweep);
    doc["sweep"] = sweep_certificate(g, sweep);
    doc["grid"] = grid_certificate(grid);
    doc["mod_p"] = modp_ran ? mod_p_certificate(modp) : json(nullptr);
    if (!modp_ran && !modp_note.empty()) doc["mod_p_skipped"] = modp_note;
    doc["bound_confirmed_by_grid"] = bound_holds;
    out << doc.dump(2) << "\n";
  } else {
    out << "explore: " << loaded.title << " (dim " << g.dim() << ")\n";
    print_invariants(g, descent, sweep, out);
    out << "grid scan: radius " << grid.radius << ", " << grid.samples << " samples, "
        << grid.square_zero_witnesses << " square-zero witnesses, "
        << grid.violations.size() << " violations\n";
    if (modp_ran)
      out << "finite-field scan (p = " << modp.prime << "): swept dim "
          << modp.swept_dim << ", "
          << (modp.matches_candidate ? "matches the sweep bound"
                                     : "differs from the sweep bound")
          << "\n";
    else
      out << "finite-field scan skipped"
          << (modp_note.empty() ? "" : " (" + modp_note + ")") << "\n";
    out << "sweep bound survives the grid scan: " << (bound_holds ? "yes" : "NO")
        << "\n";
  }
  return bound_holds ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of nilpotent Lie algebras over Q"};
  app.name("nilchar");
  app.require_subcommand(1);

  auto* rootsys =
      app.add_subcommand("rootsys", "print a positive root system in fixed coordinates");
  std::string r_type;
  bool r_json = false;
  std::string r_out;
  rootsys->add_option("type", r_type, "root type, e.g. A3, B4, G2")->required();
  rootsys->add_flag("--json", r_json, "emit JSON");
  rootsys->add_option("--out", r_out, "write the JSON dump to a file");

  auto* algebra =
      app.add_subcommand("algebra", "build an algebra and print its invariants");
  std::string a_type, a_builtin, a_file, a_out;
  bool a_json = false, a_list = false;
  algebra->add_option("--type", a_type, "positive-root algebra of a simple type");
  algebra->add_option("--builtin", a_builtin, "builtin example algebra");
  algebra->add_option("--file", a_file, "load an algebra from a JSON file");
  algebra->add_flag("--list", a_list, "list the builtin algebra names");
  algebra->add_flag("--json", a_json, "emit JSON (algebra plus invariants)");
  algebra->add_option("--out", a_out, "write the algebra JSON to a file");

  auto* verify = app.add_subcommand("verify", "re-run the verification suites");
  std::vector<std::string> v_suites;
  int v_max_rank = 5;
  unsigned long long v_budget = 10'000'000ULL;
  bool v_json = false, v_list = false;
  verify->add_option("--suite", v_suites, "suite ids to run (default: all)");
  verify->add_option("--max-rank", v_max_rank, "classical-family rank ceiling")
      ->check(CLI::Range(2, 8));
  verify->add_option("--budget", v_budget, "sample budget for the scans");
  verify->add_flag("--json", v_json, "emit the reports as JSON");
  verify->add_flag("--list", v_list, "list the suite ids");

  auto* explore = app.add_subcommand(
      "explore", "compute invariants and scan evidence for one algebra");
  std::string e_type, e_builtin, e_file;
  unsigned long long e_budget = 10'000'000ULL;
  long e_prime = 0;
  bool e_json = false;
  explore->add_option("--type", e_type, "positive-root algebra of a simple type");
  explore->add_option("--builtin", e_builtin, "builtin example algebra");
  explore->add_option("--file", e_file, "load an algebra from a JSON file");
  explore->add_option("--budget", e_budget, "sample budget for the scans");
  explore->add_option("--prime", e_prime, "finite-field characteristic (default: auto)");
  explore->add_flag("--json", e_json, "emit JSON");

  std::vector<const char*> argv;
  argv.push_back("nilchar");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*rootsys) return do_rootsys(r_type, r_json, r_out, out);
    if (*algebra)
      return do_algebra(a_type, a_builtin, a_file, a_list, a_json, a_out, out);
    if (*verify) return do_verify(v_suites, v_max_rank, v_budget, v_list, v_json, out);
    if (*explore)
      return do_explore(e_type, e_builtin, e_file, e_budget, e_prime, e_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace nilchar
