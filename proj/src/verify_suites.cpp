#include "nilchar/verify_suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "nilchar/fixtures.hpp"

using nlohmann::json;

namespace nilchar {
namespace {

QVector ev(std::size_t n, std::initializer_list<std::pair<int, long>> entries) {
  QVector v = zero_vector(n);
  for (const auto& [i, c] : entries) v[static_cast<std::size_t>(i)] = Rational(c);
  return v;
}

QMatrix coord_span(std::size_t dim, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<QVector> rows;
  for (std::size_t i : idx) {
    QVector r = zero_vector(dim);
    r[i] = Rational(1);
    rows.push_back(std::move(r));
  }
  return QMatrix::from_rows(dim, std::move(rows));
}

Report make_report(std::string id, std::string claim, bool pass, json data) {
  Report r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  r.pass = pass;
  r.data = std::move(data);
  return r;
}

std::vector<RootType> scope_types(int max_rank) {
  int m = std::max(max_rank, 2);
  std::vector<RootType> out;
  for (int n = 1; n <= m; ++n) out.push_back({RootFamily::A, n});
  for (int n = 2; n <= m; ++n) out.push_back({RootFamily::B, n});
  for (int n = 2; n <= m; ++n) out.push_back({RootFamily::C, n});
  for (int n = 4; n <= m; ++n) out.push_back({RootFamily::D, n});
  out.push_back({RootFamily::G, 2});
  out.push_back({RootFamily::F, 4});
  for (int n = 6; n <= m && n <= 8; ++n) out.push_back({RootFamily::E, n});
  return out;
}

std::size_t expected_positive_count(RootType t) {
  std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case RootFamily::A: return n * (n + 1) / 2;
    case RootFamily::B:
    case RootFamily::C: return n * n;
    case RootFamily::D: return n * (n - 1);
    case RootFamily::G: return 6;
    case RootFamily::F: return 24;
    case RootFamily::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
  }
  return 0;
}

std::size_t expected_class(RootType t) {
  std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case RootFamily::A: return n;
    case RootFamily::B:
    case RootFamily::C: return 2 * n - 1;
    case RootFamily::D: return 2 * n - 3;
    case RootFamily::G: return 5;
    case RootFamily::F: return 11;
    case RootFamily::E: return n == 6 ? 11 : (n == 7 ? 17 : 29);
  }
  return 0;
}

QVector expected_highest(RootType t) {
  std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case RootFamily::A: return ev(n + 1, {{0, 1}, {static_cast<int>(n), -1}});
    case RootFamily::B:
    case RootFamily::D: return ev(n, {{0, 1}, {1, 1}});
    case RootFamily::C: return ev(n, {{0, 2}});
    case RootFamily::G: return ev(2, {{0, 3}, {1, 2}});
    case RootFamily::F: return ev(4, {{0, 1}, {3, -1}});
    case RootFamily::E:
      if (n == 6) return ev(8, {{3, 1}, {7, -1}});
      if (n == 7) return ev(8, {{2, 1}, {7, -1}});
      return ev(8, {{0, 1}, {7, -1}});
  }
  return {};
}

// Closed forms for the roots spanning the second center, per family.
std::vector<QVector> expected_z2(const RootSystem& rs) {
  RootType t = rs.type();
  std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case RootFamily::A:
      if (n == 1) return {expected_highest(t)};
      if (n == 2) return {rs.positive()[0], rs.positive()[1], rs.positive()[2]};
      return {ev(n + 1, {{0, 1}, {static_cast<int>(n), -1}}),
              ev(n + 1, {{0, 1}, {static_cast<int>(n) - 1, -1}}),
              ev(n + 1, {{1, 1}, {static_cast<int>(n), -1}})};
    case RootFamily::B:
      if (n == 2) return {ev(2, {{0, 1}}), ev(2, {{0, 1}, {1, 1}})};
      return {ev(n, {{0, 1}, {1, 1}}), ev(n, {{0, 1}, {2, 1}})};
    case RootFamily::C:
      return {ev(n, {{0, 1}, {1, 1}}), ev(n, {{0, 2}})};
    case RootFamily::D:
      return {ev(n, {{0, 1}, {1, 1}}), ev(n, {{0, 1}, {2, 1}})};
    case RootFamily::G:
      return {ev(2, {{0, 3}, {1, 1}}), ev(2, {{0, 3}, {1, 2}})};
    case RootFamily::F:
      return {ev(4, {{0, 1}, {3, -1}}), ev(4, {{1, 1}, {3, -1}})};
    case RootFamily::E:
      if (n == 6) return {ev(8, {{3, 1}, {7, -1}}), ev(8, {{4, 1}, {7, -1}})};
      if (n == 7) return {ev(8, {{2, 1}, {7, -1}}), ev(8, {{3, 1}, {7, -1}})};
      return {ev(8, {{0, 1}, {7, -1}}), ev(8, {{1, 1}, {7, -1}})};
  }
  return {};
}

bool simply_laced(RootFamily f) {
  return f == RootFamily::A || f == RootFamily::D || f == RootFamily::E;
}

json dims_json(const std::vector<std::size_t>& dims) {
  json out = json::array();
  for (std::size_t d : dims) out.push_back(d);
  return out;
}

std::vector<std::size_t> ucs_dims(const LieAlgebra& g) {
  std::vector<std::size_t> out;
  for (const auto& term : g.upper_central_series()) out.push_back(term.rows());
  return out;
}

// ---------------------------------------------------------------- suites --

void suite_root_tables(const SuiteOptions& opt, std::vector<Report>& out) {
  for (RootType t : scope_types(opt.max_rank)) {
    std::string name = root_type_str(t);
    RootSystem rs = RootSystem::build(t);
    json data;
    data["type"] = name;

    bool ok_count = rs.positive_count() == expected_positive_count(t);
    data["positive_count"] = rs.positive_count();

    bool ok_highest = rs.highest_root() == expected_highest(t);
    data["highest"] = rs.root_name(rs.highest_index());

    std::vector<std::size_t> expect_idx;
    bool ok_z2 = true;
    for (const QVector& v : expected_z2(rs)) {
      auto idx = rs.positive_index(v);
      if (!idx) {
        ok_z2 = false;
        break;
      }
      expect_idx.push_back(*idx);
    }
    std::vector<std::size_t> got_idx = rs.z2_root_set();
    std::sort(expect_idx.begin(), expect_idx.end());
    std::sort(got_idx.begin(), got_idx.end());
    ok_z2 = ok_z2 && expect_idx == got_idx;
    json z2names = json::array();
    for (std::size_t i : got_idx) z2names.push_back(rs.root_name(i));
    data["second_center_roots"] = std::move(z2names);

    bool expect_pairwise = !(t.family == RootFamily::A && t.rank == 2);
    bool ok_pairwise = rs.z2_pairwise_sums_outside() == expect_pairwise;

    auto viol_full = rs.two_alpha_beta_violations();
    bool ok_viol = viol_full.empty() == simply_laced(t.family);
    data["two_alpha_beta_violations"] = viol_full.size();

    auto viol_z2 = rs.two_alpha_beta_violations(rs.z2_root_set());
    bool ok_viol_z2 = viol_z2.empty();
    data["two_alpha_beta_violations_on_z2"] = viol_z2.size();

    bool pass = ok_count && ok_highest && ok_z2 && ok_pairwise && ok_viol && ok_viol_z2;
    data["count_ok"] = ok_count;
    data["highest_ok"] = ok_highest;
    data["z2_ok"] = ok_z2;
    data["pairwise_ok"] = ok_pairwise;
    data["violations_ok"] = ok_viol;
    data["violations_on_z2_ok"] = ok_viol_z2;
    out.push_back(make_report(
        "root-tables/" + name,
        "positive system, highest root, and second-center roots of " + name +
            " match the closed forms",
        pass, std::move(data)));
  }
}

void suite_second_center(const SuiteOptions& opt, std::vector<Report>& out) {
  for (RootType t : scope_types(opt.max_rank)) {
    std::string name = root_type_str(t);
    GradedBasis nb = build_nplus(t);
    std::size_t dim = nb.dim();
    json data;
    data["type"] = name;
    data["dim"] = dim;

    bool ok_center = same_row_space(nb.algebra.center(),
                                    coord_span(dim, {nb.roots.highest_index()}));
    bool ok_span = z2_spans_second_center(nb);
    std::size_t z2_dim = nb.algebra.upper_central_series(2).back().rows();
    bool ok_dim = z2_dim == nb.roots.z2_root_set().size();
    bool ok_class = nb.algebra.nilpotency_class() == expected_class(t);
    data["second_center_dim"] = z2_dim;
    data["class"] = nb.algebra.nilpotency_class();
    data["center_ok"] = ok_center;
    data["span_ok"] = ok_span;
    data["class_ok"] = ok_class;
    out.push_back(make_report(
        "second-center/" + name,
        "center and second center of the " + name +
            " positive-root algebra are spanned by the distinguished roots",
        ok_center && ok_span && ok_dim && ok_class, std::move(data)));
  }
}

void suite_kernel_sweep(const SuiteOptions& opt, std::vector<Report>& out) {
  for (RootType t : scope_types(opt.max_rank)) {
    std::string name = root_type_str(t);
    GradedBasis nb = build_nplus(t);
    std::size_t dim = nb.dim();
    SweepResult sweep = square_zero_sweep(nb.algebra);
    ShrinkChainResult chain = highest_root_reduction(t);
    json data;
    data["type"] = name;
    data["bound_dim"] = sweep.bound.rows();
    data["exact_center"] = sweep.exact_center;
    data["refused"] = chain.refused;

    bool symplectic_like =
        t.family == RootFamily::C || (t.family == RootFamily::B && t.rank == 2);
    if (!symplectic_like) {
      bool ok = !chain.refused && chain.reached_highest_line;
      ok = ok && sweep.exact_center &&
           same_row_space(sweep.bound, coord_span(dim, {nb.roots.highest_index()}));
      data["shrink_steps"] = chain.steps.size();
      out.push_back(make_report(
          "kernel-sweep/" + name,
          "square-zero kernel sweep on " + name + " pins the highest root line",
          ok, std::move(data)));
    } else {
      bool ok = chain.refused && !chain.reason.empty() && !sweep.exact_center;
      if (t.family == RootFamily::C) {
        TypeCIdeal ideal = type_c_abelian_ideal(nb);
        std::size_t n = static_cast<std::size_t>(t.rank);
        ok = ok && ideal.abelian && ideal.ideal && ideal.maximal_abelian;
        ok = ok && ideal.root_indices.size() == n * (n + 1) / 2;
        ok = ok && same_row_space(sweep.bound, ideal.subspace);
        data["ideal_dim"] = ideal.root_indices.size();
      } else {
        ok = ok && sweep.bound.rows() == 3 && nb.algebra.is_abelian(sweep.bound) &&
             nb.algebra.is_ideal(sweep.bound);
      }
      out.push_back(make_report(
          "kernel-sweep/" + name,
          "square-zero kernel sweep on " + name +
              " stabilizes at a maximal abelian ideal above the center",
          ok, std::move(data)));
    }
  }
}

void suite_descent(const SuiteOptions& opt, std::vector<Report>& out) {
  // Hand-checked stabilization values for small ranks: dims of the chain and
  // the basis indices spanning the stable term.
  std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      pinned = {
          {"A1", {{1}, {0}}},
          {"A2", {{3, 1}, {2}}},
          {"A3", {{6, 4}, {1, 2, 4, 5}}},
          {"B2", {{4, 3}, {1, 2, 3}}},
          {"C2", {{4, 3}, {0, 2, 3}}},
          {"G2", {{6, 5, 3}, {3, 4, 5}}},
      };
  for (RootType t : scope_types(opt.max_rank)) {
    std::string name = root_type_str(t);
    GradedBasis nb = build_nplus(t);
    DescentChain chain = second_center_descent(nb.algebra);
    json data;
    data["type"] = name;
    data["dims"] = dims_json(chain.dims());

    bool ok = true;
    for (const QMatrix& term : chain.terms) ok = ok && nb.algebra.is_ideal(term);
    ok = ok && nb.algebra.is_abelian(chain.stable());
    ok = ok && row_space_contains(chain.stable(), nb.algebra.center());
    data["structure_ok"] = ok;

    auto hit = pinned.find(name);
    if (hit != pinned.end()) {
      bool ok_pin = chain.dims() == hit->second.first &&
                    same_row_space(chain.stable(), coord_span(nb.dim(), hit->second.second));
      data["pinned_ok"] = ok_pin;
      ok = ok && ok_pin;
    }
    out.push_back(make_report(
        "descent/" + name,
        "second-center centralizer descent on " + name +
            " stabilizes at an abelian ideal containing the center",
        ok, std::move(data)));
  }
}

void suite_example_6d(const SuiteOptions& opt, std::vector<Report>& out) {
  LieAlgebra g = builtin_algebra("example-6d");

  {
    json data;
    bool ok = g.nilpotency_class() == 5;
    std::vector<std::size_t> dims = ucs_dims(g);
    ok = ok && dims == std::vector<std::size_t>{1, 2, 3, 4, 6};
    ok = ok && same_row_space(g.center(), coord_span(6, {5}));
    data["ucs_dims"] = dims_json(dims);
    out.push_back(make_report("example-6d/series",
                              "upper central series of the six-dimensional example "
                              "has dims 1,2,3,4,6 and class 5",
                              ok, std::move(data)));
  }
  {
    DescentChain chain = second_center_descent(g);
    json data;
    data["dims"] = dims_json(chain.dims());
    bool ok = chain.dims() == std::vector<std::size_t>{6, 5, 3};
    ok = ok && same_row_space(chain.terms[1], coord_span(6, {1, 2, 3, 4, 5}));
    ok = ok && same_row_space(chain.stable(), coord_span(6, {3, 4, 5}));
    ok = ok && g.is_ideal(chain.stable()) && g.is_abelian(chain.stable());
    out.push_back(make_report("example-6d/descent",
                              "centralizer descent stabilizes at the span of the last "
                              "three basis vectors",
                              ok, std::move(data)));
  }
  SweepResult sweep = square_zero_sweep(g);
  {
    json data = sweep_certificate(g, sweep);
    std::vector<std::pair<std::size_t, std::size_t>> expect = {
        {0, 4}, {2, 3}, {3, 2}, {4, 1}};
    bool ok = sweep.trace.size() == expect.size();
    for (std::size_t k = 0; ok && k < expect.size(); ++k)
      ok = sweep.trace[k].witness == expect[k].first &&
           sweep.trace[k].dim_after == expect[k].second;
    ok = ok && sweep.exact_center && same_row_space(sweep.bound, coord_span(6, {5}));
    out.push_back(make_report("example-6d/sweep",
                              "square-zero kernel sweep cuts 6 -> 4 -> 3 -> 2 -> 1 and "
                              "pins the center",
                              ok, std::move(data)));
  }
  {
    StructureConstants bad;
    bad[{0, 1}] = {{2, Rational(1)}};
    bad[{0, 4}] = {{5, Rational(1)}};
    bad[{1, 2}] = {{3, Rational(1)}};
    bad[{1, 3}] = {{5, Rational(1)}};  // retargeted bracket breaks the identity
    bad[{2, 3}] = {{5, Rational(1)}};
    json data;
    bool ok = false;
    try {
      LieAlgebra::from_constants(6, {}, bad);
    } catch (const JacobiError& e) {
      ok = e.i == 0 && e.j == 1 && e.k == 3;
      data["triple"] = json::array({e.i + 1, e.j + 1, e.k + 1});
    } catch (const LieAlgebraError&) {
      ok = false;
    }
    out.push_back(make_report("example-6d/jacobi-gate",
                              "retargeting one bracket is rejected by the Jacobi check "
                              "at the witness triple",
                              ok, std::move(data)));
  }
  {
    GridScan grid = square_zero_grid_scan(g, sweep.bound, opt.scan_budget);
    ModPScan modp = square_zero_mod_p_scan(g, sweep.bound, 5, opt.scan_budget);
    json data;
    data["grid"] = grid_certificate(grid);
    data["mod_p"] = mod_p_certificate(modp);
    bool ok = grid.radius == 2 && grid.violations.empty();
    ok = ok && modp.matches_candidate && modp.swept_dim == 1;
    out.push_back(make_report("example-6d/scans",
                              "integer-grid and F_5 scans confirm the center as the "
                              "square-zero kernel intersection",
                              ok, std::move(data)));
  }
}

void suite_upper_triangular(const SuiteOptions& opt, std::vector<Report>& out) {
  (void)opt;
  // Stable descent values, hand-checked for n = 4, 5: the upper-right block
  // spanned by E_ij with i <= k, j >= n + 1 - k for k = floor(n/2).
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      pinned = {
          {4, {{6, 4}, {1, 2, 3, 4}}},
          {5, {{10, 8, 4}, {2, 3, 5, 6}}},
          {6, {{15, 13, 9}, {2, 3, 4, 6, 7, 8, 9, 10, 11}}},
      };
  for (std::size_t n = 3; n <= 6; ++n) {
    LieAlgebra g = upper_triangular(n);
    std::size_t dim = n * (n - 1) / 2;
    json data;
    data["n"] = n;
    data["dim"] = dim;

    bool ok = g.nilpotency_class() == n - 1;
    ok = ok && same_row_space(g.center(), coord_span(dim, {n - 2}));

    SweepResult sweep = square_zero_sweep(g);
    ok = ok && sweep.exact_center;
    data["sweep_steps"] = sweep.trace.size();

    DescentChain chain = second_center_descent(g);
    data["descent_dims"] = dims_json(chain.dims());
    bool structural = g.is_abelian(chain.stable());
    for (const QMatrix& term : chain.terms) structural = structural && g.is_ideal(term);
    ok = ok && structural;

    auto hit = pinned.find(n);
    if (hit != pinned.end()) {
      bool ok_pin = chain.dims() == hit->second.first &&
                    same_row_space(chain.stable(), coord_span(dim, hit->second.second));
      data["pinned_ok"] = ok_pin;
      ok = ok && ok_pin;
    }
    out.push_back(make_report(
        "upper-triangular/" + std::to_string(n),
        "strictly upper triangular " + std::to_string(n) + "x" + std::to_string(n) +
            ": sweep pins the center, descent stabilizes at the upper-right block",
        ok, std::move(data)));
  }
}

json invariant_fingerprint(const LieAlgebra& g) {
  json out;
  out["dim"] = g.dim();
  out["class"] = g.nilpotency_class();
  out["center_dim"] = g.center().rows();
  out["ucs_dims"] = dims_json(ucs_dims(g));
  DescentChain chain = second_center_descent(g);
  out["descent_dims"] = dims_json(chain.dims());
  SweepResult sweep = square_zero_sweep(g);
  out["sweep_bound_dim"] = sweep.bound.rows();
  out["sweep_exact"] = sweep.exact_center;
  return out;
}

void suite_basis_independence(const SuiteOptions& opt, std::vector<Report>& out) {
  (void)opt;
  auto compare = [&](const std::string& id, const std::string& claim,
                     const LieAlgebra& a, const LieAlgebra& b) {
    json fa = invariant_fingerprint(a);
    json fb = invariant_fingerprint(b);
    json data;
    data["first"] = fa;
    data["second"] = fb;
    out.push_back(make_report("basis-independence/" + id, claim, fa == fb,
                              std::move(data)));
  };

  compare("c2-presentation",
          "scrambled presentation of the rank-2 symplectic algebra has the "
          "invariants of the lex-ordered one",
          builtin_algebra("c2-presentation"), builtin_algebra("nplus-C2"));
  compare("heisenberg",
          "the Heisenberg algebra carries the invariants of the rank-2 "
          "special-linear positive-root algebra",
          builtin_algebra("heisenberg"), builtin_algebra("nplus-A2"));

  LieAlgebra six = builtin_algebra("example-6d");
  compare("rescaled-6d",
          "rescaling the six-dimensional example preserves every invariant",
          six,
          rescaled_basis(six, {Rational(1), Rational(2), Rational(3), Rational(1, 2),
                               Rational(1), Rational(6)}));
  compare("permuted-6d",
          "reversing the basis order of the six-dimensional example preserves "
          "every invariant",
          six, permuted_basis(six, {5, 4, 3, 2, 1, 0}));
  compare("rescaled-B3",
          "rescaling the rank-3 orthogonal positive-root algebra preserves "
          "every invariant",
          builtin_algebra("nplus-B3"),
          rescaled_basis(builtin_algebra("nplus-B3"),
                         {Rational(2), Rational(1), Rational(3), Rational(1, 3),
                          Rational(5), Rational(1), Rational(7), Rational(1, 2),
                          Rational(4)}));
}

void suite_scan_evidence(const SuiteOptions& opt, std::vector<Report>& out) {
  {
    GradedBasis nb = build_nplus({RootFamily::C, 2});
    TypeCIdeal ideal = type_c_abelian_ideal(nb);
    GridScan grid = square_zero_grid_scan(nb.algebra, ideal.subspace, opt.scan_budget);
    GridScan grid_full =
        square_zero_grid_scan(nb.algebra, nb.algebra.full_space(), opt.scan_budget);
    ModPScan p5 = square_zero_mod_p_scan(nb.algebra, ideal.subspace, 5, opt.scan_budget);
    ModPScan p7 = square_zero_mod_p_scan(nb.algebra, ideal.subspace, 7, opt.scan_budget);
    json data;
    data["grid"] = grid_certificate(grid);
    data["mod_5"] = mod_p_certificate(p5);
    data["mod_7"] = mod_p_certificate(p7);
    data["full_space_violations"] = grid_full.violations.size();
    bool ok = grid.radius == 2 && grid.samples == 312 && grid.violations.empty();
    ok = ok && !grid_full.violations.empty();
    ok = ok && p5.matches_candidate && p5.swept_dim == 3;
    ok = ok && p7.matches_candidate && p7.swept_dim == 3;
    out.push_back(make_report("scan-evidence/C2",
                              "grid and finite-field scans reproduce the C2 maximal "
                              "abelian ideal and cut the full space",
                              ok, std::move(data)));
  }
  {
    GradedBasis nb = build_nplus({RootFamily::C, 3});
    TypeCIdeal ideal = type_c_abelian_ideal(nb);
    ModPScan p3 = square_zero_mod_p_scan(nb.algebra, ideal.subspace, 3, opt.scan_budget);
    json data;
    data["mod_3"] = mod_p_certificate(p3);
    bool ok = p3.matches_candidate && p3.swept_dim == 6;
    out.push_back(make_report("scan-evidence/C3",
                              "the F_3 kernel intersection reproduces the C3 maximal "
                              "abelian ideal",
                              ok, std::move(data)));
  }
  {
    LieAlgebra g = builtin_algebra("heisenberg");
    ModPScan p7 = square_zero_mod_p_scan(g, g.center(), 7, opt.scan_budget);
    json data;
    data["mod_7"] = mod_p_certificate(p7);
    bool ok = p7.matches_candidate && p7.swept_dim == 1;
    out.push_back(make_report("scan-evidence/heisenberg",
                              "the F_7 kernel intersection reproduces the Heisenberg "
                              "center",
                              ok, std::move(data)));
  }
  {
    LieAlgebra g = builtin_algebra("filiform-5");
    SweepResult sweep = square_zero_sweep(g);
    GridScan grid = square_zero_grid_scan(g, sweep.bound, opt.scan_budget);
    ModPScan p11 = square_zero_mod_p_scan(g, sweep.bound, 11, opt.scan_budget);
    json data;
    data["grid"] = grid_certificate(grid);
    data["mod_11"] = mod_p_certificate(p11);
    bool ok = sweep.bound.rows() == 4 && !sweep.exact_center;
    ok = ok && grid.violations.empty();
    ok = ok && p11.matches_candidate && p11.swept_dim == 4;
    out.push_back(make_report("scan-evidence/filiform-5",
                              "scans confirm the filiform sweep bound strictly above "
                              "the center is already the full kernel intersection",
                              ok, std::move(data)));
  }
  {
    GradedBasis nb = build_nplus({RootFamily::B, 3});
    ModPScan p3 = square_zero_mod_p_scan(nb.algebra, nb.algebra.center(), 3,
                                         opt.scan_budget);
    json data;
    data["mod_3"] = mod_p_certificate(p3);
    bool ok = p3.matches_candidate && p3.swept_dim == 1;
    out.push_back(make_report("scan-evidence/B3",
                              "the F_3 kernel intersection over the rank-3 orthogonal "
                              "algebra pins the center",
                              ok, std::move(data)));
  }
}

using SuiteFn = std::function<void(const SuiteOptions&, std::vector<Report>&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"root-tables", suite_root_tables},
      {"second-center", suite_second_center},
      {"kernel-sweep", suite_kernel_sweep},
      {"descent", suite_descent},
      {"example-6d", suite_example_6d},
      {"upper-triangular", suite_upper_triangular},
      {"basis-independence", suite_basis_independence},
      {"scan-evidence", suite_scan_evidence},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : registry()) out.push_back(id);
  return out;
}

std::vector<Report> run_suite(const std::string& id, const SuiteOptions& opt) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) {
      std::vector<Report> out;
      fn(opt, out);
      return out;
    }
  }
  std::string known;
  for (const auto& [name, fn] : registry()) known += " " + name;
  throw std::invalid_argument("unknown suite '" + id + "'; known:" + known);
}

std::vector<Report> run_suites(const std::vector<std::string>& ids,
                               const SuiteOptions& opt) {
  std::vector<Report> out;
  if (ids.empty()) {
    for (const auto& [name, fn] : registry()) fn(opt, out);
    return out;
  }
  for (const std::string& id : ids) {
    std::vector<Report> part = run_suite(id, opt);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace nilchar
