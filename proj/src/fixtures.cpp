#include "nilchar/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilchar/chevalley.hpp"

namespace nilchar {
namespace {

SparseVec unit(std::size_t k, long c = 1) { return {{k, Rational(c)}}; }

LieAlgebra example_6d() {
  StructureConstants c;
  c[{0, 1}] = unit(2);
  c[{0, 4}] = unit(5);
  c[{1, 2}] = unit(3);
  c[{1, 3}] = unit(4);
  c[{2, 3}] = unit(5);
  return LieAlgebra::from_constants(6, {}, c);
}

LieAlgebra heisenberg() {
  StructureConstants c;
  c[{0, 1}] = unit(2);
  return LieAlgebra::from_constants(3, {}, c);
}

LieAlgebra filiform(std::size_t n) {
  if (n < 3) throw std::invalid_argument("filiform algebras need dimension >= 3");
  StructureConstants c;
  for (std::size_t j = 1; j + 1 < n; ++j) c[{0, j}] = unit(j + 1);
  return LieAlgebra::from_constants(n, {}, c);
}

LieAlgebra c2_presentation() {
  StructureConstants c;
  c[{0, 2}] = unit(3);
  c[{0, 3}] = unit(1);
  return LieAlgebra::from_constants(4, {"x0", "x1", "x2", "x3"}, c);
}

bool parse_suffix(const std::string& name, const std::string& prefix, std::size_t& out) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return false;
  std::string tail = name.substr(prefix.size());
  for (char ch : tail)
    if (ch < '0' || ch > '9') return false;
  if (tail.size() > 3) return false;
  out = static_cast<std::size_t>(std::stoul(tail));
  return true;
}

}  // namespace

LieAlgebra builtin_algebra(const std::string& name) {
  if (name == "example-6d") return example_6d();
  if (name == "heisenberg") return heisenberg();
  if (name == "c2-presentation") return c2_presentation();
  std::size_t n = 0;
  if (parse_suffix(name, "filiform-", n)) return filiform(n);
  if (parse_suffix(name, "upper-triangular-", n)) return upper_triangular(n);
  if (name.size() > 6 && name.compare(0, 6, "nplus-") == 0)
    return build_nplus(parse_root_type(name.substr(6))).algebra;
  std::string known;
  for (const auto& b : builtin_names()) known += " " + b;
  throw std::invalid_argument("unknown builtin algebra '" + name + "'; known:" + known);
}

std::vector<std::string> builtin_names() {
  return {"example-6d", "heisenberg", "filiform-<n>", "c2-presentation",
          "upper-triangular-<n>", "nplus-<type>"};
}

LieAlgebra rescaled_basis(const LieAlgebra& g, const std::vector<Rational>& factors) {
  if (factors.size() != g.dim())
    throw std::invalid_argument("rescaled_basis: factor count must match dimension");
  for (const auto& f : factors)
    if (f.is_zero()) throw std::invalid_argument("rescaled_basis: zero factor");
  StructureConstants out;
  for (const auto& [key, sv] : g.constants()) {
    SparseVec scaled;
    for (const auto& [k, c] : sv)
      scaled.emplace_back(k, c * factors[key.first] * factors[key.second] / factors[k]);
    out[key] = std::move(scaled);
  }
  return LieAlgebra::from_constants(g.dim(), g.labels(), out);
}

LieAlgebra permuted_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm) {
  std::size_t n = g.dim();
  if (perm.size() != n)
    throw std::invalid_argument("permuted_basis: permutation size must match dimension");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (perm[a] >= n || inverse[perm[a]] != n)
      throw std::invalid_argument("permuted_basis: not a permutation");
    inverse[perm[a]] = a;
  }
  StructureConstants out;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back(g.labels()[perm[a]]);
  for (const auto& [key, sv] : g.constants()) {
    std::size_t a = inverse[key.first], b = inverse[key.second];
    bool flip = a > b;
    if (flip) std::swap(a, b);
    SparseVec moved;
    for (const auto& [k, c] : sv) moved.emplace_back(inverse[k], flip ? -c : c);
    std::sort(moved.begin(), moved.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    out[{a, b}] = std::move(moved);
  }
  return LieAlgebra::from_constants(n, std::move(labels), out);
}

}  // namespace nilchar
