// Root systems of the split simple types in fixed coordinate realizations,
// with the positive system built in. Coordinates are exact rationals; G2
// lives on the lattice spanned by its two simple roots and carries the
// matching Gram matrix, every other family uses standard e_i coordinates
// with the dot product.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nilchar/qlinalg.hpp"

namespace nilchar {

enum class RootFamily { A, B, C, D, E, F, G };

struct RootType {
  RootFamily family;
  int rank;

  friend bool operator==(const RootType& a, const RootType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// "A5", "e8", "G2" and so on. Throws std::invalid_argument for anything
// outside the simple families or their rank ranges.
RootType parse_root_type(const std::string& s);
std::string root_type_str(RootType t);

class RootSystem {
public:
  static RootSystem build(RootType t);

  RootType type() const { return type_; }
  std::size_t ambient_dim() const { return ambient_; }

  // Positive roots in ascending lexicographic order. Basis indices of the
  // graded nilpotent algebras refer to this ordering.
  const std::vector<QVector>& positive() const { return positive_; }
  std::size_t positive_count() const { return positive_.size(); }
  const QVector& highest_root() const { return highest_; }
  std::size_t highest_index() const { return highest_idx_; }

  bool is_root(const QVector& v) const { return all_.count(v) != 0; }
  std::optional<std::size_t> positive_index(const QVector& v) const;

  // Index of positive_[i] + positive_[j] when that sum is a root (the sum of
  // two positive roots is positive whenever it is a root at all).
  std::optional<std::size_t> sum_index(std::size_t i, std::size_t j) const;

  // Pairs (alpha, beta) of positive-root indices with 2*alpha + beta a root;
  // beta ranges over psi when given, otherwise over all positive roots.
  std::vector<std::pair<std::size_t, std::size_t>> two_alpha_beta_violations(
      const std::optional<std::vector<std::size_t>>& psi = std::nullopt) const;

  // Indices of {beta positive : alpha + beta a root implies alpha + beta is
  // the highest root, for every positive alpha}.
  std::vector<std::size_t> z2_root_set() const;

  // beta + gamma lies outside the root system for every pair of distinct
  // members of z2_root_set().
  bool z2_pairwise_sums_outside() const;

  Rational inner(const QVector& a, const QVector& b) const;

  std::string root_name(const QVector& v) const;
  std::string root_name(std::size_t positive_idx) const;
  const std::vector<std::string>& coordinate_names() const { return coord_names_; }

private:
  RootType type_{RootFamily::A, 1};
  std::size_t ambient_ = 0;
  std::vector<QVector> positive_;
  std::unordered_map<QVector, std::size_t, QVectorHash> pos_index_;
  std::unordered_set<QVector, QVectorHash> all_;
  std::vector<std::vector<int>> sum_;
  QVector highest_;
  std::size_t highest_idx_ = 0;
  QMatrix gram_;
  std::vector<std::string> coord_names_;

  void finalize(std::vector<QVector> positive, std::size_t expected_count);
};

}  // namespace nilchar
