#include "nilchar/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nilchar {

namespace {

QVector evec(std::size_t n, std::size_t i, long c = 1) {
  QVector v = zero_vector(n);
  v[i] = Rational(c);
  return v;
}

QVector neg(const QVector& v) { return scale(Rational(-1), v); }

int popcount7(unsigned m) {
  int c = 0;
  for (; m; m >>= 1) c += static_cast<int>(m & 1);
  return c;
}

}  // namespace

RootType parse_root_type(const std::string& s) {
  if (s.size() < 2)
    throw std::invalid_argument("root type must be a family letter followed by a rank, e.g. B3");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("invalid rank in root type '" + s + "'");
  const int rank = std::stoi(s.substr(1));
  RootFamily fam;
  int lo = 1, hi = 1 << 20;
  switch (f) {
    case 'A': fam = RootFamily::A; lo = 1; break;
    case 'B': fam = RootFamily::B; lo = 2; break;
    case 'C': fam = RootFamily::C; lo = 2; break;
    case 'D': fam = RootFamily::D; lo = 4; break;
    case 'E': fam = RootFamily::E; lo = 6; hi = 8; break;
    case 'F': fam = RootFamily::F; lo = 4; hi = 4; break;
    case 'G': fam = RootFamily::G; lo = 2; hi = 2; break;
    default:
      throw std::invalid_argument("unknown root family '" + std::string(1, s[0]) + "'");
  }
  if (rank < lo || rank > hi)
    throw std::invalid_argument("rank " + std::to_string(rank) + " out of range for family " +
                                std::string(1, f));
  return RootType{fam, rank};
}

std::string root_type_str(RootType t) {
  const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

void RootSystem::finalize(std::vector<QVector> positive, std::size_t expected_count) {
  if (positive.size() != expected_count)
    throw std::logic_error("positive root count mismatch for " + root_type_str(type_) +
                           ": built " + std::to_string(positive.size()) + ", expected " +
                           std::to_string(expected_count));
  std::sort(positive.begin(), positive.end(), lex_less);
  positive_ = std::move(positive);
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (!pos_index_.emplace(positive_[i], i).second)
      throw std::logic_error("duplicate positive root in " + root_type_str(type_));
  }
  for (const auto& v : positive_) {
    if (pos_index_.count(neg(v)))
      throw std::logic_error("positive system contains an opposite pair in " +
                             root_type_str(type_));
    all_.insert(v);
    all_.insert(neg(v));
  }

  const std::size_t n = positive_.size();
  sum_.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      QVector s = add(positive_[i], positive_[j]);
      if (!all_.count(s)) continue;
      auto it = pos_index_.find(s);
      if (it == pos_index_.end())
        throw std::logic_error("sum of positive roots is a negative root in " +
                               root_type_str(type_));
      sum_[i][j] = sum_[j][i] = static_cast<int>(it->second);
    }

  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < n; ++i) {
    bool top = true;
    for (std::size_t j = 0; j < n && top; ++j)
      if (sum_[i][j] >= 0) top = false;
    if (top) maximal.push_back(i);
  }
  if (maximal.size() != 1)
    throw std::logic_error("positive system of " + root_type_str(type_) +
                           " does not have a unique highest root");
  highest_idx_ = maximal[0];
  highest_ = positive_[highest_idx_];
}

RootSystem RootSystem::build(RootType t) {
  RootSystem rs;
  rs.type_ = t;
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<QVector> pos;

  switch (t.family) {
    case RootFamily::A: {
      rs.ambient_ = n + 1;
      for (std::size_t i = 0; i < n + 1; ++i)
        for (std::size_t j = i + 1; j < n + 1; ++j)
          pos.push_back(sub(evec(n + 1, i), evec(n + 1, j)));
      rs.gram_ = QMatrix::identity(n + 1);
      rs.finalize(std::move(pos), n * (n + 1) / 2);
      break;
    }
    case RootFamily::B: {
      rs.ambient_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          pos.push_back(sub(evec(n, i), evec(n, j)));
          pos.push_back(add(evec(n, i), evec(n, j)));
        }
      for (std::size_t k = 0; k < n; ++k) pos.push_back(evec(n, k));
      rs.gram_ = QMatrix::identity(n);
      rs.finalize(std::move(pos), n * n);
      break;
    }
    case RootFamily::C: {
      rs.ambient_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          pos.push_back(sub(evec(n, i), evec(n, j)));
          pos.push_back(add(evec(n, i), evec(n, j)));
        }
      for (std::size_t k = 0; k < n; ++k) pos.push_back(evec(n, k, 2));
      rs.gram_ = QMatrix::identity(n);
      rs.finalize(std::move(pos), n * n);
      break;
    }
    case RootFamily::D: {
      rs.ambient_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          pos.push_back(sub(evec(n, i), evec(n, j)));
          pos.push_back(add(evec(n, i), evec(n, j)));
        }
      rs.gram_ = QMatrix::identity(n);
      rs.finalize(std::move(pos), n * (n - 1));
      break;
    }
    case RootFamily::E: {
      rs.ambient_ = 8;
      std::vector<QVector> e8;
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
          e8.push_back(sub(evec(8, i), evec(8, j)));
      for (std::size_t l = 0; l < 7; ++l)
        for (std::size_t m = l + 1; m < 7; ++m)
          e8.push_back(add(evec(8, l), evec(8, m)));
      for (std::size_t k = 0; k < 7; ++k)
        e8.push_back(neg(add(evec(8, k), evec(8, 7))));
      // Half-integer roots: e_8 coefficient -1/2, total minus count even.
      for (unsigned m = 0; m < 128; ++m) {
        if (popcount7(m) % 2 == 0) continue;
        QVector v(8, Rational(1, 2));
        for (std::size_t i = 0; i < 7; ++i)
          if (m & (1u << i)) v[i] = Rational(-1, 2);
        v[7] = Rational(-1, 2);
        e8.push_back(std::move(v));
      }
      const std::size_t eq = static_cast<std::size_t>(8 - t.rank);
      std::size_t expected = t.rank == 8 ? 120 : (t.rank == 7 ? 63 : 36);
      for (auto& v : e8) {
        bool keep = true;
        for (std::size_t i = 1; i <= eq && keep; ++i)
          if (v[i] != v[0]) keep = false;
        if (keep) pos.push_back(std::move(v));
      }
      rs.gram_ = QMatrix::identity(8);
      rs.finalize(std::move(pos), expected);
      break;
    }
    case RootFamily::F: {
      rs.ambient_ = 4;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          pos.push_back(sub(evec(4, i), evec(4, j)));
      for (std::size_t k = 0; k < 3; ++k) pos.push_back(evec(4, k));
      for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t m = l + 1; m < 3; ++m)
          pos.push_back(add(evec(4, l), evec(4, m)));
      for (std::size_t s = 0; s < 3; ++s)
        pos.push_back(neg(add(evec(4, s), evec(4, 3))));
      pos.push_back(evec(4, 3, -1));
      for (unsigned m = 0; m < 8; ++m) {
        QVector v(4, Rational(1, 2));
        for (std::size_t i = 0; i < 3; ++i)
          if (m & (1u << i)) v[i] = Rational(-1, 2);
        v[3] = Rational(-1, 2);
        pos.push_back(std::move(v));
      }
      rs.gram_ = QMatrix::identity(4);
      rs.finalize(std::move(pos), 24);
      break;
    }
    case RootFamily::G: {
      rs.ambient_ = 2;
      // Coordinates are coefficients on the simple roots delta (short) and
      // epsilon (long); the Gram matrix carries the actual geometry.
      const long coords[6][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
      for (const auto& c : coords) {
        QVector v = {Rational(c[0]), Rational(c[1])};
        pos.push_back(std::move(v));
      }
      rs.gram_ = QMatrix(2);
      rs.gram_.push_row({Rational(2), Rational(-3)});
      rs.gram_.push_row({Rational(-3), Rational(6)});
      rs.finalize(std::move(pos), 6);
      break;
    }
  }

  if (t.family == RootFamily::G) {
    rs.coord_names_ = {"δ", "ε"};
  } else {
    for (std::size_t i = 0; i < rs.ambient_; ++i)
      rs.coord_names_.push_back("e" + std::to_string(i + 1));
  }
  return rs;
}

std::optional<std::size_t> RootSystem::positive_index(const QVector& v) const {
  auto it = pos_index_.find(v);
  if (it == pos_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t i, std::size_t j) const {
  if (i >= positive_.size() || j >= positive_.size())
    throw std::invalid_argument("root index out of range in sum_index");
  int k = sum_[i][j];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

std::vector<std::pair<std::size_t, std::size_t>> RootSystem::two_alpha_beta_violations(
    const std::optional<std::vector<std::size_t>>& psi) const {
  std::vector<std::size_t> betas;
  if (psi) {
    for (std::size_t b : *psi) {
      if (b >= positive_.size())
        throw std::invalid_argument("root index out of range in two_alpha_beta_violations");
      betas.push_back(b);
    }
  } else {
    for (std::size_t b = 0; b < positive_.size(); ++b) betas.push_back(b);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < positive_.size(); ++a) {
    QVector two_alpha = scale(Rational(2), positive_[a]);
    for (std::size_t b : betas) {
      if (all_.count(add(two_alpha, positive_[b]))) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> RootSystem::z2_root_set() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < positive_.size(); ++b) {
    bool ok = true;
    for (std::size_t a = 0; a < positive_.size() && ok; ++a) {
      int s = sum_[a][b];
      if (s >= 0 && static_cast<std::size_t>(s) != highest_idx_) ok = false;
    }
    if (ok) out.push_back(b);
  }
  return out;
}

bool RootSystem::z2_pairwise_sums_outside() const {
  std::vector<std::size_t> z = z2_root_set();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (sum_[z[i]][z[j]] >= 0 || all_.count(add(positive_[z[i]], positive_[z[j]])))
        return false;
  return true;
}

Rational RootSystem::inner(const QVector& a, const QVector& b) const {
  if (a.size() != ambient_ || b.size() != ambient_)
    throw std::invalid_argument("vector dimension mismatch in inner");
  Rational out(0);
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (b[j].is_zero() || gram_.at(i, j).is_zero()) continue;
      out += a[i] * gram_.at(i, j) * b[j];
    }
  }
  return out;
}

std::string RootSystem::root_name(const QVector& v) const {
  bool halves = false;
  for (const auto& x : v)
    if (!x.is_zero() && !x.is_integer()) halves = true;
  QVector scaled = halves ? scale(Rational(2), v) : v;
  std::string body;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const Rational& c = scaled[i];
    if (c.is_zero()) continue;
    std::string piece;
    if (c.is_one())
      piece = coord_names_[i];
    else if (c == Rational(-1))
      piece = "-" + coord_names_[i];
    else
      piece = c.str() + coord_names_[i];
    if (!body.empty() && piece[0] != '-') body += "+";
    body += piece;
  }
  if (body.empty()) body = "0";
  if (halves) return "(" + body + ")/2";
  return body;
}

std::string RootSystem::root_name(std::size_t positive_idx) const {
  if (positive_idx >= positive_.size())
    throw std::invalid_argument("root index out of range in root_name");
  return root_name(positive_[positive_idx]);
}

}  // namespace nilchar
