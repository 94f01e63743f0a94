// Exact rational scalar backed by GMP. Values are always reduced with a
// positive denominator; the string form is "p" or "p/q" with q > 0.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nilchar {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts exactly the file grammar: optional sign, digits, optional
  // "/digits" with a positive denominator. Anything else is rejected.
  static std::optional<Rational> parse(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) return std::nullopt;
    bool has_den = false;
    if (i < s.size()) {
      if (s[i] != '/') return std::nullopt;
      std::size_t den_begin = ++i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      if (i == den_begin || i != s.size()) return std::nullopt;
      has_den = true;
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) return std::nullopt;
    if (has_den && sgn(v.get_den()) <= 0) return std::nullopt;
    v.canonicalize();
    return Rational(v);
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Residue num * den^{-1} mod p. Caller must rule out p | den first.
  bool den_divisible_by(unsigned long p) const {
    return mpz_divisible_ui_p(v_.get_den().get_mpz_t(), p) != 0;
  }
  unsigned long mod_p(unsigned long p) const {
    if (den_divisible_by(p))
      throw std::domain_error("denominator divisible by modulus");
    unsigned long n = mpz_fdiv_ui(v_.get_num().get_mpz_t(), p);
    unsigned long d = mpz_fdiv_ui(v_.get_den().get_mpz_t(), p);
    mpz_class dz(static_cast<signed long>(d)), inv;
    mpz_class pz(static_cast<signed long>(p));
    mpz_invert(inv.get_mpz_t(), dz.get_mpz_t(), pz.get_mpz_t());
    return (n * mpz_get_ui(inv.get_mpz_t())) % p;
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return v_; }

  std::size_t hash_value() const {
    auto mix = [](std::size_t h, const mpz_class& z) {
      std::size_t x = static_cast<std::size_t>(mpz_get_si(z.get_mpz_t()));
      return (h ^ x) * 1099511628211ULL;
    };
    std::size_t h = 1469598103934665603ULL;
    h = mix(h, v_.get_num());
    h = mix(h, v_.get_den());
    return h;
  }

private:
  mpq_class v_;
};

}  // namespace nilchar

template <>
struct std::hash<nilchar::Rational> {
  std::size_t operator()(const nilchar::Rational& r) const {
    return r.hash_value();
  }
};
