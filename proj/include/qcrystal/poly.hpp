#pragma once

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

#include "qcrystal/rat.hpp"

namespace qcrystal {
namespace ratfield {

/// Dense univariate polynomial over Q in the indeterminate t.
/// Invariant: coefficient vector is empty (zero polynomial) or has a
/// nonzero leading entry.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) {  // NOLINT: implicit scalar promotion is intended
    if (c != 0) c_.push_back(c);
  }
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static Poly t_pow(std::size_t k, const Rat& c = Rat(1)) {
    Poly p;
    if (c != 0) {
      p.c_.assign(k + 1, Rat(0));
      p.c_[k] = c;
    }
    return p;
  }
  static Poly t() { return t_pow(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t k = 0; k + 1 < c_.size(); ++k)
      if (c_[k] != 0) return false;
    return true;
  }
  /// Degree, with deg(0) = -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& leading() const {
    assert(!c_.empty());
    return c_.back();
  }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  /// Order of vanishing at t = 0; only meaningful for nonzero input.
  long ord_at_zero() const {
    assert(!c_.empty());
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) return static_cast<long>(k);
    return 0;  // unreachable
  }

  Poly shifted(long k) const {  // multiply by t^k, k >= -ord
    if (is_zero()) return Poly();
    Poly r;
    assert(k >= -ord_at_zero());
    if (k >= 0) {
      r.c_.assign(c_.size() + k, Rat(0));
      std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    } else {
      r.c_.assign(c_.begin() - k, c_.end());
    }
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] -= b.c_[k];
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_monomial()) return b.shifted(a.degree()) * a.leading();
    if (b.is_monomial()) return a.shifted(b.degree()) * b.leading();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Rat& s) {
    if (s == 0) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Total order on stored coefficients (degree first); used for map keys.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t k = a.c_.size(); k-- > 0;)
      if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    return false;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    assert(!b.is_zero());
    q = Poly();
    r = a;
    if (a.is_zero()) return;
    long db = b.degree();
    q.c_.assign(std::max<long>(a.degree() - db + 1, 0), Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
      long k = r.degree() - db;
      Rat f = r.leading() / b.leading();
      q.c_[k] = f;
      // r -= f * t^k * b
      for (long j = 0; j <= db; ++j) r.c_[k + j] -= f * b.c_[j];
      r.trim();
    }
    q.trim();
  }

  Rat eval(const Rat& q) const {  // Horner
    Rat v(0);
    for (std::size_t k = c_.size(); k-- > 0;) v = v * q + c_[k];
    return v;
  }

  /// Rational content: gcd of numerators over lcm of denominators, signed
  /// so the primitive part has positive leading coefficient.
  Rat content() const {
    assert(!c_.empty());
    BigInt g = 0, l = 1;
    for (const auto& c : c_) {
      if (c == 0) continue;
      g = boost::multiprecision::gcd(g, numerator(c) < 0 ? BigInt(-numerator(c)) : numerator(c));
      l = l / boost::multiprecision::gcd(l, denominator(c)) * denominator(c);
    }
    Rat r(g, l);
    return leading() < 0 ? -r : r;
  }
  Poly primitive_part() const {
    if (is_zero()) return Poly();
    return *this * (Rat(1) / content());
  }
  Poly monic() const {
    if (is_zero()) return Poly();
    return *this * (Rat(1) / leading());
  }

  /// Monic gcd via content-and-primitive-part Euclid over Q.
  static Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Poly x = a.primitive_part(), y = b.primitive_part();
    while (!y.is_zero()) {
      Poly q, r;
      divmod(x, y, q, r);
      x = y;
      y = r.is_zero() ? Poly() : r.primitive_part();
    }
    return x.monic();
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rat& c = c_[k];
      if (c == 0) continue;
      Rat ac = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (k == 0 || ac != 1) os << rat_to_string(ac);
      if (k > 0) {
        if (ac != 1) os << "*";
        os << "t";
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace ratfield

using ratfield::Poly;

}  // namespace qcrystal
