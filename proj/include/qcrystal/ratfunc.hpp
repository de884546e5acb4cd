#pragma once

#include <limits>
#include <optional>
#include <string>

#include "qcrystal/poly.hpp"

namespace qcrystal {
namespace ratfield {

struct division_by_zero : std::domain_error {
  division_by_zero() : std::domain_error("division by zero in Q(t)") {}
};
struct not_in_a0_error : std::domain_error {
  explicit not_in_a0_error(const std::string& what) : std::domain_error(what) {}
};
struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// Element of Q(t) in canonical reduced form: gcd(num, den) = 1, den monic,
/// zero stored as 0/1.  Values are immutable in spirit: every operation
/// returns a fresh canonical value.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
  RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}   // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero();
    normalize();
  }
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}

  static RatFunc t() { return RatFunc(Poly::t()); }
  /// t^k for any integer k (negative powers allowed).
  static RatFunc t_pow(long k, const Rat& c = Rat(1)) {
    if (c == 0) return RatFunc();
    if (k >= 0) return RatFunc(Poly::t_pow(static_cast<std::size_t>(k), c));
    RatFunc r;
    r.num_ = Poly(c);
    r.den_ = Poly::t_pow(static_cast<std::size_t>(-k));
    return r;
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == Poly(Rat(1)); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// True when the denominator is a power of t, i.e. the value lies in
  /// the Laurent ring Q[t, t^-1].
  bool is_laurent() const { return den_.is_monomial() && den_.leading() == 1; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw division_by_zero();
    return RatFunc(den_, num_);
  }
  RatFunc pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc r(1), base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  /// ord_{t=0}; nullopt encodes +infinity (the zero element).
  std::optional<long> valuation_at_zero() const {
    if (is_zero()) return std::nullopt;
    return num_.ord_at_zero() - den_.ord_at_zero();
  }
  /// Membership in the local ring A0 = { f/g : g(0) != 0 }.
  bool is_in_a0() const {
    auto v = valuation_at_zero();
    return !v || *v >= 0;
  }
  /// True for valuation >= 1 (the maximal ideal t*A0).
  bool is_in_tA0() const {
    auto v = valuation_at_zero();
    return !v || *v >= 1;
  }
  /// True for elements of 1 + t*A0 (the units fixed by the crystal limit).
  bool is_unit_one_plus_tA0() const { return (*this - RatFunc(1)).is_in_tA0(); }

  /// Value at t = 0.  Defined exactly on A0.
  Rat limit_t0() const {
    if (!is_in_a0())
      throw not_in_a0_error("limit at t=0 of " + to_string() + ": valuation is negative");
    if (is_zero()) return Rat(0);
    Rat d0 = den_.coeff(0);
    return num_.coeff(0) / d0;  // reduced form guarantees d0 != 0 here
  }

  Rat eval_at(const Rat& q) const {
    Rat d = den_.eval(q);
    if (d == 0) throw pole_error("pole at t = " + rat_to_string(q) + " in " + to_string());
    return num_.eval(q) / d;
  }

  std::string to_string() const {
    if (den_.is_constant()) return num_.to_string();
    std::string n = num_.is_constant() || num_.is_monomial() ? num_.to_string()
                                                             : "(" + num_.to_string() + ")";
    return n + "/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(Rat(1));
      return;
    }
    // Common t-power first; it is the frequent case and keeps gcds small.
    long v = std::min(num_.ord_at_zero(), den_.ord_at_zero());
    if (v > 0) {
      num_ = num_.shifted(-v);
      den_ = den_.shifted(-v);
    }
    if (!den_.is_constant() && !num_.is_constant()) {
      Poly g = Poly::gcd(num_, den_);
      if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
      }
    }
    if (den_.leading() != 1) {
      Rat lc = Rat(1) / den_.leading();
      num_ = num_ * lc;
      den_ = den_ * lc;
    }
  }

  Poly num_, den_;
};

/// Balanced q-integer [k] = (t^k - t^-k)/(t - t^-1) as a Laurent polynomial.
inline RatFunc q_int(long k) {
  if (k == 0) return RatFunc();
  Poly num;
  for (long j = 0; j < k; ++j) num = num + Poly::t_pow(static_cast<std::size_t>(2 * j));
  return RatFunc(num, Poly::t_pow(static_cast<std::size_t>(k - 1)));
}

inline RatFunc q_factorial(long k) {
  RatFunc r(1);
  for (long j = 2; j <= k; ++j) r *= q_int(j);
  return r;
}

}  // namespace ratfield

using ratfield::pole_error;
using ratfield::q_factorial;
using ratfield::q_int;
using ratfield::RatFunc;

}  // namespace qcrystal
