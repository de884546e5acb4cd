#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

#include "qcrystal/ratfunc.hpp"

namespace qcrystal {
namespace soibelman {

/// Truncation of one sequence-space leg: either the half-line basis
/// e_0..e_{N-1} or the integer window e_{-M}..e_{M}.
struct TruncSpace {
  enum class Kind { HalfLine, Window };
  Kind kind = Kind::HalfLine;
  int cutoff = 16;  // N for the half line, M for the window

  static TruncSpace half_line(int n_cut) {
    if (n_cut < 4) throw std::invalid_argument("half-line cutoff must be >= 4");
    return {Kind::HalfLine, n_cut};
  }
  static TruncSpace window(int m_cut) {
    if (m_cut < 2) throw std::invalid_argument("window cutoff must be >= 2");
    return {Kind::Window, m_cut};
  }
  int dim() const { return kind == Kind::HalfLine ? cutoff : 2 * cutoff + 1; }
  /// Sequence label of a basis index (k for the half line, j for the window).
  long label(int index) const { return kind == Kind::HalfLine ? index : index - cutoff; }
};

/// Leading-order scalar c * q^e * (1 + O(q)).  Additions that cancel the
/// leading coefficients at equal exponents yield the indeterminate state
/// (second-order terms are not tracked), which downstream code resolves
/// by numeric fallback.
class Leading {
 public:
  enum class State { Zero, Known, Indeterminate };

  Leading() : state_(State::Zero) {}
  static Leading zero() { return Leading(); }
  static Leading known(Rat c, long e) {
    Leading l;
    if (c == 0) return l;
    l.state_ = State::Known;
    l.c_ = std::move(c);
    l.e_ = e;
    return l;
  }
  static Leading indeterminate() {
    Leading l;
    l.state_ = State::Indeterminate;
    return l;
  }
  /// Leading behaviour of an exact rational function as q -> 0+.
  static Leading of(const RatFunc& f) {
    auto v = f.valuation_at_zero();
    if (!v) return zero();
    // leading coefficient: numerator and denominator trailing coefficients
    Rat c = f.num().coeff(static_cast<std::size_t>(f.num().ord_at_zero())) /
            f.den().coeff(static_cast<std::size_t>(f.den().ord_at_zero()));
    return known(c, *v);
  }

  State state() const { return state_; }
  bool is_zero() const { return state_ == State::Zero; }
  bool is_indeterminate() const { return state_ == State::Indeterminate; }
  const Rat& coeff() const { return c_; }
  long exponent() const { return e_; }

  friend Leading operator*(const Leading& a, const Leading& b) {
    if (a.state_ == State::Zero || b.state_ == State::Zero) return zero();
    if (a.state_ == State::Indeterminate || b.state_ == State::Indeterminate)
      return indeterminate();
    Leading l;
    l.state_ = State::Known;
    l.e_ = a.e_ + b.e_;
    // unit coefficients dominate the operator tables; skip the multiply
    if (a.c_ == 1) {
      l.c_ = b.c_;
    } else if (b.c_ == 1) {
      l.c_ = a.c_;
    } else {
      l.c_ = a.c_ * b.c_;
    }
    return l;
  }
  friend Leading operator+(const Leading& a, const Leading& b) {
    if (a.state_ == State::Zero) return b;
    if (b.state_ == State::Zero) return a;
    if (a.state_ == State::Indeterminate || b.state_ == State::Indeterminate)
      return indeterminate();
    if (a.e_ < b.e_) return a;
    if (b.e_ < a.e_) return b;
    Rat c = a.c_ + b.c_;
    if (c == 0) return indeterminate();  // cancellation invalidates the leading term
    return known(std::move(c), a.e_);
  }
  Leading operator-() const {
    Leading l = *this;
    if (l.state_ == State::Known) l.c_ = -l.c_;
    return l;
  }
  friend bool operator==(const Leading& a, const Leading& b) {
    if (a.state_ != b.state_) return false;
    if (a.state_ != State::Known) return true;
    return a.e_ == b.e_ && a.c_ == b.c_;
  }

  struct Limit {
    enum class Kind { Finite, NegativeExponent, Indeterminate } kind;
    Rat value;  // meaningful for Finite (zero when e > 0)
  };
  Limit limit() const {
    switch (state_) {
      case State::Zero: return {Limit::Kind::Finite, Rat(0)};
      case State::Indeterminate: return {Limit::Kind::Indeterminate, Rat(0)};
      case State::Known:
        if (e_ < 0) return {Limit::Kind::NegativeExponent, Rat(0)};
        return {Limit::Kind::Finite, e_ > 0 ? Rat(0) : c_};
    }
    return {Limit::Kind::Indeterminate, Rat(0)};
  }

 private:
  State state_;
  Rat c_;
  long e_ = 0;
};

/// Scalar modes for operator assembly.  Each mode supplies the entry
/// values of the representation tables and the coefficient specialization.
struct FloatMode {
  using S = double;
  double q;
  static S zero() { return 0.0; }
  static bool is_zero(S x) { return x == 0.0; }
  S q_pow(long k) const { return std::pow(q, static_cast<double>(k)); }
  S sqrt_one_minus_q2k(long k) const {
    return k <= 0 ? 0.0 : std::sqrt(1.0 - std::pow(q, 2.0 * static_cast<double>(k)));
  }
  S coeff(const RatFunc& f) const {
    Rat qr(0);
    // evaluate through doubles: f = num/den at q
    double num = 0, den = 0, qq = 1;
    (void)qr;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max<long>(f.num().degree(), 0));
         ++k) {
      num += static_cast<double>(f.num().coeff(k)) * qq;
      qq *= q;
    }
    qq = 1;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max<long>(f.den().degree(), 0));
         ++k) {
      den += static_cast<double>(f.den().coeff(k)) * qq;
      qq *= q;
    }
    if (den == 0.0) throw pole_error("pole at the requested q");
    return num / den;
  }
};

struct ExactMode {
  using S = Rat;
  Rat q;
  static S zero() { return Rat(0); }
  static bool is_zero(const S& x) { return x == 0; }
  S q_pow(long k) const {
    if (k >= 0) {
      Rat r(1);
      for (long i = 0; i < k; ++i) r *= q;
      return r;
    }
    Rat r(1);
    for (long i = 0; i < -k; ++i) r /= q;
    return r;
  }
  S sqrt_one_minus_q2k(long k) const {
    if (k <= 0) return Rat(0);
    throw std::domain_error("square-root entry is irrational in exact mode");
  }
  S coeff(const RatFunc& f) const { return f.eval_at(q); }
};

struct LeadingMode {
  using S = Leading;
  static S zero() { return Leading::zero(); }
  static bool is_zero(const S& x) { return x.is_zero(); }
  S q_pow(long k) const { return Leading::known(Rat(1), k); }
  S sqrt_one_minus_q2k(long k) const {
    return k <= 0 ? Leading::zero() : Leading::known(Rat(1), 0);  // 1 + O(q^2)
  }
  S coeff(const RatFunc& f) const { return Leading::of(f); }
};

}  // namespace soibelman
}  // namespace qcrystal
