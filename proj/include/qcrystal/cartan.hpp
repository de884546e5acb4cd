#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qcrystal/ratfunc.hpp"

namespace qcrystal {
namespace cartan {

/// Type A_n Cartan datum.  The symmetrizer is trivial (d_i = 1), so the
/// symmetric form and the coroot pairing coincide on roots.
struct CartanData {
  int rank = 0;
  std::vector<std::vector<long>> a;  // Cartan matrix
  std::vector<long> d;               // symmetrizer, all 1 in type A
};

inline CartanData cartan_matrix(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  CartanData cd;
  cd.rank = n;
  cd.a.assign(n, std::vector<long>(n, 0));
  cd.d.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    cd.a[i][i] = 2;
    if (i + 1 < n) {
      cd.a[i][i + 1] = -1;
      cd.a[i + 1][i] = -1;
    }
  }
  return cd;
}

/// Integral weight in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<long> coords) : m_(std::move(coords)) {}
  static Weight zero(int n) { return Weight(std::vector<long>(n, 0)); }
  static Weight fundamental(int n, int i) {  // varpi_i, 1-based
    Weight w = zero(n);
    w.m_.at(i - 1) = 1;
    return w;
  }

  int rank() const { return static_cast<int>(m_.size()); }
  long operator[](int i) const { return m_.at(i); }  // 0-based coordinate
  const std::vector<long>& coords() const { return m_; }

  friend Weight operator+(const Weight& a, const Weight& b) {
    check_rank(a, b);
    Weight r = a;
    for (int i = 0; i < a.rank(); ++i) r.m_[i] += b.m_[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    check_rank(a, b);
    Weight r = a;
    for (int i = 0; i < a.rank(); ++i) r.m_[i] -= b.m_[i];
    return r;
  }
  friend Weight operator*(long s, const Weight& a) {
    Weight r = a;
    for (auto& c : r.m_) c *= s;
    return r;
  }
  Weight operator-() const { return -1 * *this; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.m_ < b.m_; }

  bool is_dominant() const {
    for (long c : m_)
      if (c < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (long c : m_)
      if (c != 0) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < m_.size(); ++i) os << (i ? "," : "") << m_[i];
    return os.str();
  }
  /// Parses comma-separated integer coordinates, e.g. "1,0".
  static Weight parse(const std::string& s) {
    std::vector<long> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) c.push_back(std::stol(tok));
    if (c.empty()) throw std::invalid_argument("empty weight literal");
    return Weight(std::move(c));
  }

 private:
  static void check_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  }
  std::vector<long> m_;
};

/// Simple root alpha_i (1-based) in fundamental coordinates: the i-th row
/// of the Cartan matrix.
inline Weight simple_root(int n, int i) {
  CartanData cd = cartan_matrix(n);
  std::vector<long> c(cd.a.at(i - 1));
  return Weight(std::move(c));
}

inline Weight rho(int n) { return Weight(std::vector<long>(n, 1)); }

/// Entry (i,j) of the inverse type-A Cartan matrix: min(i,j)(n+1-max(i,j))/(n+1).
inline Rat inverse_cartan_entry(int n, int i, int j) {
  long mn = std::min(i, j), mx = std::max(i, j);
  return Rat(mn * (n + 1 - mx), n + 1);
}

/// The symmetric bilinear form with (alpha_i, alpha_j) = a_ij and
/// (varpi_i, alpha_j) = delta_ij: the Gram matrix of the fundamental
/// weights is the inverse Cartan matrix.
inline Rat weight_pairing(const Weight& mu, const Weight& nu) {
  if (mu.rank() != nu.rank()) throw std::invalid_argument("weight rank mismatch");
  int n = mu.rank();
  Rat s(0);
  for (int i = 1; i <= n; ++i) {
    if (mu[i - 1] == 0) continue;
    for (int j = 1; j <= n; ++j)
      if (nu[j - 1] != 0) s += Rat(mu[i - 1] * nu[j - 1]) * inverse_cartan_entry(n, i, j);
  }
  return s;
}

/// weight_pairing specialized to arguments where the value is an integer
/// (differences of weights in one module against rho, etc).
inline long weight_pairing_int(const Weight& mu, const Weight& nu) {
  Rat v = weight_pairing(mu, nu);
  if (denominator(v) != 1) throw std::domain_error("non-integral pairing " + rat_to_string(v));
  return static_cast<long>(numerator(v));
}

/// <alpha^vee_i, mu>: the i-th fundamental coordinate (1-based i).
inline long coroot_pairing(int i, const Weight& mu) { return mu[i - 1]; }

inline Weight simple_reflection(int i, const Weight& mu) {
  return mu - coroot_pairing(i, mu) * simple_root(mu.rank(), i);
}

struct WeylWord {
  std::vector<int> letters;  // simple reflection indices, 1-based

  std::size_t length() const { return letters.size(); }
  static WeylWord parse(const std::string& s) {
    WeylWord w;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) w.letters.push_back(std::stoi(tok));
    return w;
  }
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? "," : "") << letters[i];
    return os.str();
  }
};

/// Applies s_{i_1} ... s_{i_k} to mu, rightmost letter first.
inline Weight weyl_apply(const WeylWord& w, const Weight& mu) {
  Weight r = mu;
  for (std::size_t k = w.letters.size(); k-- > 0;) r = simple_reflection(w.letters[k], r);
  return r;
}

inline std::vector<Weight> positive_roots(int n) {
  std::vector<Weight> roots;
  for (int i = 1; i <= n; ++i) {
    Weight r = Weight::zero(n);
    for (int j = i; j <= n; ++j) {
      r = r + simple_root(n, j);
      roots.push_back(r);
    }
  }
  return roots;
}

/// A word represents the longest element iff it maps every positive root
/// to a negative root (and has length n(n+1)/2).
inline bool is_longest_word(const WeylWord& w, int n) {
  if (w.length() != static_cast<std::size_t>(n) * (n + 1) / 2) return false;
  for (const Weight& r : positive_roots(n)) {
    Weight img = weyl_apply(w, r);
    bool negative = false;
    for (const Weight& p : positive_roots(n))
      if (img == -1 * p) {
        negative = true;
        break;
      }
    if (!negative) return false;
  }
  return true;
}

/// Staircase reduced expression s1 (s2 s1) (s3 s2 s1) ...
inline WeylWord longest_word(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  WeylWord w;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i >= 1; --i) w.letters.push_back(i);
  return w;
}

/// The duality involution -w0 on weights; coordinate reversal in type A.
inline Weight minus_w0(const Weight& mu) {
  std::vector<long> c(mu.coords().rbegin(), mu.coords().rend());
  return Weight(std::move(c));
}

/// -w0 computed through an explicit Weyl word; used to cross-check the
/// coordinate-reversal shortcut.
inline Weight minus_w0_via_word(const WeylWord& w0, const Weight& mu) {
  return -1 * weyl_apply(w0, mu);
}

}  // namespace cartan

using cartan::Weight;
using cartan::WeylWord;

}  // namespace qcrystal
