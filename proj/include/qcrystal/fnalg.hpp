#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "qcrystal/ratfunc.hpp"

namespace qcrystal {
namespace fnalg {

/// Generator u_{i,j} of the quantized function algebra, 1-based indices.
struct Gen {
  int i = 0, j = 0;
  friend bool operator==(const Gen& a, const Gen& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(const Gen& a, const Gen& b) { return !(a == b); }
  friend bool operator<(const Gen& a, const Gen& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
  friend bool operator>(const Gen& a, const Gen& b) { return b < a; }
};

using Word = std::vector<Gen>;  // product of generators, arbitrary order

inline bool is_sorted_word(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p + 1] < w[p]) return false;
  return true;
}

/// Degree-then-lex order; total on words, used for canonical term maps.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (a[p] != b[p]) return a[p] < b[p];
    }
    return false;
  }
};

/// Element of the function algebra: finite map from normal-ordered
/// monomials to Q(t) coefficients, no zero coefficients stored.
class FnAlgElem {
 public:
  using Terms = std::map<Word, RatFunc, WordLess>;

  FnAlgElem() = default;
  static FnAlgElem unit(const RatFunc& c = RatFunc(1)) {
    FnAlgElem x;
    x.add(Word{}, c);
    return x;
  }

  void add(const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatFunc coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatFunc() : it->second;
  }

  friend FnAlgElem operator+(const FnAlgElem& a, const FnAlgElem& b) {
    FnAlgElem r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }
  friend FnAlgElem operator-(const FnAlgElem& a, const FnAlgElem& b) {
    FnAlgElem r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
  }
  friend FnAlgElem operator*(const RatFunc& s, const FnAlgElem& a) {
    FnAlgElem r;
    for (const auto& [w, c] : a.terms_) r.add(w, s * c);
    return r;
  }
  FnAlgElem operator-() const { return RatFunc(-1) * *this; }
  friend bool operator==(const FnAlgElem& a, const FnAlgElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FnAlgElem& a, const FnAlgElem& b) { return !(a == b); }

  /// Canonical normal-order text, e.g. "u(1,1)*u(1,2)^2 - t*u(2,1)".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string cs = c.to_string();
      bool negated = cs.size() > 1 && cs[0] == '-';
      if (first) {
        if (negated) os << "-";
        first = false;
      } else {
        os << (negated ? " - " : " + ");
      }
      if (negated) cs = cs.substr(1);
      bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
      bool coeff_is_one = cs == "1";
      if (!coeff_is_one || w.empty()) os << (needs_parens ? "(" + cs + ")" : cs);
      std::size_t p = 0;
      bool first_factor = coeff_is_one && !w.empty();
      while (p < w.size()) {
        std::size_t q = p;
        while (q < w.size() && w[q] == w[p]) ++q;
        if (!first_factor) os << "*";
        first_factor = false;
        os << "u(" << w[p].i << "," << w[p].j << ")";
        if (q - p > 1) os << "^" << (q - p);
        p = q;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Rewriting context for O_t(SL(n+1)) presented on the generators u_{i,j}
/// with the quantum-matrix straightening rules and the lazily imposed
/// determinant relation D = 1.  Normal order is row-major lexicographic;
/// the reduced monomials are the sorted words not containing the full
/// diagonal u_{1,1} u_{2,2} ... u_{n+1,n+1}.
///
/// Instances memoize monomial reductions and are not internally
/// synchronized; use one instance per thread.
class Algebra {
 public:
  explicit Algebra(int n, bool impose_det = true) : n_(n), impose_det_(impose_det) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
  }

  int rank() const { return n_; }
  int size() const { return n_ + 1; }  // matrix size n+1
  bool imposes_det() const { return impose_det_; }

  FnAlgElem one() const { return FnAlgElem::unit(); }
  FnAlgElem gen(int i, int j) const {
    check_index(i);
    check_index(j);
    FnAlgElem x;
    x.add(Word{Gen{i, j}}, RatFunc(1));
    return x;
  }

  /// Normal form of a raw word (with coefficient), fully reduced.
  FnAlgElem normal_form(const Word& w, const RatFunc& c = RatFunc(1)) const {
    FnAlgElem out;
    if (c.is_zero()) return out;
    FnAlgElem sorted = straighten(w);
    for (const auto& [m, cm] : sorted.terms()) {
      for (const auto& [m2, cm2] : reduce_sorted(m).terms()) out.add(m2, c * cm * cm2);
    }
    return out;
  }

  FnAlgElem normal_form(const FnAlgElem& x) const {
    FnAlgElem out;
    for (const auto& [w, c] : x.terms()) out = out + normal_form(w, c);
    return out;
  }

  FnAlgElem mul(const FnAlgElem& a, const FnAlgElem& b) const {
    FnAlgElem out;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out = out + normal_form(w, ca * cb);
      }
    return out;
  }

  FnAlgElem pow(const FnAlgElem& a, long k) const {
    FnAlgElem r = one();
    for (long x = 0; x < k; ++x) r = mul(r, a);
    return r;
  }

  /// Quantum determinant as the raw signed permutation sum (not reduced).
  FnAlgElem qdet_raw() const {
    FnAlgElem d;
    std::vector<int> perm(size());
    for (int i = 0; i < size(); ++i) perm[i] = i + 1;
    do {
      Word w;
      for (int i = 0; i < size(); ++i) w.push_back(Gen{i + 1, perm[i]});
      d.add(w, minus_t_pow(inversions(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return d;
  }

  FnAlgElem qdet() const { return normal_form(qdet_raw()); }

  /// Quantum cofactor: the signed minor over rows != r, columns != s.
  FnAlgElem cofactor(int r, int s) const {
    check_index(r);
    check_index(s);
    auto key = std::make_pair(r, s);
    auto it = cofactor_cache_.find(key);
    if (it != cofactor_cache_.end()) return it->second;
    std::vector<int> rows, cols;
    for (int k = 1; k <= size(); ++k) {
      if (k != r) rows.push_back(k);
      if (k != s) cols.push_back(k);
    }
    FnAlgElem out;
    std::vector<int> perm(rows.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    do {
      Word w;
      for (std::size_t k = 0; k < rows.size(); ++k) w.push_back(Gen{rows[k], cols[perm[k]]});
      out = out + normal_form(w, minus_t_pow(inversions(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    cofactor_cache_.emplace(key, out);
    return out;
  }

  /// Product-reversing, coefficient-fixing involution:
  /// (u_{r,s})* = (-t)^{s-r} cofactor(r, s).
  FnAlgElem star(const FnAlgElem& x) const {
    FnAlgElem out;
    for (const auto& [w, c] : x.terms()) {
      FnAlgElem prod = FnAlgElem::unit(c);
      for (std::size_t p = w.size(); p-- > 0;)
        prod = mul(prod, minus_t_pow(w[p].j - w[p].i) * cofactor(w[p].i, w[p].j));
      out = out + prod;
    }
    return out;
  }

  /// Antipode: anti-homomorphism with S(u_{i,j}) = (-t)^{i-j} cofactor(j, i),
  /// so that sum_k S(u_{i,k}) u_{k,j} = delta_ij.
  FnAlgElem antipode(const FnAlgElem& x) const {
    FnAlgElem out;
    for (const auto& [w, c] : x.terms()) {
      FnAlgElem prod = FnAlgElem::unit(c);
      for (std::size_t p = w.size(); p-- > 0;)
        prod = mul(prod, minus_t_pow(w[p].i - w[p].j) * cofactor(w[p].j, w[p].i));
      out = out + prod;
    }
    return out;
  }

  /// Normal form computed by applying admissible rewrite steps in an
  /// rng-chosen order; must agree with normal_form (confluence).
  FnAlgElem normal_form_randomized(const Word& w, std::mt19937_64& rng,
                                   const RatFunc& c = RatFunc(1)) const {
    FnAlgElem out;
    std::vector<std::pair<Word, RatFunc>> work{{w, c}};
    long steps = 0;
    while (!work.empty()) {
      auto [cur, coeff] = work.back();
      work.pop_back();
      if (++steps > step_cap_) throw std::runtime_error("rewriting step cap exceeded");
      // collect admissible positions (adjacent out-of-order pairs)
      std::vector<std::size_t> positions;
      for (std::size_t p = 0; p + 1 < cur.size(); ++p)
        if (cur[p + 1] < cur[p]) positions.push_back(p);
      if (!positions.empty()) {
        std::size_t p = positions[std::uniform_int_distribution<std::size_t>(
            0, positions.size() - 1)(rng)];
        apply_swap(cur, coeff, p, work);
        work.emplace_back(cur, coeff);
        continue;
      }
      if (impose_det_ && contains_diagonal(cur)) {
        substitute_diagonal(cur, coeff, work);
        continue;
      }
      out.add(cur, coeff);
    }
    return out;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("generator index out of range");
  }

  static long inversions(const std::vector<int>& perm) {
    long inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inv;
    return inv;
  }
  static RatFunc minus_t_pow(long k) {
    RatFunc r = RatFunc::t_pow(k);
    return (k % 2 == 0) ? r : -r;
  }

  // Rewrites the adjacent pair at position p (which must be out of order
  // or a deliberate same-direction exchange), mutating (w, c) into the
  // leading term and pushing any extra term onto the worklist.
  //
  //   same row / same column:  u_x u_y = t^{+/-1} u_y u_x
  //   antidiagonal cross:      u_x u_y = u_y u_x
  //   same direction:          u_{ij} u_{kl} = u_{kl} u_{ij}
  //                              + (t - t^-1) u_{il} u_{kj}   (i<k, j<l)
  void apply_swap(Word& w, RatFunc& c, std::size_t p,
                  std::vector<std::pair<Word, RatFunc>>& work) const {
    Gen x = w[p], y = w[p + 1];
    if (x == y) return;
    if (x.i == y.i) {
      c *= RatFunc::t_pow(x.j < y.j ? 1 : -1);
    } else if (x.j == y.j) {
      c *= RatFunc::t_pow(x.i < y.i ? 1 : -1);
    } else if ((x.i < y.i) != (x.j < y.j)) {
      // antidiagonal cross: plain exchange
    } else if (x.i < y.i) {
      // x strictly north-west of y: u_x u_y = u_y u_x + (t - 1/t) u_{x.i,y.j} u_{y.i,x.j}
      Word extra = w;
      extra[p] = Gen{x.i, y.j};
      extra[p + 1] = Gen{y.i, x.j};
      work.emplace_back(std::move(extra), c * t_minus_tinv());
    } else {
      // x strictly south-east of y: u_x u_y = u_y u_x - (t - 1/t) u_{y.i,x.j} u_{x.i,y.j}
      Word extra = w;
      extra[p] = Gen{y.i, x.j};
      extra[p + 1] = Gen{x.i, y.j};
      work.emplace_back(std::move(extra), -(c * t_minus_tinv()));
    }
    std::swap(w[p], w[p + 1]);
  }

  static const RatFunc& t_minus_tinv() {
    static const RatFunc v = RatFunc::t() - RatFunc::t_pow(-1);
    return v;
  }

  bool contains_diagonal(const Word& w) const {
    int need = size();
    std::vector<bool> seen(static_cast<std::size_t>(need) + 1, false);
    int cnt = 0;
    for (const Gen& g : w)
      if (g.i == g.j && !seen[g.i]) {
        seen[g.i] = true;
        ++cnt;
      }
    return cnt == need;
  }

  // Straightens a raw word into sorted monomials (quadratic rules only);
  // leftmost out-of-order pair first.
  FnAlgElem straighten(const Word& word) const {
    FnAlgElem out;
    std::vector<std::pair<Word, RatFunc>> work{{word, RatFunc(1)}};
    long steps = 0;
    while (!work.empty()) {
      auto [w, c] = std::move(work.back());
      work.pop_back();
      for (;;) {
        if (++steps > step_cap_) throw std::runtime_error("rewriting step cap exceeded");
        std::size_t p = 0;
        bool found = false;
        for (; p + 1 < w.size(); ++p)
          if (w[p + 1] < w[p]) {
            found = true;
            break;
          }
        if (!found) break;
        apply_swap(w, c, p, work);
      }
      out.add(w, c);
    }
    return out;
  }

  // Rearranges a sorted word containing the full diagonal so that one
  // occurrence of each u_{d,d} is contiguous (anchored at the middle
  // diagonal entry), then substitutes
  //   u_{1,1}...u_{n+1,n+1} = 1 - sum_{sigma != id} (-t)^{l(sigma)} m_sigma.
  // Same-direction swaps met along the way branch extra raw terms.
  void substitute_diagonal(const Word& w0, const RatFunc& c0,
                           std::vector<std::pair<Word, RatFunc>>& work) const {
    Word w = w0;
    RatFunc c = c0;
    int nn = size();
    int mid = (nn + 1) / 2;  // anchor entry (mid, mid)
    // positions of chosen occurrences (first occurrence of each (d,d))
    auto find_first = [&](int d, std::size_t from) {
      for (std::size_t p = from; p < w.size(); ++p)
        if (w[p].i == d && w[p].j == d) return p;
      throw std::logic_error("diagonal entry vanished during extraction");
    };
    std::size_t anchor = find_first(mid, 0);
    // entries below the anchor move right, packing just left of it
    for (int d = mid - 1; d >= 1; --d) {
      std::size_t pos = find_first(d, 0);
      while (pos + 1 < anchor) {
        apply_swap(w, c, pos, work);
        ++pos;
      }
      anchor = pos;  // block now starts here
    }
    // entries above the anchor move left, packing after the block
    std::size_t block_end = anchor + static_cast<std::size_t>(mid - 1);  // position of (mid,mid)
    for (int d = mid + 1; d <= nn; ++d) {
      std::size_t pos = find_first(d, block_end + 1);
      while (pos > block_end + 1) {
        apply_swap(w, c, pos - 1, work);
        --pos;
      }
      ++block_end;
    }
    // the block now occupies [anchor, anchor + nn)
    Word rest;
    rest.reserve(w.size() - static_cast<std::size_t>(nn));
    rest.insert(rest.end(), w.begin(), w.begin() + anchor);
    rest.insert(rest.end(), w.begin() + anchor + nn, w.end());
    work.emplace_back(rest, c);
    std::vector<int> perm(nn);
    for (int i = 0; i < nn; ++i) perm[i] = i + 1;
    while (std::next_permutation(perm.begin(), perm.end())) {
      Word term;
      term.reserve(w.size());
      term.insert(term.end(), w.begin(), w.begin() + anchor);
      for (int i = 0; i < nn; ++i) term.push_back(Gen{i + 1, perm[i]});
      term.insert(term.end(), w.begin() + anchor + nn, w.end());
      work.emplace_back(std::move(term), -(c * minus_t_pow(inversions(perm))));
    }
  }

  // Full reduction of a sorted monomial, memoized.
  const FnAlgElem& reduce_sorted(const Word& w) const {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    if (in_progress_.count(w)) throw std::runtime_error("reduction cycle detected");
    FnAlgElem out;
    if (!impose_det_ || !contains_diagonal(w)) {
      out.add(w, RatFunc(1));
    } else {
      in_progress_.insert(w);
      std::vector<std::pair<Word, RatFunc>> work;
      substitute_diagonal(w, RatFunc(1), work);
      for (const auto& [raw, c] : work) {
        FnAlgElem sorted = straighten(raw);
        for (const auto& [m, cm] : sorted.terms()) {
          for (const auto& [m2, cm2] : reduce_sorted(m).terms()) out.add(m2, c * cm * cm2);
        }
      }
      in_progress_.erase(w);
    }
    return cache_.emplace(w, std::move(out)).first->second;
  }

  int n_;
  bool impose_det_;
  long step_cap_ = 5'000'000;
  mutable std::map<Word, FnAlgElem, WordLess> cache_;
  mutable std::set<Word, WordLess> in_progress_;
  mutable std::map<std::pair<int, int>, FnAlgElem> cofactor_cache_;
};

}  // namespace fnalg
}  // namespace qcrystal
