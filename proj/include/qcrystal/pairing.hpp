#pragma once

#include <map>

#include "qcrystal/fnalg.hpp"

namespace qcrystal {
namespace fnalg {

/// Monomial in the quantized enveloping algebra, written as a token word
/// acting on tensor powers of the vector representation.
struct UtToken {
  enum class Kind { E, F, K, Kinv };
  Kind kind;
  int i;  // 1-based generator index
};
using UtWord = std::vector<UtToken>;

namespace detail {

// Sparse vector on the product basis of V(varpi_1)^{(x) d}; indices are
// mixed-radix over digits 1..n+1 per leg (leftmost leg most significant).
using SparseVec = std::map<long, RatFunc>;

inline long pack(const std::vector<int>& digits, int base) {
  long idx = 0;
  for (int d : digits) idx = idx * base + (d - 1);
  return idx;
}

inline std::vector<int> unpack(long idx, int base, int legs) {
  std::vector<int> digits(legs);
  for (int p = legs - 1; p >= 0; --p) {
    digits[p] = static_cast<int>(idx % base) + 1;
    idx /= base;
  }
  return digits;
}

// (alpha_i, wt(e_a)) is +1 for a = i, -1 for a = i+1, else 0.
inline int alpha_weight(int i, int digit) {
  if (digit == i) return 1;
  if (digit == i + 1) return -1;
  return 0;
}

// Applies one generator through the iterated coproduct
// E_i -> sum_l 1 x ... x E_i x K_i^-1 x ... , F_i -> F x 1 / K x F.
inline SparseVec apply_token(const UtToken& tok, const SparseVec& v, int n, int legs) {
  SparseVec out;
  int base = n + 1;
  auto add = [&out](long idx, const RatFunc& c) {
    auto it = out.find(idx);
    if (it == out.end()) {
      out.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [idx, c] : v) {
    std::vector<int> digits = unpack(idx, base, legs);
    switch (tok.kind) {
      case UtToken::Kind::K:
      case UtToken::Kind::Kinv: {
        long s = 0;
        for (int d : digits) s += alpha_weight(tok.i, d);
        add(idx, c * RatFunc::t_pow(tok.kind == UtToken::Kind::K ? s : -s));
        break;
      }
      case UtToken::Kind::E: {
        for (int l = 0; l < legs; ++l) {
          if (digits[l] != tok.i + 1) continue;
          long s = 0;  // K_i^-1 tail on legs after l
          for (int p = l + 1; p < legs; ++p) s -= alpha_weight(tok.i, digits[p]);
          std::vector<int> nd = digits;
          nd[l] = tok.i;
          add(pack(nd, base), c * RatFunc::t_pow(s));
        }
        break;
      }
      case UtToken::Kind::F: {
        for (int l = 0; l < legs; ++l) {
          if (digits[l] != tok.i) continue;
          long s = 0;  // K_i head on legs before l
          for (int p = 0; p < l; ++p) s += alpha_weight(tok.i, digits[p]);
          std::vector<int> nd = digits;
          nd[l] = tok.i + 1;
          add(pack(nd, base), c * RatFunc::t_pow(s));
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Pairing of the single monomial u_{i_1 j_1} ... u_{i_d j_d} (any factor
/// order) against a U_t monomial: the (row, column) entry of the word
/// acting on V(varpi_1)^{(x) d}.
inline RatFunc evaluate_word_pairing(int n, const Word& w, const UtWord& a) {
  int legs = static_cast<int>(w.size());
  if (legs == 0) {
    // counit: 1 on K monomials, 0 once any E or F appears
    for (const auto& tok : a)
      if (tok.kind == UtToken::Kind::E || tok.kind == UtToken::Kind::F) return RatFunc();
    return RatFunc(1);
  }
  std::vector<int> rows(legs), cols(legs);
  for (int l = 0; l < legs; ++l) {
    rows[l] = w[l].i;
    cols[l] = w[l].j;
  }
  detail::SparseVec v{{detail::pack(cols, n + 1), RatFunc(1)}};
  for (std::size_t p = a.size(); p-- > 0;) {
    v = detail::apply_token(a[p], v, n, legs);
    if (v.empty()) return RatFunc();
  }
  auto it = v.find(detail::pack(rows, n + 1));
  return it == v.end() ? RatFunc() : it->second;
}

/// Pairing of a function-algebra element against a U_t monomial; this is
/// the representation-theoretic oracle used to validate the rewriting
/// system.  Monomials of different degrees pair through different tensor
/// powers, which is what makes D = 1 visible as the counit pattern.
inline RatFunc evaluate_pairing(int n, const FnAlgElem& x, const UtWord& a) {
  RatFunc out;
  for (const auto& [w, c] : x.terms()) out += c * evaluate_word_pairing(n, w, a);
  return out;
}

/// All monomials prod_i F_i^{f_i} prod_i K_i^{k_i} prod_i E_i^{e_i} with
/// exponents 0..max_exp per generator.
inline std::vector<UtWord> ut_monomial_family(int n, int max_exp) {
  std::vector<std::vector<int>> exps{{}};
  for (int g = 0; g < 3 * n; ++g) {
    std::vector<std::vector<int>> next;
    for (const auto& e : exps)
      for (int v = 0; v <= max_exp; ++v) {
        auto e2 = e;
        e2.push_back(v);
        next.push_back(std::move(e2));
      }
    exps = std::move(next);
  }
  std::vector<UtWord> family;
  family.reserve(exps.size());
  for (const auto& e : exps) {
    UtWord w;
    for (int i = 1; i <= n; ++i)
      for (int r = 0; r < e[i - 1]; ++r) w.push_back({UtToken::Kind::F, i});
    for (int i = 1; i <= n; ++i)
      for (int r = 0; r < e[n + i - 1]; ++r) w.push_back({UtToken::Kind::K, i});
    for (int i = 1; i <= n; ++i)
      for (int r = 0; r < e[2 * n + i - 1]; ++r) w.push_back({UtToken::Kind::E, i});
    family.push_back(std::move(w));
  }
  return family;
}

}  // namespace fnalg
}  // namespace qcrystal
