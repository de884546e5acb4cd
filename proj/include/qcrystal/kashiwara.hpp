#pragma once

#include <algorithm>
#include <queue>

#include "qcrystal/rep.hpp"

namespace qcrystal {
namespace repth {

/// Kashiwara operators as Q(t)-linear maps, computed from the i-string
/// decomposition: u = sum_k F_i^{(k)} u_k with E_i u_k = 0, then
/// Ftilde u = sum_k F_i^{(k+1)} u_k and Etilde u = sum_k F_i^{(k-1)} u_k.
/// Divided powers use the balanced q-integers.
class KashiwaraOps {
 public:
  explicit KashiwaraOps(const Rep& rep) {
    int n = rep.rank, d = rep.dim();
    ft_.reserve(n);
    et_.reserve(n);
    for (int i = 1; i <= n; ++i) {
      // Columns of the string basis, with their (string, position) tags.
      std::vector<Vec> cols;
      std::vector<int> shift_up, shift_down;  // column index maps, -1 = zero
      for (const Weight& mu : rep.weight_support()) {
        std::vector<int> src = rep.weight_space(mu);
        std::vector<int> dst = rep.weight_space(mu + simple_root(n, i));
        // Restriction of E_i to the mu weight space.
        Mat eres(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t c = 0; c < src.size(); ++c)
          for (std::size_t r = 0; r < dst.size(); ++r)
            eres.at(static_cast<int>(r), static_cast<int>(c)) = rep.E(i).at(dst[r], src[c]);
        Mat ker = dst.empty() ? Mat::identity(static_cast<int>(src.size()))
                              : linalg::kernel(eres);
        long len = cartan::coroot_pairing(i, mu);
        for (int kc = 0; kc < ker.cols(); ++kc) {
          if (len < 0) throw std::domain_error("string head with negative coroot pairing");
          Vec head(d);
          for (std::size_t r = 0; r < src.size(); ++r) head[src[r]] = ker.at(static_cast<int>(r), kc);
          // F_i^{(k)} head for k = 0..len
          Vec cur = head;
          int base = static_cast<int>(cols.size());
          for (long k = 0; k <= len; ++k) {
            cols.push_back(cur);
            shift_down.push_back(k < len ? base + static_cast<int>(k) + 1 : -1);
            shift_up.push_back(k > 0 ? base + static_cast<int>(k) - 1 : -1);
            if (k < len) cur = q_int(k + 1).inverse() * (rep.F(i) * cur);
          }
        }
      }
      if (static_cast<int>(cols.size()) != d)
        throw std::domain_error("i-string decomposition does not span the module");
      Mat b = Mat::from_columns(cols, d);
      Mat binv = linalg::inverse(b);
      Mat down(d, d), up(d, d);
      for (int c = 0; c < d; ++c) {
        if (shift_down[c] >= 0) down.at(shift_down[c], c) = RatFunc(1);
        if (shift_up[c] >= 0) up.at(shift_up[c], c) = RatFunc(1);
      }
      ft_.push_back(b * down * binv);
      et_.push_back(b * up * binv);
    }
  }

  const Mat& f_tilde(int i) const { return ft_.at(i - 1); }
  const Mat& e_tilde(int i) const { return et_.at(i - 1); }

 private:
  std::vector<Mat> ft_, et_;
};

/// Crystal lattice: the A0-span of all Ftilde words applied to the given
/// generators, reduced to a normalized A0-basis.  Throws when the result
/// does not span the module over Q(t).
inline A0Basis crystal_lattice(const Rep& rep, const KashiwaraOps& ops,
                               std::vector<Vec> generators) {
  A0Basis basis = linalg::a0_column_reduce(generators);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> vectors;
    for (const auto& v : basis.cols) vectors.push_back(v);
    for (const auto& v : basis.cols)
      for (int i = 1; i <= rep.rank; ++i) {
        Vec w = ops.f_tilde(i) * v;
        if (!linalg::is_zero(w) && !linalg::in_a0_span(basis, w)) {
          vectors.push_back(w);
          grew = true;
        }
      }
    if (grew) basis = linalg::a0_column_reduce(vectors);
  }
  if (static_cast<int>(basis.size()) != rep.dim())
    throw std::domain_error("generators do not span the module");
  return basis;
}

inline A0Basis crystal_lattice(const Rep& rep, const KashiwaraOps& ops,
                               const std::vector<int>& hw_indices) {
  std::vector<Vec> gens;
  for (int idx : hw_indices) gens.push_back(linalg::unit_vec(rep.dim(), idx));
  return crystal_lattice(rep, ops, gens);
}

/// Closure of a lattice under both Kashiwara operators (membership of
/// every image of every basis vector).
inline bool is_crystal_closed(const Rep& rep, const KashiwaraOps& ops, const A0Basis& basis) {
  for (const auto& v : basis.cols)
    for (int i = 1; i <= rep.rank; ++i) {
      if (!linalg::in_a0_span(basis, ops.f_tilde(i) * v)) return false;
      if (!linalg::in_a0_span(basis, ops.e_tilde(i) * v)) return false;
    }
  return true;
}

}  // namespace repth

using repth::crystal_lattice;
using repth::is_crystal_closed;
using repth::KashiwaraOps;

}  // namespace qcrystal
