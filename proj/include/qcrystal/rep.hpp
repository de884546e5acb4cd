#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcrystal/cartan.hpp"
#include "qcrystal/linalg.hpp"

namespace qcrystal {
namespace repth {

using cartan::simple_root;
using cartan::Weight;

/// Finite-dimensional U_t(sl_{n+1})-module presented by labeled weight
/// vectors and explicit E_i / F_i action matrices over Q(t).  K_i acts
/// diagonally by t^{(alpha_i, wt)}, i.e. by the i-th fundamental
/// coordinate of each basis weight.
struct Rep {
  int rank = 0;
  std::vector<Weight> weights;
  std::vector<std::string> labels;
  std::vector<Mat> e;  // e[i-1]: action of E_i
  std::vector<Mat> f;  // f[i-1]: action of F_i
  int hw_index = -1;   // designated highest-weight vector, or -1

  int dim() const { return static_cast<int>(weights.size()); }

  /// Diagonal K_i^{power} from the stored weights.
  Mat k(int i, long power = 1) const {
    Vec d(dim());
    for (int v = 0; v < dim(); ++v)
      d[v] = RatFunc::t_pow(power * weights[v][i - 1]);
    return Mat::diagonal(d);
  }
  /// Diagonal K^{2 rho} (or its inverse): t^{(wt, 2 rho)} on weight vectors.
  Mat k2rho(long sign = 1) const {
    Vec d(dim());
    Weight two_rho = 2 * cartan::rho(rank);
    for (int v = 0; v < dim(); ++v)
      d[v] = RatFunc::t_pow(sign * cartan::weight_pairing_int(weights[v], two_rho));
    return Mat::diagonal(d);
  }

  const Mat& E(int i) const { return e.at(i - 1); }
  const Mat& F(int i) const { return f.at(i - 1); }

  std::vector<int> weight_space(const Weight& mu) const {
    std::vector<int> idx;
    for (int v = 0; v < dim(); ++v)
      if (weights[v] == mu) idx.push_back(v);
    return idx;
  }
  std::vector<Weight> weight_support() const {
    std::vector<Weight> ws;
    for (const auto& w : weights) {
      bool seen = false;
      for (const auto& u : ws)
        if (u == w) seen = true;
      if (!seen) ws.push_back(w);
    }
    return ws;
  }
};

/// The vector representation V(varpi_1): E_i e_{i+1} = e_i, F_i e_i = e_{i+1}.
inline Rep fundamental_rep(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  Rep r;
  r.rank = n;
  int d = n + 1;
  Weight w = Weight::fundamental(n, 1);
  for (int j = 0; j < d; ++j) {
    r.weights.push_back(w);
    r.labels.push_back("e" + std::to_string(j + 1));
    if (j + 1 < d) w = w - simple_root(n, j + 1);
  }
  r.e.assign(n, Mat(d, d));
  r.f.assign(n, Mat(d, d));
  for (int i = 1; i <= n; ++i) {
    r.e[i - 1].at(i - 1, i) = RatFunc(1);  // E_i e_{i+1} = e_i
    r.f[i - 1].at(i, i - 1) = RatFunc(1);  // F_i e_i = e_{i+1}
  }
  r.hw_index = 0;
  return r;
}

/// Tensor product along the coproduct E -> E ox K^{-1} + 1 ox E,
/// F -> F ox 1 + K ox F; basis ordered lexicographically by factors.
inline Rep tensor_rep(const Rep& a, const Rep& b) {
  if (a.rank != b.rank) throw std::invalid_argument("tensor of different ranks");
  Rep r;
  r.rank = a.rank;
  int da = a.dim(), db = b.dim(), d = da * db;
  r.weights.reserve(d);
  for (int x = 0; x < da; ++x)
    for (int y = 0; y < db; ++y) {
      r.weights.push_back(a.weights[x] + b.weights[y]);
      r.labels.push_back(a.labels[x] + "(x)" + b.labels[y]);
    }
  auto kron = [&](const Mat& ma, const Mat& mb) {
    Mat m(d, d);
    for (int x = 0; x < da; ++x)
      for (int u = 0; u < da; ++u) {
        const RatFunc& va = ma.at(x, u);
        if (va.is_zero()) continue;
        for (int y = 0; y < db; ++y)
          for (int v = 0; v < db; ++v) {
            const RatFunc& vb = mb.at(y, v);
            if (!vb.is_zero()) m.at(x * db + y, u * db + v) = va * vb;
          }
      }
    return m;
  };
  Mat ida = Mat::identity(da), idb = Mat::identity(db);
  for (int i = 1; i <= r.rank; ++i) {
    r.e.push_back(kron(a.E(i), b.k(i, -1)) + kron(ida, b.E(i)));
    r.f.push_back(kron(a.F(i), idb) + kron(a.k(i, 1), b.F(i)));
  }
  if (a.hw_index >= 0 && b.hw_index >= 0) r.hw_index = a.hw_index * db + b.hw_index;
  return r;
}

inline Rep tensor_power(const Rep& a, int m) {
  Rep r = a;
  for (int k = 1; k < m; ++k) r = tensor_rep(r, a);
  return r;
}

/// Rank-1 module V(m varpi) on the divided-power basis v_k = F^{(k)} v:
/// E v_k = [m-k+1] v_{k-1}, F v_k = [k+1] v_{k+1}, K v_k = t^{m-2k} v_k.
inline Rep sl2_module(long m) {
  Rep r;
  r.rank = 1;
  int d = static_cast<int>(m) + 1;
  r.e.assign(1, Mat(d, d));
  r.f.assign(1, Mat(d, d));
  for (int k = 0; k <= static_cast<int>(m); ++k) {
    r.weights.push_back(Weight({m - 2 * k}));
    r.labels.push_back("F^(" + std::to_string(k) + ")v");
    if (k > 0) r.e[0].at(k - 1, k) = q_int(m - k + 1);
    if (k < static_cast<int>(m)) r.f[0].at(k + 1, k) = q_int(k + 1);
  }
  r.hw_index = 0;
  return r;
}

struct RelationReport {
  bool pass = true;
  std::string failed_relation;  // empty when pass
  std::string witness;

  void fail(const std::string& rel, const std::string& wit) {
    if (pass) {
      pass = false;
      failed_relation = rel;
      witness = wit;
    }
  }
};

/// Exact verification of the defining relations: K-group relations,
/// K E K^-1 and K F K^-1 scaling, the E-F commutator against
/// (K_i - K_i^-1)/(t - t^-1), and both quantum Serre relations.
inline RelationReport verify_uq_relations(const Rep& r) {
  RelationReport rep;
  int n = r.rank;
  auto describe = [&](int i, int j) {
    return "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i <= n && rep.pass; ++i) {
    Mat ki = r.k(i), kiinv = r.k(i, -1);
    if (!(ki * kiinv == Mat::identity(r.dim())))
      rep.fail("K K^-1 = 1", "i=" + std::to_string(i));
    for (int j = 1; j <= n && rep.pass; ++j) {
      Mat kj = r.k(j);
      if (!(ki * kj == kj * ki)) rep.fail("K_i K_j = K_j K_i", describe(i, j));
      long aij = cartan::cartan_matrix(n).a[i - 1][j - 1];
      if (!(ki * r.E(j) == RatFunc::t_pow(aij) * (r.E(j) * ki)))
        rep.fail("K E K^-1 scaling", describe(i, j));
      if (!(ki * r.F(j) == RatFunc::t_pow(-aij) * (r.F(j) * ki)))
        rep.fail("K F K^-1 scaling", describe(i, j));
    }
  }
  // E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1)/(t - t^-1)
  RatFunc denom = RatFunc::t() - RatFunc::t_pow(-1);
  for (int i = 1; i <= n && rep.pass; ++i)
    for (int j = 1; j <= n && rep.pass; ++j) {
      Mat lhs = r.E(i) * r.F(j) - r.F(j) * r.E(i);
      Mat rhs(r.dim(), r.dim());
      if (i == j) rhs = denom.inverse() * (r.k(i) - r.k(i, -1));
      if (!(lhs == rhs)) rep.fail("E F commutator", describe(i, j));
    }
  // Quantum Serre relations.
  RatFunc two = q_int(2);
  for (int i = 1; i <= n && rep.pass; ++i)
    for (int j = 1; j <= n && rep.pass; ++j) {
      if (i == j) continue;
      long aij = cartan::cartan_matrix(n).a[i - 1][j - 1];
      if (aij == 0) {
        if (!(r.E(i) * r.E(j) == r.E(j) * r.E(i)))
          rep.fail("Serre E (commuting case)", describe(i, j));
        if (!(r.F(i) * r.F(j) == r.F(j) * r.F(i)))
          rep.fail("Serre F (commuting case)", describe(i, j));
      } else {
        Mat se = r.E(i) * r.E(i) * r.E(j) - two * (r.E(i) * r.E(j) * r.E(i)) +
                 r.E(j) * r.E(i) * r.E(i);
        if (!se.is_zero()) rep.fail("Serre E", describe(i, j));
        Mat sf = r.F(i) * r.F(i) * r.F(j) - two * (r.F(i) * r.F(j) * r.F(i)) +
                 r.F(j) * r.F(i) * r.F(i);
        if (!sf.is_zero()) rep.fail("Serre F", describe(i, j));
      }
    }
  return rep;
}

}  // namespace repth

using repth::fundamental_rep;
using repth::Rep;
using repth::sl2_module;
using repth::tensor_power;
using repth::tensor_rep;
using repth::verify_uq_relations;

}  // namespace qcrystal
