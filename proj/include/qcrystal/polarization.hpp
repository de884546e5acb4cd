#pragma once

#include <queue>

#include "qcrystal/kashiwara.hpp"

namespace qcrystal {
namespace repth {

using cartan::minus_w0;
using cartan::weight_pairing_int;

/// Height of Lambda - mu as a nonnegative sum of simple roots; equals
/// (Lambda - mu, rho) in type A.
inline long weight_height(const Weight& lambda, const Weight& mu) {
  return weight_pairing_int(lambda - mu, cartan::rho(lambda.rank()));
}

/// The polarization Gram matrix: the unique symmetric contravariant form
/// with (v_hw, v_hw) = 1.  Built weight space by weight space descending
/// from the highest weight, writing each vector as sum_i F_i x_i and
/// using F_i^* = t^{-1} K_i E_i.  Throws when the module is not generated
/// by the designated highest-weight vector (reducible input).
inline Mat polarization_gram(const Rep& rep) {
  if (rep.hw_index < 0) throw std::invalid_argument("no designated highest-weight vector");
  int d = rep.dim(), n = rep.rank;
  const Weight lambda = rep.weights[rep.hw_index];
  // distinct weights sorted by height
  std::vector<Weight> ws = rep.weight_support();
  std::sort(ws.begin(), ws.end(), [&](const Weight& a, const Weight& b) {
    long ha = weight_height(lambda, a), hb = weight_height(lambda, b);
    return ha != hb ? ha < hb : a < b;
  });
  if (!(ws.front() == lambda) || rep.weight_space(lambda).size() != 1)
    throw std::domain_error("highest weight space is not one-dimensional");

  Mat gram(d, d);
  gram.at(rep.hw_index, rep.hw_index) = RatFunc(1);
  for (std::size_t wi = 1; wi < ws.size(); ++wi) {
    const Weight& mu = ws[wi];
    std::vector<int> idx = rep.weight_space(mu);
    // Columns F_i e_x for x in the (mu + alpha_i) weight space, restricted
    // to the mu rows; tags remember (i, x).
    std::vector<std::pair<int, int>> tags;
    std::vector<Vec> cols;
    for (int i = 1; i <= n; ++i) {
      for (int x : rep.weight_space(mu + simple_root(n, i))) {
        Vec col(idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r) col[r] = rep.F(i).at(idx[r], x);
        tags.emplace_back(i, x);
        cols.push_back(std::move(col));
      }
    }
    if (cols.empty()) throw std::domain_error("module is not highest-weight generated");
    Mat m = Mat::from_columns(cols, static_cast<int>(idx.size()));
    for (std::size_t vc = 0; vc < idx.size(); ++vc) {
      auto coeffs = linalg::solve(m, linalg::unit_vec(static_cast<int>(idx.size()),
                                                      static_cast<int>(vc)));
      if (!coeffs) throw std::domain_error("module is not highest-weight generated");
      // (e_u, e_v) = sum over columns c=(i,x) of
      //   coeff_c * t^{(alpha_i, mu) + 1} * sum_y E_i[y,u] gram[x,y]
      for (std::size_t uc = 0; uc < idx.size(); ++uc) {
        RatFunc acc;
        for (std::size_t c = 0; c < tags.size(); ++c) {
          if ((*coeffs)[c].is_zero()) continue;
          auto [i, x] = tags[c];
          RatFunc inner;
          for (int y : rep.weight_space(mu + simple_root(n, i))) {
            const RatFunc& ev = rep.E(i).at(y, idx[uc]);
            if (!ev.is_zero() && !gram.at(x, y).is_zero()) inner += ev * gram.at(x, y);
          }
          if (!inner.is_zero())
            acc += (*coeffs)[c] *
                   RatFunc::t_pow(cartan::coroot_pairing(i, mu) + 1) * inner;
        }
        gram.at(idx[uc], idx[static_cast<int>(vc)]) = acc;
      }
    }
  }
  if (!(gram == gram.transpose())) throw std::logic_error("polarization came out asymmetric");
  return gram;
}

/// Index of the (unique) lowest-weight basis vector.
inline int lowest_weight_index(const Rep& rep) {
  const Weight lambda = rep.weights.at(rep.hw_index);
  Weight low = -minus_w0(lambda);  // w0 Lambda
  auto idx = rep.weight_space(low);
  if (idx.size() != 1) throw std::domain_error("lowest weight space is not one-dimensional");
  return idx[0];
}

/// Dual module on the dual basis, with the rescaled dual polarization
/// (u*, v*) = c^-1 t^{(Lambda, 2 rho)} (K^{-2 rho} u, v).
struct DualModule {
  Rep rep;           // action through the antipode on the dual basis
  Mat gram;          // dual polarization
  Mat star;          // star map V -> V*: u |-> G u in dual coordinates
  RatFunc c_lambda;  // lowest-weight norm (v_n, v_n)
  Vec hw_vector;     // t^{(w0 L - L, rho)} (v_n)*, a norm-one highest-weight vector
};

inline DualModule dual_rep(const Rep& rep, const Mat& gram) {
  DualModule d;
  d.rep.rank = rep.rank;
  int dim = rep.dim();
  for (int v = 0; v < dim; ++v) {
    d.rep.weights.push_back(-1 * rep.weights[v]);
    d.rep.labels.push_back(rep.labels[v] + "*");
  }
  // (a f)(v) = f(S(a) v): matrix of a on the dual basis is M_{S(a)}^T.
  for (int i = 1; i <= rep.rank; ++i) {
    Mat se = RatFunc(-1) * (rep.E(i) * rep.k(i, 1));   // S(E_i) = -E_i K_i
    Mat sf = RatFunc(-1) * (rep.k(i, -1) * rep.F(i));  // S(F_i) = -K_i^-1 F_i
    d.rep.e.push_back(se.transpose());
    d.rep.f.push_back(sf.transpose());
  }
  int low = lowest_weight_index(rep);
  d.c_lambda = gram.at(low, low);
  const Weight lambda = rep.weights[rep.hw_index];
  Weight two_rho = 2 * cartan::rho(rep.rank);
  Vec dinv(dim);
  for (int v = 0; v < dim; ++v)
    dinv[v] = RatFunc::t_pow(-weight_pairing_int(rep.weights[v], two_rho));
  d.gram = d.c_lambda.inverse() * RatFunc::t_pow(weight_pairing_int(lambda, two_rho)) *
           (linalg::inverse(gram) * Mat::diagonal(dinv));
  d.star = gram;  // <u*, w> = (u, w): coordinates of u* are G u
  d.hw_vector = RatFunc::t_pow(weight_pairing_int(-minus_w0(lambda) - lambda, cartan::rho(rep.rank))) *
                gram.column(low);
  d.rep.hw_index = -1;  // the canonical hw vector is hw_vector, not a basis vector
  return d;
}

/// The w-basis of the dual lattice:
/// w_k = t^{(wt(v_{d+1-k}) - Lambda, rho)} (v_{d+1-k})*.
inline std::vector<Vec> dual_lattice_vectors(const Rep& rep, const Mat& gram) {
  int d = rep.dim();
  const Weight lambda = rep.weights.at(rep.hw_index);
  std::vector<Vec> w(d);
  for (int k = 1; k <= d; ++k) {
    int src = d - k;  // v_{d+1-k}, zero-based
    long expo = weight_pairing_int(rep.weights[src] - lambda, cartan::rho(rep.rank));
    w[k - 1] = RatFunc::t_pow(expo) * gram.column(src);
  }
  return w;
}

/// Nonzero intertwiner A -> B normalized so its first nonzero entry is 1;
/// throws when none exists.
inline Mat find_intertwiner(const Rep& a, const Rep& b) {
  int da = a.dim(), db = b.dim();
  std::vector<Mat> ga, gb;
  for (int i = 1; i <= a.rank; ++i) {
    ga.push_back(a.E(i));
    gb.push_back(b.E(i));
    ga.push_back(a.F(i));
    gb.push_back(b.F(i));
    ga.push_back(a.k(i));
    gb.push_back(b.k(i));
  }
  // Unknown T (db x da) flattened row-major: T M_a - M_b T = 0.
  int unknowns = da * db;
  std::vector<Vec> rows;
  for (std::size_t g = 0; g < ga.size(); ++g)
    for (int r = 0; r < db; ++r)
      for (int c = 0; c < da; ++c) {
        Vec row(unknowns);
        for (int k = 0; k < da; ++k) row[r * da + k] += ga[g].at(k, c);
        for (int k = 0; k < db; ++k) row[k * da + c] -= gb[g].at(r, k);
        rows.push_back(std::move(row));
      }
  Mat sys(static_cast<int>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
  Mat ker = linalg::kernel(sys);
  if (ker.cols() == 0) throw std::domain_error("no intertwiner exists");
  Vec flat = ker.column(0);
  // normalize first nonzero entry to 1
  RatFunc scale;
  for (const auto& x : flat)
    if (!x.is_zero()) {
      scale = x.inverse();
      break;
    }
  Mat t(db, da);
  for (int r = 0; r < db; ++r)
    for (int c = 0; c < da; ++c) t.at(r, c) = scale * flat[r * da + c];
  return t;
}

/// Basis of { v in V_Lambda : E_i v = 0 for all i }, as columns.
inline std::vector<Vec> singular_vectors(const Rep& rep, const Weight& lambda) {
  std::vector<int> idx = rep.weight_space(lambda);
  if (idx.empty()) return {};
  int m = static_cast<int>(idx.size());
  Mat stacked(rep.dim() * rep.rank, m);
  for (int i = 1; i <= rep.rank; ++i)
    for (int r = 0; r < rep.dim(); ++r)
      for (int c = 0; c < m; ++c)
        stacked.at((i - 1) * rep.dim() + r, c) = rep.E(i).at(r, idx[c]);
  Mat ker = linalg::kernel(stacked);
  std::vector<Vec> result;
  for (int kc = 0; kc < ker.cols(); ++kc) {
    Vec v(rep.dim());
    for (int c = 0; c < m; ++c) v[idx[c]] = ker.at(c, kc);
    // normalize first nonzero coordinate to 1 for reproducibility
    RatFunc scale;
    for (const auto& x : v)
      if (!x.is_zero()) {
        scale = x.inverse();
        break;
      }
    result.push_back(scale * v);
  }
  return result;
}

struct Submodule {
  Rep rep;        // restricted module structure
  Mat inclusion;  // ambient_dim x sub_dim embedding
};

/// Generates the U_t-submodule spanned by the given vector under the F_i
/// (echelon-reduced deterministic basis) and restricts the action.
inline Submodule generated_submodule(const Rep& ambient, const Vec& gen) {
  int n = ambient.rank;
  std::vector<Vec> basis;
  auto member = [&](const Vec& v) {
    if (basis.empty()) return linalg::is_zero(v);
    Mat m = Mat::from_columns(basis, ambient.dim());
    return linalg::solve(m, v).has_value();
  };
  std::queue<Vec> work;
  work.push(gen);
  while (!work.empty()) {
    Vec v = work.front();
    work.pop();
    if (member(v)) continue;
    basis.push_back(v);
    for (int i = 1; i <= n; ++i) {
      Vec fw = ambient.F(i) * v;
      if (!linalg::is_zero(fw)) work.push(fw);
      Vec ew = ambient.E(i) * v;
      if (!linalg::is_zero(ew)) work.push(ew);
    }
  }
  Submodule sub;
  sub.inclusion = Mat::from_columns(basis, ambient.dim());
  sub.rep.rank = n;
  int d = static_cast<int>(basis.size());
  for (const auto& v : basis) {
    // weight of the (weight-homogeneous) basis vector
    Weight w = ambient.weights[0];
    bool found = false;
    for (int r = 0; r < ambient.dim(); ++r)
      if (!v[r].is_zero()) {
        w = ambient.weights[r];
        found = true;
        break;
      }
    if (!found) throw std::logic_error("zero basis vector in submodule");
    sub.rep.weights.push_back(w);
    sub.rep.labels.push_back("w" + std::to_string(sub.rep.weights.size()));
  }
  for (int i = 1; i <= n; ++i) {
    Mat fe(d, d), ee(d, d);
    for (int c = 0; c < d; ++c) {
      auto fc = linalg::solve(sub.inclusion, ambient.F(i) * basis[c]);
      auto ec = linalg::solve(sub.inclusion, ambient.E(i) * basis[c]);
      if (!fc || !ec) throw std::logic_error("submodule is not closed under the action");
      for (int r = 0; r < d; ++r) {
        fe.at(r, c) = (*fc)[r];
        ee.at(r, c) = (*ec)[r];
      }
    }
    sub.rep.f.push_back(fe);
    sub.rep.e.push_back(ee);
  }
  sub.rep.hw_index = 0;
  return sub;
}

/// Multiplicity-one highest weight submodule of the given weight.
inline Submodule highest_weight_submodule(const Rep& ambient, const Weight& lambda) {
  auto sing = singular_vectors(ambient, lambda);
  if (sing.empty()) throw std::domain_error("no singular vector of weight " + lambda.to_string());
  if (sing.size() > 1)
    throw std::domain_error("singular weight space has multiplicity " +
                            std::to_string(sing.size()) + "; select a vector explicitly");
  return generated_submodule(ambient, sing[0]);
}

struct OrthogonalSplit {
  Mat w;               // columns spanning W
  Mat w_perp;          // columns spanning the orthogonal complement
  RatFunc gram_det_w;  // determinant of the restricted Gram matrix on W
  A0Basis lattice_w;       // L intersect W
  A0Basis lattice_w_perp;  // L intersect W^perp
  bool lattice_splits = false;  // L = (L cap W) + (L cap W^perp)
};

/// Exact orthogonal complement and lattice splitting.  The restriction of
/// a polarization to a submodule must stay nondegenerate; a zero
/// determinant is reported as a hard failure.
inline OrthogonalSplit orthogonal_decompose(const Rep& rep, const Mat& gram, const Mat& w_cols,
                                            const A0Basis& lattice) {
  OrthogonalSplit out;
  out.w = w_cols;
  Mat wt_g = w_cols.transpose() * gram;
  out.gram_det_w = linalg::det(wt_g * w_cols);
  if (out.gram_det_w.is_zero())
    throw std::domain_error("polarization restricted to the subspace is degenerate");
  out.w_perp = linalg::kernel(wt_g);
  if (out.w_perp.cols() + w_cols.cols() != rep.dim())
    throw std::logic_error("orthogonal complement has wrong dimension");

  Mat m = Mat::from_columns(lattice.cols, rep.dim());
  auto intersect = [&](const Mat& cond) {
    // { M a : a in A0^k, cond * M * a = 0 }
    Mat cm = cond * m;
    Mat ker = linalg::kernel(cm);
    std::vector<Vec> coord_cols;
    for (int c = 0; c < ker.cols(); ++c) coord_cols.push_back(ker.column(c));
    A0Basis sat = linalg::a0_saturate(coord_cols);
    std::vector<Vec> vecs;
    for (const auto& a : sat.cols) vecs.push_back(m * a);
    return linalg::a0_column_reduce(vecs);
  };
  // v in W <=> (v, W^perp) = 0, using nondegeneracy of the form.
  out.lattice_w = intersect(out.w_perp.transpose() * gram);
  out.lattice_w_perp = intersect(wt_g);

  std::vector<Vec> all;
  for (const auto& v : out.lattice_w.cols) all.push_back(v);
  for (const auto& v : out.lattice_w_perp.cols) all.push_back(v);
  out.lattice_splits = all.size() == lattice.size() &&
                       linalg::same_a0_span(linalg::a0_column_reduce(all), lattice);
  return out;
}

/// Projection of v onto W along W^perp.
inline Vec project_onto(const Mat& w, const Mat& w_perp, const Vec& v) {
  int d = static_cast<int>(v.size());
  Mat both(d, w.cols() + w_perp.cols());
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < w.cols(); ++c) both.at(r, c) = w.at(r, c);
    for (int c = 0; c < w_perp.cols(); ++c) both.at(r, w.cols() + c) = w_perp.at(r, c);
  }
  auto x = linalg::solve(both, v);
  if (!x) throw std::logic_error("projection solve failed");
  Vec proj(d);
  for (int c = 0; c < w.cols(); ++c)
    for (int r = 0; r < d; ++r) proj[r] += w.at(r, c) * (*x)[c];
  return proj;
}

}  // namespace repth

using repth::dual_lattice_vectors;
using repth::dual_rep;
using repth::DualModule;
using repth::find_intertwiner;
using repth::generated_submodule;
using repth::highest_weight_submodule;
using repth::lowest_weight_index;
using repth::orthogonal_decompose;
using repth::OrthogonalSplit;
using repth::polarization_gram;
using repth::singular_vectors;
using repth::Submodule;

}  // namespace qcrystal
