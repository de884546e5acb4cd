#pragma once

#include <functional>
#include <optional>

#include "qcrystal/cartan.hpp"
#include "qcrystal/fnalg.hpp"
#include "qcrystal/truncop.hpp"

namespace qcrystal {
namespace soibelman {

using fnalg::FnAlgElem;
using fnalg::Gen;
using fnalg::Word;

/// Tensor-factor layout of the truncated Soibelman representation:
/// one half-line leg per letter of the reduced word for w0, followed by
/// one window leg per torus coordinate.
struct Context {
  int n = 1;
  WeylWord word;  // reduced word for the longest element
  TruncSpace half;
  TruncSpace win;

  Context(int rank, int cutoff, int window, std::optional<WeylWord> w = std::nullopt)
      : n(rank),
        word(w ? *w : cartan::longest_word(rank)),
        half(TruncSpace::half_line(cutoff)),
        win(TruncSpace::window(window)) {
    if (!cartan::is_longest_word(word, rank))
      throw std::invalid_argument("word is not a reduced expression of the longest element");
    // Desk-scale guard: rank 2 at the default cutoffs (16^3 * 17^2, about
    // 1.2e6) is the largest supported layout; rank 3 needs smaller cutoffs.
    double entries = 1;
    for (int l = 0; l < legs(); ++l) entries *= leg_space(l).dim();
    if (entries > 2.1e6) throw std::invalid_argument("tensor dimension exceeds the desk-scale cap");
  }

  int legs() const { return static_cast<int>(word.length()) + n; }
  bool is_half_leg(int l) const { return l < static_cast<int>(word.length()); }
  /// The rank-1 subalgebra index this leg projects onto.
  int leg_letter(int l) const {
    return is_half_leg(l) ? word.letters[static_cast<std::size_t>(l)]
                          : l - static_cast<int>(word.length()) + 1;
  }
  const TruncSpace& leg_space(int l) const { return is_half_leg(l) ? half : win; }

  long dim() const {
    long d = 1;
    for (int l = 0; l < legs(); ++l) d *= leg_space(l).dim();
    return d;
  }
  static constexpr int kMaxLegs = 12;

  long pack(const std::vector<int>& digits) const { return pack_ptr(digits.data()); }
  std::vector<int> unpack(long idx) const {
    std::vector<int> digits(legs());
    unpack_into(idx, digits.data());
    return digits;
  }
  long pack_ptr(const int* digits) const {
    long idx = 0;
    for (int l = 0; l < legs(); ++l) idx = idx * leg_space(l).dim() + digits[l];
    return idx;
  }
  void unpack_into(long idx, int* digits) const {
    for (int l = legs() - 1; l >= 0; --l) {
      long d = leg_space(l).dim();
      digits[l] = static_cast<int>(idx % d);
      idx /= d;
    }
  }

  /// Per-leg interior index range for operators of monomial length m:
  /// truncation cannot leak into [m, N-1-m] resp. [-M+m, M-m].
  std::pair<int, int> interior_range(int l, int m) const {
    const TruncSpace& sp = leg_space(l);
    if (sp.kind == TruncSpace::Kind::HalfLine) return {m, sp.cutoff - 1 - m};
    return {m, 2 * sp.cutoff - m};
  }
  /// Runs fn over every interior column (tensor index) for length-m data.
  void for_each_interior(int m, const std::function<void(long)>& fn) const {
    std::vector<std::pair<int, int>> ranges;
    for (int l = 0; l < legs(); ++l) ranges.push_back(interior_range(l, m));
    std::vector<int> digits(legs());
    for (int l = 0; l < legs(); ++l) {
      if (ranges[l].first > ranges[l].second)
        throw std::invalid_argument("cutoffs too small for the requested interior");
      digits[l] = ranges[l].first;
    }
    for (;;) {
      fn(pack(digits));
      int l = legs() - 1;
      while (l >= 0 && digits[l] == ranges[l].second) {
        digits[l] = ranges[l].first;
        --l;
      }
      if (l < 0) break;
      ++digits[l];
    }
  }
};

/// Projected image of a generator on one leg.
struct LegOp {
  enum class Kind { Identity, Zero, Pi, Chi };
  Kind kind = Kind::Zero;
  int r = 0, s = 0;  // rank-1 generator indices when kind is Pi or Chi
};

/// phi_F for F = {letter, letter+1}: rank-1 image or delta.
inline LegOp project_leg(const Context& ctx, int leg, int a, int b) {
  int f = ctx.leg_letter(leg);
  bool a_in = a == f || a == f + 1, b_in = b == f || b == f + 1;
  LegOp op;
  if (a_in && b_in) {
    op.kind = ctx.is_half_leg(leg) ? LegOp::Kind::Pi : LegOp::Kind::Chi;
    op.r = a == f ? 1 : 2;
    op.s = b == f ? 1 : 2;
  } else {
    op.kind = a == b ? LegOp::Kind::Identity : LegOp::Kind::Zero;
  }
  return op;
}

/// phi_F on an element, F = {f, f+1}: the algebra homomorphism sending
/// u_{a,b} to the rank-1 generator when a,b lie in F and to delta_{a,b}
/// otherwise.  Result is normal-formed in the rank-1 algebra.
inline FnAlgElem phi_element(const fnalg::Algebra& rank1, const FnAlgElem& x, int f) {
  FnAlgElem out;
  for (const auto& [w, c] : x.terms()) {
    Word image;
    bool dead = false;
    for (const Gen& g : w) {
      bool a_in = g.i == f || g.i == f + 1, b_in = g.j == f || g.j == f + 1;
      if (a_in && b_in) {
        image.push_back(Gen{g.i == f ? 1 : 2, g.j == f ? 1 : 2});
      } else if (g.i != g.j) {
        dead = true;
        break;
      }  // else delta_{a,a} = 1: drop the factor
    }
    if (!dead) out = out + rank1.normal_form(image, c);
  }
  return out;
}

/// theta_q on an element with Laurent coefficients, represented as the
/// same normal words with coefficients frozen at t = q.
inline FnAlgElem theta_specialize(const FnAlgElem& x, const Rat& q) {
  FnAlgElem out;
  for (const auto& [w, c] : x.terms()) {
    if (!c.is_laurent())
      throw std::domain_error("theta_q needs Laurent coefficients, got " + c.to_string());
    out.add(w, RatFunc(c.eval_at(q)));
  }
  return out;
}

/// One coproduct path of a generator: the per-leg operators. The list of
/// paths of u_{ij} is the nonzero part of
/// Delta^{(legs-1)}(u_{ij}) = sum u_{i,k1} (x) u_{k1,k2} (x) ... (x) u_{k_last,j}.
struct GenPath {
  std::vector<LegOp> ops;
};

/// Path table computed on the q side: the generator symbols are carried
/// through the coproduct first and projected leg by leg with phi^q.
inline std::vector<GenPath> generator_paths(const Context& ctx, int i, int j) {
  std::vector<GenPath> paths;
  std::vector<LegOp> ops(ctx.legs());
  std::function<void(int, int)> dfs = [&](int leg, int from) {
    if (leg == ctx.legs()) {
      if (from == j) paths.push_back({ops});
      return;
    }
    for (int to = 1; to <= ctx.n + 1; ++to) {
      LegOp op = project_leg(ctx, leg, from, to);
      if (op.kind == LegOp::Kind::Zero) continue;
      // chi legs kill off-diagonal rank-1 generators
      if (op.kind == LegOp::Kind::Chi && op.r != op.s) continue;
      ops[leg] = op;
      dfs(leg + 1, to);
    }
  };
  dfs(0, i);
  return paths;
}

/// Path table computed on the t side: each leg factor is projected as an
/// element of the rank-1 function algebra through phi^t, and only then
/// read off as a pi_q / chi_q table entry (the per-leg vartheta_q).  Used
/// by the per-leg pipeline; must agree with generator_paths by the
/// commuting-square lemma.
inline std::vector<GenPath> generator_paths_per_leg(const Context& ctx, int i, int j) {
  static const fnalg::Algebra rank1(1);
  fnalg::Algebra rank_n(ctx.n);
  std::vector<GenPath> paths;
  std::vector<LegOp> ops(ctx.legs());
  std::function<void(int, int)> dfs = [&](int leg, int from) {
    if (leg == ctx.legs()) {
      if (from == j) paths.push_back({ops});
      return;
    }
    for (int to = 1; to <= ctx.n + 1; ++to) {
      FnAlgElem projected = phi_element(rank1, rank_n.gen(from, to), ctx.leg_letter(leg));
      LegOp op;
      if (projected.is_zero()) continue;
      const Word& w = projected.terms().begin()->first;
      if (w.empty()) {
        op.kind = LegOp::Kind::Identity;
      } else {
        op.kind = ctx.is_half_leg(leg) ? LegOp::Kind::Pi : LegOp::Kind::Chi;
        op.r = w[0].i;
        op.s = w[0].j;
        if (op.kind == LegOp::Kind::Chi && op.r != op.s) continue;  // chi kills off-diagonals
      }
      ops[leg] = op;
      dfs(leg + 1, to);
    }
  };
  dfs(0, i);
  return paths;
}

/// Number of coproduct paths before projection: (n+1)^(legs-1) summands.
inline long coproduct_path_count(int n, int legs) {
  long c = 1;
  for (int l = 1; l < legs; ++l) c *= n + 1;
  return c;
}

namespace detail {

/// pi_q / chi_q action of one leg operator on a basis index; returns the
/// target index (or -1 for zero) and multiplies the scalar in.
template <class Mode>
int leg_apply(const Mode& mode, const Context& ctx, int leg, const LegOp& op, int k,
              typename Mode::S& scalar) {
  const TruncSpace& sp = ctx.leg_space(leg);
  switch (op.kind) {
    case LegOp::Kind::Identity:
      return k;
    case LegOp::Kind::Zero:
      return -1;
    case LegOp::Kind::Pi: {
      // pi_q table on e_0..e_{N-1}
      if (op.r == 1 && op.s == 1) {  // S sqrt(1 - q^{2N})
        if (k == 0) return -1;
        scalar = scalar * mode.sqrt_one_minus_q2k(k);
        return k - 1;
      }
      if (op.r == 2 && op.s == 2) {  // sqrt(1 - q^{2N}) S^*
        if (k + 1 >= sp.dim()) return -1;
        scalar = scalar * mode.sqrt_one_minus_q2k(k + 1);
        return k + 1;
      }
      if (op.r == 1 && op.s == 2) {  // -q^{N+1}
        scalar = scalar * (-mode.q_pow(k + 1));
        return k;
      }
      scalar = scalar * mode.q_pow(k);  // (2,1): q^N
      return k;
    }
    case LegOp::Kind::Chi: {
      // chi_q: u11 = S^*, u22 = S on the window
      if (op.r == 1) {  // (1,1)
        if (k + 1 >= sp.dim()) return -1;
        return k + 1;
      }
      if (k == 0) return -1;  // (2,2)
      return k - 1;
    }
  }
  return -1;
}

template <class S>
void add_entry(std::vector<std::pair<long, S>>& col, long row, const S& v) {
  for (auto& [r, x] : col)
    if (r == row) {
      x = x + v;
      return;
    }
  col.emplace_back(row, v);
}

}  // namespace detail

template <class Mode>
using Column = std::vector<std::pair<long, typename Mode::S>>;

/// The two crystallization pipelines: PerLeg projects on the t side and
/// specializes leg by leg (the pi_0 recipe); Global specializes the whole
/// element first and projects on the q side (psi o theta).
enum class Pipeline { PerLeg, Global };

template <class Mode>
class MonomialOp {
 public:
  MonomialOp(const Context& ctx, const Mode& mode, const Word& factors,
             typename Mode::S coeff, Pipeline pipeline = Pipeline::Global)
      : ctx_(&ctx), mode_(&mode), coeff_(std::move(coeff)) {
    for (const Gen& g : factors)
      paths_.push_back(pipeline == Pipeline::Global ? generator_paths(ctx, g.i, g.j)
                                                    : generator_paths_per_leg(ctx, g.i, g.j));
  }

  Column<Mode> apply(long col) const {
    Column<Mode> cur{{col, coeff_}};
    int legs = ctx_->legs();
    if (legs > Context::kMaxLegs) throw std::logic_error("leg count above the static bound");
    int digits[Context::kMaxLegs], nd[Context::kMaxLegs];
    // rightmost factor acts first
    for (std::size_t f = paths_.size(); f-- > 0;) {
      Column<Mode> next;
      next.reserve(cur.size() * paths_[f].size());
      for (const auto& [idx, base] : cur) {
        ctx_->unpack_into(idx, digits);
        for (const GenPath& path : paths_[f]) {
          typename Mode::S scalar = base;
          bool dead = false;
          for (int l = 0; l < legs; ++l) {
            int to = detail::leg_apply(*mode_, *ctx_, l, path.ops[l], digits[l], scalar);
            if (to < 0) {
              dead = true;
              break;
            }
            nd[l] = to;
          }
          if (!dead && !Mode::is_zero(scalar))
            detail::add_entry(next, ctx_->pack_ptr(nd), scalar);
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

 private:
  const Context* ctx_;
  const Mode* mode_;
  typename Mode::S coeff_;
  std::vector<std::vector<GenPath>> paths_;
};

/// psi^{(q)} (or its leading-order analogue) applied to an element with
/// Laurent-polynomial coefficients.
template <class Mode>
class ElementOp {
 public:
  ElementOp(const Context& ctx, const Mode& mode, const FnAlgElem& x, Pipeline pipeline) {
    for (const auto& [w, c] : x.terms()) {
      // theta_q is defined on Laurent coefficients; the per-leg
      // vartheta_q only needs the coefficient to be pole-free at q,
      // which Mode::coeff checks when it evaluates.
      if (pipeline == Pipeline::Global && !c.is_laurent())
        throw std::domain_error("coefficient is not specializable (not Laurent)");
      terms_.emplace_back(ctx, mode, w, mode.coeff(c), pipeline);
    }
  }

  Column<Mode> apply(long col) const {
    Column<Mode> out;
    for (const auto& term : terms_) {
      for (const auto& [row, v] : term.apply(col)) detail::add_entry(out, row, v);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  std::vector<MonomialOp<Mode>> terms_;
};

/// The Matassa-Yuncken limit operator pi_0 of an element, columnwise in
/// exact leading-order arithmetic.  Entries must have nonnegative leading
/// exponent; cancellation-indeterminate entries are reported for numeric
/// fallback.
struct LimitColumn {
  std::vector<std::pair<long, Rat>> entries;
  std::vector<long> indeterminate_rows;
  bool negative_exponent = false;
};

inline LimitColumn limit_column(const Column<LeadingMode>& col) {
  LimitColumn out;
  for (const auto& [row, v] : col) {
    auto lim = v.limit();
    switch (lim.kind) {
      case Leading::Limit::Kind::Finite:
        if (lim.value != 0) out.entries.emplace_back(row, lim.value);
        break;
      case Leading::Limit::Kind::NegativeExponent:
        out.negative_exponent = true;
        break;
      case Leading::Limit::Kind::Indeterminate:
        out.indeterminate_rows.push_back(row);
        break;
    }
  }
  return out;
}

/// pi_0 of a generator through the per-leg pipeline (exact limit).
inline LimitColumn pi0_my_column(const Context& ctx, int i, int j, long col,
                                 bool scaled = false) {
  LeadingMode mode;
  long e = scaled ? std::min<long>(i - j, 0) : 0;
  MonomialOp<LeadingMode> op(ctx, mode, Word{Gen{i, j}}, Leading::known(Rat(1), e),
                             Pipeline::PerLeg);
  return limit_column(op.apply(col));
}

/// pi_0 through the global-specialization pipeline in leading-order mode;
/// optionally of the scaled generator t^{min(i-j,0)} u_{ij}.
inline LimitColumn pi0_gp_column(const Context& ctx, int i, int j, long col,
                                 bool scaled = false) {
  LeadingMode mode;
  long e = scaled ? std::min<long>(i - j, 0) : 0;
  MonomialOp<LeadingMode> op(ctx, mode, Word{Gen{i, j}}, Leading::known(Rat(1), e),
                             Pipeline::Global);
  return limit_column(op.apply(col));
}

/// Entrywise numeric limit along a q sequence with a monotone-difference
/// convergence test and first-order Richardson extrapolation.
struct NumericLimit {
  std::vector<std::pair<long, double>> entries;  // extrapolated limits
  bool converged = true;
};

inline NumericLimit numeric_limit_column(const Context& ctx, int i, int j, long col,
                                         const std::vector<double>& q_sequence,
                                         bool scaled = false) {
  NumericLimit out;
  std::map<long, std::vector<double>> values;
  for (double q : q_sequence) {
    FloatMode mode{q};
    double coeff = scaled ? std::pow(q, static_cast<double>(std::min<long>(i - j, 0))) : 1.0;
    MonomialOp<FloatMode> op(ctx, mode, Word{Gen{i, j}}, coeff);
    for (const auto& [row, v] : op.apply(col)) values[row].push_back(v);
  }
  std::size_t m = q_sequence.size();
  for (auto& [row, vals] : values) {
    vals.resize(m, 0.0);
    for (std::size_t k = 2; k < m; ++k) {
      double d1 = std::abs(vals[k - 1] - vals[k - 2]);
      double d2 = std::abs(vals[k] - vals[k - 1]);
      if (d2 > d1 + 1e-15) out.converged = false;
    }
    double ratio = q_sequence[m - 2] / q_sequence[m - 1];
    double est = (ratio * vals[m - 1] - vals[m - 2]) / (ratio - 1.0);
    out.entries.emplace_back(row, est);
  }
  return out;
}

}  // namespace soibelman
}  // namespace qcrystal
