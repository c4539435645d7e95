#ifndef LCG_WALK_HPP
#define LCG_WALK_HPP

// Iterates of the probability operator, their equilibria, the convergence bounds, and the
// limit behaviour of eigenvalue powers over the Levi-Civita field.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cheeger.hpp"

namespace lcg {

/// f~(x) = (1/b(V)) sum_y f(y) b(y)
template <CoefficientField F>
VertexFunction<F> equilibrium_full(const OFGraph<F> &g, const VertexFunction<F> &f,
                                   std::optional<Exponent> order = std::nullopt) {
  if (f.size() != g.size())
    throw DimensionError("function is not defined on the graph's vertex set");
  Series<F> mean;
  for (std::size_t y = 0; y < g.size(); ++y)
    mean += f[y] * g.vertex_weight(y);
  mean = mean * inv(g.total_weight(), order.value_or(g.order()));
  return VertexFunction<F>::constant(g.size(), mean);
}

/// f-bar(x) = (2/b(V)) sum_{y in the part of x} f(y) b(y)
template <CoefficientField F>
VertexFunction<F> equilibrium_bipartite(const OFGraph<F> &g, const Partition &part,
                                        const VertexFunction<F> &f,
                                        std::optional<Exponent> order = std::nullopt) {
  if (f.size() != g.size())
    throw DimensionError("function is not defined on the graph's vertex set");
  std::vector<int> side(g.size(), -1);
  for (auto x : part.first)
    side.at(x) = 0;
  for (auto x : part.second) {
    if (side.at(x) != -1)
      throw GraphError("partition classes overlap");
    side[x] = 1;
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (side[x] == -1)
      throw GraphError("partition does not cover vertex '" + g.name(x) + "'");
    for (std::size_t y = 0; y < g.size(); ++y)
      if (g.adjacent(x, y) && side[y] == side[x])
        throw GraphError("edge " + g.name(x) + "-" + g.name(y) + " lies inside a partition class");
  }
  Series<F> sums[2];
  for (std::size_t y = 0; y < g.size(); ++y)
    sums[side[y]] += f[y] * g.vertex_weight(y);
  Series<F> scale = inv(g.total_weight(), order.value_or(g.order())).scaled(F::from_int(2));
  Series<F> vals[2] = {sums[0] * scale, sums[1] * scale};
  std::vector<Series<F>> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    out[x] = vals[side[x]];
  return VertexFunction<F>(std::move(out));
}

struct LimitVerdict {
  enum class Kind { ConvergesToZero, Stationary, NoLimitNoPartialLimits, AlternatingPartialLimits };
  Kind kind;
  Order q; // leading exponent, for ConvergesToZero

  friend bool operator==(const LimitVerdict &, const LimitVerdict &) = default;
};

inline std::string to_string(const LimitVerdict &v) {
  switch (v.kind) {
  case LimitVerdict::Kind::ConvergesToZero:
    return "ConvergesToZero(q = " + v.q.str() + ")";
  case LimitVerdict::Kind::Stationary:
    return "Stationary";
  case LimitVerdict::Kind::NoLimitNoPartialLimits:
    return "NoLimitNoPartialLimits";
  case LimitVerdict::Kind::AlternatingPartialLimits:
    return "AlternatingPartialLimits";
  }
  return "?";
}

/// Limit behaviour of alpha^m v(x) as m grows, from the leading term of an eigenvalue of P.
template <CoefficientField F>
LimitVerdict classify_eigen_limit(const Series<F> &alpha) {
  if (compare(abs(alpha), Series<F>(1)) > 0)
    throw DomainError("|alpha| > 1 is not an eigenvalue of P: " + to_string(alpha));
  using K = LimitVerdict::Kind;
  if (alpha.is_zero())
    return {K::ConvergesToZero, alpha.valuation_bound()};
  const Exponent &q0 = alpha.lead_exp();
  if (q0 > Exponent(0))
    return {K::ConvergesToZero, Order(q0)};
  if (same_value(alpha, Series<F>(1)))
    return {K::Stationary, Order(0)};
  if (same_value(alpha, Series<F>(-1)))
    return {K::AlternatingPartialLimits, Order(0)};
  return {K::NoLimitNoPartialLimits, Order(0)};
}

enum class WalkMode { Full, Bipartite };

enum class SpanCheck { NotRequired, Verified, Violated, Unverified };

inline std::string to_string(SpanCheck s) {
  switch (s) {
  case SpanCheck::NotRequired:
    return "not required";
  case SpanCheck::Verified:
    return "verified";
  case SpanCheck::Violated:
    return "violated";
  case SpanCheck::Unverified:
    return "unverified";
  }
  return "?";
}

template <CoefficientField F>
struct WalkStep {
  int m; // P^m f in full mode, P^(2m) f in bipartite mode
  VertexFunction<F> value;
  Series<F> deviation_sq;
  std::optional<bool> alpha_bound_ok;   // deviation^2 <= alpha_1^(2k) <f, f>, k = m or 2m
  std::optional<bool> cheeger_bound_ok; // deviation^2 <= (1 - h^2)^k <f, f>
};

template <CoefficientField F>
struct WalkReport {
  WalkMode mode;
  VertexFunction<F> equilibrium;
  Series<F> norm_sq; // <f, f>
  std::vector<WalkStep<F>> steps;
  SpanCheck span = SpanCheck::NotRequired;
  std::vector<LimitVerdict> classification; // per eigenvalue when a spectrum was supplied

  /// Bounds hold at every step; only meaningful when the span precondition is not violated.
  bool bounds_hold() const {
    for (const auto &s : steps)
      if (s.alpha_bound_ok == false || s.cheeger_bound_ok == false || s.deviation_sq.sign() < 0)
        return false;
    return true;
  }
};

template <CoefficientField F>
struct WalkOptions {
  std::optional<Series<F>> alpha1_squared;
  std::optional<Series<F>> h;
  const Spectrum<F> *spectrum = nullptr;
  std::optional<Exponent> order; // default max(graph order, 4 m_max + 4)
};

/// Computes P^m f (full) or P^(2m) f (bipartite) for m = 1..m_max with the squared deviation
/// from the matching equilibrium, and checks the supplied bounds in squared form.
template <CoefficientField F>
WalkReport<F> iterate(const OFGraph<F> &g, const VertexFunction<F> &f, int m_max, WalkMode mode,
                      const WalkOptions<F> &opt = {}) {
  if (f.size() != g.size())
    throw DimensionError("function is not defined on the graph's vertex set");
  if (m_max < 0)
    throw DomainError("number of steps must be non-negative");
  const Exponent work = opt.order.value_or(std::max(g.order(), Exponent(4L * m_max + 4)));

  WalkReport<F> rep;
  rep.mode = mode;
  if (mode == WalkMode::Bipartite) {
    auto part = g.bipartition();
    if (!part)
      throw GraphError("bipartite walk requested on a non-bipartite graph");
    rep.equilibrium = equilibrium_bipartite(g, *part, f, work);
  } else {
    rep.equilibrium = equilibrium_full(g, f, work);
  }
  rep.norm_sq = inner(f, f, g);

  if (opt.spectrum) {
    for (const auto &e : opt.spectrum->pairs)
      rep.classification.push_back(classify_eigen_limit(e.alpha));
    if (mode == WalkMode::Full) {
      rep.span = SpanCheck::Verified;
      for (const auto &e : opt.spectrum->pairs)
        if (e.alpha.sign() <= 0 && !inner(f, e.v, g).is_zero())
          rep.span = SpanCheck::Violated;
    }
  } else if (mode == WalkMode::Full) {
    rep.span = SpanCheck::Unverified;
  }

  const auto p = probability_matrix(g, work);
  const int per_step = mode == WalkMode::Bipartite ? 2 : 1;
  std::optional<Series<F>> cheeger_base;
  if (opt.h)
    cheeger_base = Series<F>(1) - *opt.h * *opt.h;

  VertexFunction<F> cur = f;
  for (int m = 1; m <= m_max; ++m) {
    for (int k = 0; k < per_step; ++k)
      cur = apply(p, cur);
    WalkStep<F> step{m, cur, {}, std::nullopt, std::nullopt};
    VertexFunction<F> d = cur - rep.equilibrium;
    step.deviation_sq = inner(d, d, g);
    const auto power = static_cast<unsigned long>(per_step * m);
    if (opt.alpha1_squared)
      step.alpha_bound_ok = compare(step.deviation_sq, pow(*opt.alpha1_squared, power) * rep.norm_sq) <= 0;
    if (cheeger_base)
      step.cheeger_bound_ok = compare(step.deviation_sq, pow(*cheeger_base, power) * rep.norm_sq) <= 0;
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

/// Squares of the eigenvalues of P, descending, as roots of det(x I - P^2). In the bipartite
/// case these stay rational when the eigenvalues come in irrational +-pairs.
template <CoefficientField F>
std::vector<Series<F>> squared_eigenvalues(const OFGraph<F> &g, std::optional<Exponent> order = std::nullopt) {
  g.require_spectral();
  std::vector<Series<F>> roots;
  {
    numeric::GuardPrecision guard(numeric::Threshold::Tighten);
    const Exponent work = order.value_or(g.order()) * Exponent(2);
    auto p = probability_matrix(g, work);
    roots = lift_roots(char_poly(p.entries * p.entries), work);
  }
  std::reverse(roots.begin(), roots.end());
  for (auto &r : roots)
    r = detail::settle(r);
  return roots;
}

/// alpha_1^2 on a bipartite graph: the largest square after the pair belonging to
/// alpha_0 = 1 and alpha_{n-1} = -1. (Elsewhere the squares lose the sign information.)
template <CoefficientField F>
Series<F> alpha1_squared(const OFGraph<F> &g, std::optional<Exponent> order = std::nullopt) {
  if (!g.is_bipartite())
    throw DomainError("alpha_1^2 is read off the squared spectrum only on bipartite graphs");
  auto sq = squared_eigenvalues(g, order);
  if (sq.size() <= 2)
    throw DomainError("graph has no eigenvalue alpha_1 besides +-1");
  return sq[2];
}

template <CoefficientField F>
struct NonconvergenceWitness {
  VertexFunction<F> v; // eigenfunction of alpha_{n-1}
  std::size_t vertex;
  Series<F> alpha;
  Series<F> gap_bound; // eps |1 + alpha| |v(x)|
  int pairs_checked = 0;
  int pairs_failed = 0;
};

/// The sequence alpha_{n-1}^m v(x) has no Cauchy subsequence: every gap over m + l <= max_sum
/// exceeds eps |1 + alpha_{n-1}| |v(x)|.
template <CoefficientField F>
NonconvergenceWitness<F> nonconvergence_witness(const OFGraph<F> &g, const Spectrum<F> &s,
                                                int max_sum = 20) {
  if (g.is_bipartite())
    throw DomainError("non-convergence witness needs a non-bipartite graph");
  const auto &top = s.pairs.back();
  NonconvergenceWitness<F> w{top.v, 0, top.alpha, {}};
  bool found = false;
  for (std::size_t x = 0; x < top.v.size() && !found; ++x)
    if (!top.v[x].is_zero()) {
      w.vertex = x;
      found = true;
    }
  if (!found)
    throw LiftError("eigenfunction of alpha_{n-1} vanishes at working precision");
  const Series<F> vx = top.v[w.vertex];
  w.gap_bound = Series<F>::eps() * abs(Series<F>(1) + top.alpha) * abs(vx);

  std::vector<Series<F>> powers(static_cast<std::size_t>(max_sum) + 1);
  powers[0] = Series<F>(1);
  for (int k = 1; k <= max_sum; ++k)
    powers[k] = powers[k - 1] * top.alpha;
  for (int m = 0; m < max_sum; ++m)
    for (int l = 1; m + l <= max_sum; ++l) {
      Series<F> gap = abs((powers[m] - powers[m + l]) * vx);
      ++w.pairs_checked;
      if (compare(gap, w.gap_bound) <= 0)
        ++w.pairs_failed;
    }
  return w;
}

template <CoefficientField F>
struct ConvergenceVerdict {
  enum class Guarantee { None, EvenStepsAllFunctions, PositiveSpan };
  bool h_comparable_to_one;
  bool bipartite;
  bool complete;
  Guarantee guarantee;
  bool vacuous = false; // positive-alpha span is only the constants
  std::optional<LimitVerdict> alpha1;
  bool consistent = true;
  std::string summary;
};

/// Which convergence statement follows from h ~ 1, cross-checked against the limit classifier
/// of alpha_1 when alpha_1 is known.
template <CoefficientField F>
ConvergenceVerdict<F> h_convergence_verdict(const OFGraph<F> &g, const CheegerCut<F> &cut,
                                            const std::optional<Series<F>> &alpha1 = std::nullopt) {
  using G = typename ConvergenceVerdict<F>::Guarantee;
  ConvergenceVerdict<F> v{comparable(cut.h, Series<F>(1)), g.is_bipartite(), g.is_complete(), G::None};
  if (alpha1)
    v.alpha1 = classify_eigen_limit(*alpha1);
  const bool converges = v.alpha1 && v.alpha1->kind == LimitVerdict::Kind::ConvergesToZero;

  if (v.h_comparable_to_one && v.bipartite && g.size() > 2) {
    v.guarantee = G::EvenStepsAllFunctions;
    v.summary = "h ~ 1 on a bipartite graph: P^(2m) f -> f-bar for every f";
    if (v.alpha1)
      v.consistent = converges;
  } else if (v.h_comparable_to_one && !v.bipartite) {
    v.guarantee = G::PositiveSpan;
    v.summary = "h ~ 1 on a non-bipartite graph: P^m f -> f~ on the span of eigenfunctions with alpha_i > 0";
    if (v.complete)
      v.summary += " (complete graph: outside the non-complete hypothesis)";
    if (v.alpha1) {
      v.vacuous = alpha1->sign() <= 0;
      if (v.vacuous)
        v.summary += "; alpha_1 <= 0, so that span is only the constants and the statement is vacuous";
      else
        v.consistent = converges;
    }
  } else {
    v.summary = v.h_comparable_to_one ? "h ~ 1 but the graph has two vertices: no guarantee"
                                      : "h is not comparable to 1: no convergence guarantee";
    if (v.alpha1 && v.alpha1->kind == LimitVerdict::Kind::NoLimitNoPartialLimits)
      v.summary += "; alpha_1 has no limit, so P^m f does not converge for general f";
  }
  if (v.alpha1)
    v.summary += "; alpha_1: " + to_string(*v.alpha1);
  if (!v.consistent)
    v.summary += "; INCONSISTENT with the classifier";
  return v;
}

} // namespace lcg

#endif // LCG_WALK_HPP
