#ifndef LCG_SPECTRA_HPP
#define LCG_SPECTRA_HPP

// Eigenvalues and eigenfunctions of the normalized Laplacian over the Levi-Civita field.
//
// The characteristic polynomial is built division-free apart from 1/k (Faddeev-LeVerrier). Its
// roots are lifted to Puiseux series: the Newton polygon of the coefficient valuations gives the
// leading exponent of each root cluster and the real roots of the segment polynomial give the
// leading coefficients; simple roots are then refined by Newton's iteration in the field. A
// cluster of k coinciding leading terms is first tried as a k-fold root (Newton on the (k-1)-th
// derivative, accepted when the polynomial and its lower derivatives vanish there); otherwise the variable is
// shifted by the common leading term and the cluster is split recursively.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "operator.hpp"
#include "real_roots.hpp"
#include "report.hpp"

namespace lcg {

/// Polynomial with Levi-Civita coefficients, ascending degree.
template <CoefficientField F>
class LCPolynomial {
public:
  using series_type = Series<F>;

  LCPolynomial() = default;
  explicit LCPolynomial(std::vector<series_type> coeffs) : c_(std::move(coeffs)) {}

  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<series_type> &coefficients() const noexcept { return c_; }
  std::vector<series_type> &coefficients_mut() noexcept { return c_; }
  const series_type &operator[](std::size_t i) const { return c_.at(i); }

  series_type evaluate(const series_type &x) const {
    series_type acc;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * x + c_[i];
    return acc;
  }

  LCPolynomial derivative(std::size_t times = 1) const {
    std::vector<series_type> d = c_;
    for (std::size_t t = 0; t < times && !d.empty(); ++t) {
      std::vector<series_type> next;
      for (std::size_t i = 1; i < d.size(); ++i)
        next.push_back(d[i].scaled(F::from_int(static_cast<long>(i))));
      d = std::move(next);
    }
    return LCPolynomial(std::move(d));
  }

  /// Coefficients of q(y) = p(y + a).
  LCPolynomial taylor_shift(const series_type &a) const {
    std::vector<series_type> c = c_;
    const std::size_t n = degree();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n; j-- > i;)
        c[j] += a * c[j + 1];
    return LCPolynomial(std::move(c));
  }

private:
  std::vector<series_type> c_;
};

/// det(x I - A), monic.
template <CoefficientField F>
LCPolynomial<F> char_poly(const SquareMatrix<F> &a) {
  const std::size_t n = a.size();
  std::vector<Series<F>> c(n + 1);
  c[n] = Series<F>(1);
  SquareMatrix<F> m = SquareMatrix<F>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    SquareMatrix<F> am = a * m;
    c[n - k] = (-am.trace()).scaled(F::from_rational(BigRational(1, static_cast<long>(k))));
    if (k < n)
      m = am.minus_diagonal(-c[n - k]);
  }
  return LCPolynomial<F>(std::move(c));
}

template <CoefficientField F>
LCPolynomial<F> char_poly(const OperatorMatrix<F> &a) {
  return char_poly(a.entries);
}

/// det(A + x B), expanded over the column subsets filled by the leading rows. Division-free, so
/// exact entries give exact coefficients.
template <CoefficientField F>
LCPolynomial<F> pencil_determinant(const SquareMatrix<F> &a, const SquareMatrix<F> &b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw DimensionError("matrix sizes differ");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::vector<Series<F>>> dp(full + 1);
  dp[0] = {Series<F>(1)};
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (dp[mask].empty())
      continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask >> c & 1U)
        continue;
      const Series<F> &ac = a(row, c), &bc = b(row, c);
      const bool a_zero = ac.is_zero() && ac.is_exact(), b_zero = bc.is_zero() && bc.is_exact();
      if (a_zero && b_zero)
        continue;
      const bool odd = std::popcount(mask >> c) % 2 == 1;
      auto &out = dp[mask | (std::uint32_t{1} << c)];
      out.resize(std::max(out.size(), dp[mask].size() + 1));
      for (std::size_t k = 0; k < dp[mask].size(); ++k) {
        const Series<F> &t = dp[mask][k];
        if (!a_zero)
          out[k] += odd ? -(t * ac) : t * ac;
        if (!b_zero)
          out[k + 1] += odd ? -(t * bc) : t * bc;
      }
    }
    if (mask != 0)
      std::vector<Series<F>>().swap(dp[mask]);
  }
  auto c = std::move(dp[full]);
  c.resize(n + 1);
  return LCPolynomial<F>(std::move(c));
}

namespace detail {

inline std::vector<roots::Root<BigRational>> segment_roots(const std::vector<BigRational> &phi) {
  return roots::rational_roots(phi);
}
inline std::vector<roots::Root<BigFloat>> segment_roots(const std::vector<BigFloat> &phi) {
  return roots::real_roots(phi);
}

template <class F>
Order newton_bound(const LCPolynomial<F> &q, const Series<F> &x) {
  Series<F> r = q.evaluate(x);
  Series<F> d = q.derivative().evaluate(x);
  if (d.is_zero())
    return Order(Exponent(0));
  return r.valuation_bound() - d.lead_exp();
}

// Newton iteration toward a simple root of q starting from x; each step must gain valuation.
// Stops once the correction reaches absolute exponent `target`. A step that stops gaining after
// the first one means the residual has reached the rounding level of the coefficients; x is then
// returned as is, and newton_bound reports the exponent of that step as its precision.
template <class F>
std::optional<Series<F>> newton(const LCPolynomial<F> &q, Series<F> x, const Exponent &target,
                                const Exponent &order) {
  const LCPolynomial<F> dq = q.derivative();
  const Exponent first = x.lead_exp();
  Exponent last = first;
  for (int it = 0; it < 256; ++it) {
    Series<F> r = q.evaluate(x);
    if (r.is_zero())
      return x;
    Series<F> d = dq.evaluate(x);
    if (d.is_zero())
      return std::nullopt;
    Series<F> step = r * inv(d, order);
    if (step.is_zero())
      return x;
    Exponent v = step.lead_exp();
    if (!(v > last))
      return v > first ? std::optional<Series<F>>(x) : std::nullopt;
    if (v >= target)
      return x;
    last = v;
    x = (x - step).truncated(Order(target)).exact_part();
  }
  return std::nullopt;
}

template <class F>
class Lifter {
public:
  Lifter(Exponent order, int max_depth) : order_(std::move(order)), max_depth_(max_depth) {}

  std::vector<Series<F>> run(const LCPolynomial<F> &p) {
    solve(p, Series<F>(), std::nullopt, 0);
    if (out_.size() != p.degree())
      throw LiftError("found " + std::to_string(out_.size()) + " of " +
                      std::to_string(p.degree()) + " roots; the rest are not real");
    return std::move(out_);
  }

private:
  struct Point {
    std::size_t i;
    Exponent v;
  };

  void solve(const LCPolynomial<F> &q, const Series<F> &shift, const std::optional<Exponent> &above,
             int depth) {
    const auto &c = q.coefficients();
    const std::size_t n = q.degree();

    // Roots equal to the shift at working precision.
    std::size_t z = 0;
    while (z < n && c[z].is_zero())
      ++z;
    if (z > 0) {
      Order bound = Order::infinity();
      const Exponent vz = c[z].lead_exp();
      for (std::size_t j = 0; j < z; ++j)
        if (c[j].trunc().is_finite())
          bound = min_order(bound, Order((c[j].trunc().exponent() - vz) /
                                         Exponent(static_cast<long>(z - j))));
      Series<F> root = shift.truncated(bound);
      for (std::size_t k = 0; k < z; ++k)
        out_.push_back(root);
    }

    std::vector<Point> pts;
    for (std::size_t i = z; i <= n; ++i)
      if (!c[i].is_zero())
        pts.push_back({i, c[i].lead_exp()});
    std::vector<Point> hull;
    for (const auto &p : pts) {
      while (hull.size() >= 2) {
        const auto &a = hull[hull.size() - 2];
        const auto &b = hull.back();
        Exponent cross = Exponent(static_cast<long>(b.i - a.i)) * (p.v - a.v) -
                         (b.v - a.v) * Exponent(static_cast<long>(p.i - a.i));
        if (cross > Exponent(0))
          break;
        hull.pop_back();
      }
      hull.push_back(p);
    }

    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
      const Point &a = hull[s];
      const Point &b = hull[s + 1];
      const Exponent gamma = (a.v - b.v) / Exponent(static_cast<long>(b.i - a.i));
      if (above && !(gamma > *above))
        continue;
      std::vector<typename F::value_type> phi(b.i - a.i + 1, F::from_int(0));
      for (std::size_t i = a.i; i <= b.i; ++i)
        if (!c[i].is_zero() &&
            c[i].lead_exp() == a.v - gamma * Exponent(static_cast<long>(i - a.i)))
          phi[i - a.i] = c[i].lead_coeff();
      for (const auto &r : segment_roots(phi))
        cluster(q, shift, Series<F>::monomial(r.value, gamma), gamma,
                static_cast<std::size_t>(r.multiplicity), depth);
    }
  }

  void cluster(const LCPolynomial<F> &q, const Series<F> &shift, const Series<F> &start,
               const Exponent &gamma, std::size_t k, int depth) {
    const Exponent target = gamma + order_;
    if (k == 1) {
      auto x = newton(q, start, target, order_);
      if (!x)
        throw LiftError("Newton iteration stalled on a simple root with leading term " +
                        to_string(start));
      out_.push_back(shift + x->truncated(cap(newton_bound(q, *x), target)));
      return;
    }
    if (auto x = newton(q.derivative(k - 1), start, target, order_)) {
      Series<F> r = q.evaluate(*x);
      Series<F> top = q.derivative(k).evaluate(*x);
      bool flat = r.is_zero();
      for (std::size_t j = 1; flat && j + 1 < k; ++j)
        flat = q.derivative(j).evaluate(*x).is_zero();
      if (flat && !top.is_zero()) {
        Order bound = r.valuation_bound();
        if (bound.is_finite())
          bound = Order((bound.exponent() - top.lead_exp()) / Exponent(static_cast<long>(k)));
        Series<F> root = shift + x->truncated(cap(bound, target));
        for (std::size_t j = 0; j < k; ++j)
          out_.push_back(root);
        return;
      }
    }
    if (depth >= max_depth_)
      throw LiftError("root cluster with leading term " + to_string(start) +
                      " did not separate within " + std::to_string(max_depth_) + " refinements");
    const std::size_t before = out_.size();
    solve(q.taylor_shift(start), shift + start, gamma, depth + 1);
    if (out_.size() - before != k)
      throw LiftError("root cluster with leading term " + to_string(start) + " has " +
                      std::to_string(k) + " members but " + std::to_string(out_.size() - before) +
                      " real roots were found");
  }

  // An exact residual certifies an exact root; otherwise precision stops at the Newton target.
  static Order cap(const Order &bound, const Exponent &target) {
    return bound.is_infinite() ? bound : min_order(bound, Order(target));
  }

  Exponent order_;
  int max_depth_;
  std::vector<Series<F>> out_;
};

// Ascending by field order; values equal at working precision stay adjacent.
template <class F>
void sort_series(std::vector<Series<F>> &v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && compare(v[j], v[j - 1]) < 0; --j)
      std::swap(v[j], v[j - 1]);
}

} // namespace detail

/// All roots of p as Puiseux series to relative order `order`, ascending, repeated by
/// multiplicity. Throws LiftError if a root is not real or a cluster cannot be separated, and
/// ModeError in rational mode when a leading coefficient is irrational.
template <CoefficientField F>
std::vector<Series<F>> lift_roots(const LCPolynomial<F> &p, const Exponent &order, int max_depth = 8) {
  auto roots = detail::Lifter<F>(order, max_depth).run(p);
  detail::sort_series(roots);
  return roots;
}

namespace detail {

// Rounding residue: every known term is below the caller's zero threshold.
template <class F>
bool below_outer_tau(const Series<F> &a) {
  if constexpr (F::exact) {
    return a.is_zero();
  } else {
    const BigFloat t = numeric::outer_tau();
    for (const auto &term : a.terms())
      if (!(mp::abs(term.coeff) < t))
        return false;
    return true;
  }
}

} // namespace detail

/// Basis of the kernel of m, each vector scaled so its first nonzero coordinate is 1. Pivots are
/// taken by full pivoting (least valuation, then largest leading coefficient). Without `rank`,
/// entries zero at working precision count as zero; with it, elimination stops after `rank`
/// pivots, which is how a kernel dimension known from the root multiplicities is imposed, and
/// throws PrecisionError if the rows left over are not zero up to the caller's tau.
template <CoefficientField F>
std::vector<VertexFunction<F>> nullspace(SquareMatrix<F> m, const Exponent &order,
                                         std::optional<std::size_t> rank = std::nullopt) {
  const std::size_t n = m.size();
  const std::size_t max_rank = rank.value_or(n);
  auto better = [](const Series<F> &a, const Series<F> &b) {
    if (a.lead_exp() != b.lead_exp())
      return a.lead_exp() < b.lead_exp();
    return mp::abs(a.lead_coeff()) > mp::abs(b.lead_coeff());
  };
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t row = 0; row < max_rank; ++row) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = row; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c] && !m(r, c).is_zero() &&
            (!best || better(m(r, c), m(best->first, best->second))))
          best = std::pair{r, c};
    if (!best)
      break;
    const auto [pr, col] = *best;
    if (pr != row)
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(row, j), m(pr, j));
    Series<F> piv = inv(m(row, col), order);
    for (std::size_t j = 0; j < n; ++j)
      m(row, j) = j == col ? Series<F>(1) : m(row, j) * piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      Series<F> f = m(r, col);
      for (std::size_t j = 0; j < n; ++j)
        m(r, j) = j == col ? Series<F>() : m(r, j) - f * m(row, j);
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
  }
  if (rank && pivot_col.size() == *rank)
    for (std::size_t r = *rank; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c] && !detail::below_outer_tau(m(r, c)))
          throw PrecisionError("kernel of the expected dimension is not visible at working precision: " +
                               to_string(m(r, c)) + " remains");
  std::vector<VertexFunction<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    auto v = VertexFunction<F>::zero(n);
    v[free] = Series<F>(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -m(r, free);
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) {
        Series<F> s = inv(v[i], order);
        for (std::size_t j = 0; j < n; ++j)
          v[j] = j == i ? Series<F>(1) : v[j] * s;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <CoefficientField F>
struct EigenPair {
  Series<F> lambda;
  Series<F> alpha; // 1 - lambda, eigenvalue of P
  VertexFunction<F> v;
  std::size_t multiplicity;
};

template <CoefficientField F>
struct Spectrum {
  Exponent order; // working relative truncation
  LCPolynomial<F> characteristic;
  std::vector<EigenPair<F>> pairs; // ascending lambda
  Order residual_bound;            // exponent below which every (L - lambda) v is known to vanish
};

struct SpectrumOptions {
  std::optional<Exponent> order; // defaults to the graph's
  int max_depth = 8;
  int refinements = 2;      // retries at doubled working order when lifting fails
  bool orthonormal = false; // unit-norm eigenfunctions; needs square roots
};

namespace detail {

// Re-canonicalizes a series computed under a tightened zero threshold.
template <class F>
Series<F> settle(const Series<F> &a) {
  return Series<F>::from_terms(a.terms(), a.trunc());
}

template <class F>
Spectrum<F> compute_spectrum_guarded(const OFGraph<F> &g, const Exponent &work, const SpectrumOptions &opt);

} // namespace detail

/// Spectrum of L on a connected graph with at most kMaxSpectralVertices vertices. Work is done
/// at twice the requested relative order, doubled again up to `refinements` times when a root
/// cluster or an eigenspace cannot be resolved.
template <CoefficientField F>
Spectrum<F> compute_spectrum(const OFGraph<F> &g, const SpectrumOptions &opt = {}) {
  g.require_spectral();
  Spectrum<F> s;
  {
    numeric::GuardPrecision guard(numeric::Threshold::Tighten);
    Exponent work = opt.order.value_or(g.order()) * Exponent(2);
    for (int attempt = 0;; ++attempt) {
      try {
        s = detail::compute_spectrum_guarded(g, work, opt);
        break;
      } catch (const LiftError &) {
        if (attempt >= opt.refinements)
          throw;
        work = work * Exponent(2);
      }
    }
  }
  for (auto &c : s.characteristic.coefficients_mut())
    c = detail::settle(c);
  for (auto &e : s.pairs) {
    e.lambda = detail::settle(e.lambda);
    e.alpha = detail::settle(e.alpha);
    for (std::size_t x = 0; x < e.v.size(); ++x)
      e.v[x] = detail::settle(e.v[x]);
  }
  return s;
}

namespace detail {

template <class F>
Spectrum<F> compute_spectrum_guarded(const OFGraph<F> &g, const Exponent &work, const SpectrumOptions &opt) {
  const std::size_t n = g.size();

  Spectrum<F> s;
  s.order = work;
  auto lap = laplacian_matrix(g, work);
  s.characteristic = char_poly(lap);
  // L v = lambda v  <=>  (W - D + lambda D) v = 0. The pencil has exact coefficients for exact
  // weights, so the roots are lifted from it rather than from the truncated monic polynomial.
  const SquareMatrix<F> deg = degree_matrix(g);
  const SquareMatrix<F> base = weight_matrix(g) - deg;
  auto lambdas = lift_roots(pencil_determinant(base, deg), work, opt.max_depth);

  auto equal_at_work = [&](const Series<F> &a, const Series<F> &b) {
    Series<F> d = a - b;
    return d.is_zero() || !(d.lead_exp() < work);
  };

  s.residual_bound = Order::infinity();
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && equal_at_work(lambdas[i], lambdas[j]))
      ++j;
    const std::size_t k = j - i;
    const Series<F> &lambda = lambdas[i];
    SquareMatrix<F> shifted = base;
    for (std::size_t x = 0; x < n; ++x)
      shifted(x, x) += lambda * deg(x, x);
    auto basis = nullspace(std::move(shifted), work, n - k);
    if (basis.size() != k)
      throw LiftError("eigenvalue " + to_string(lambda) + " has multiplicity " + std::to_string(k) +
                      " but an eigenspace of dimension " + std::to_string(basis.size()));
    // Gram-Schmidt in the weighted inner product.
    std::vector<Series<F>> sq;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        Series<F> coef = inner(basis[a], basis[b], g) * inv(sq[b], work);
        basis[a] -= coef * basis[b];
      }
      sq.push_back(inner(basis[a], basis[a], g));
    }
    for (std::size_t a = 0; a < k; ++a) {
      VertexFunction<F> v = basis[a];
      if (opt.orthonormal)
        v = inv(sqrt(sq[a], work), work) * v;
      VertexFunction<F> res = apply(lap, v) - lambda * v;
      for (std::size_t x = 0; x < n; ++x)
        s.residual_bound = min_order(s.residual_bound, res[x].valuation_bound());
      s.pairs.push_back({lambdas[i + a], Series<F>(1) - lambdas[i + a], std::move(v), k});
    }
    i = j;
  }
  return s;
}

} // namespace detail

namespace detail {

// Identities between computed values hold up to rounding relative to the magnitudes summed.
template <class F>
bool agree(const Series<F> &a, const Series<F> &b) {
  return negligible(a - b, magnitudes(a) + magnitudes(b));
}

template <class F>
bool orthogonal(const VertexFunction<F> &f, const VertexFunction<F> &h, const OFGraph<F> &g) {
  Series<F> scale;
  for (std::size_t x = 0; x < g.size(); ++x)
    scale += magnitudes(f[x]) * magnitudes(h[x]) * magnitudes(g.vertex_weight(x));
  return negligible(inner(f, h, g), scale);
}

template <class F>
bool residual_vanishes(const OFGraph<F> &g, const Series<F> &lambda, const VertexFunction<F> &v) {
  const VertexFunction<F> res = laplacian_apply(g, v) - lambda * v;
  for (std::size_t x = 0; x < g.size(); ++x) {
    Series<F> scale = magnitudes(lambda) * magnitudes(v[x]);
    for (std::size_t y = 0; y < g.size(); ++y)
      if (g.adjacent(x, y))
        scale += (magnitudes(v[x]) + magnitudes(v[y])) * magnitudes(g.normalized_weight(x, y));
    if (!negligible(res[x], scale))
      return false;
  }
  return true;
}

} // namespace detail

/// Checks the structural facts about the spectrum of L on a connected graph.
template <CoefficientField F>
Report verify_spectral_theorems(const OFGraph<F> &g, const Spectrum<F> &s) {
  numeric::GuardPrecision guard(numeric::Threshold::Verify);
  Report rep;
  const std::size_t n = g.size();
  const auto &p = s.pairs;
  rep.add("all eigenvalues real", p.size() == n,
          std::to_string(p.size()) + " of " + std::to_string(n));
  if (p.size() != n || n < 2)
    return rep;
  const Series<F> one(1), two(2);
  const Series<F> nn(static_cast<long>(n));
  const Series<F> ratio = Series<F>::rational(static_cast<long>(n), static_cast<long>(n - 1));

  bool residual_ok = true;
  for (const auto &e : p)
    residual_ok = residual_ok && detail::residual_vanishes(g, e.lambda, e.v);
  rep.add("eigen-equation residual vanishes", residual_ok, s.residual_bound.is_finite() ? "up to " + to_string(Series<F>::big_o(s.residual_bound)) : "exactly");

  rep.add("lambda_0 = 0 is simple", p[0].lambda.is_zero() && !p[1].lambda.is_zero(),
          "lambda_0 = " + to_string(p[0].lambda) + ", lambda_1 = " + to_string(p[1].lambda));
  bool constant = true;
  for (std::size_t x = 1; x < n; ++x)
    constant = constant && detail::agree(p[0].v[x], p[0].v[0]);
  rep.add("eigenfunction of lambda_0 is constant", constant);
  rep.add("<v_1, 1> = 0", detail::orthogonal(p[1].v, VertexFunction<F>::constant(n, one), g));

  bool orth = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      orth = orth && detail::orthogonal(p[i].v, p[j].v, g);
  rep.add("eigenfunctions are orthogonal", orth);

  bool range = true;
  for (const auto &e : p)
    range = range && e.lambda.sign() >= 0 && compare(e.lambda, two) <= 0;
  rep.add("0 <= lambda_i <= 2", range);

  const bool bip = g.is_bipartite();
  const auto &top = p[n - 1];
  if (!bip) {
    bool below = true;
    for (const auto &e : p)
      below = below && compare(e.lambda, two) < 0;
    rep.add("non-bipartite: lambda_i < 2", below, "lambda_max = " + to_string(top.lambda));
  } else {
    bool sym = true;
    for (std::size_t i = 0; i < n; ++i)
      sym = sym && detail::agree(p[i].lambda + p[n - 1 - i].lambda, two);
    rep.add("bipartite: spectrum symmetric about 1", sym);
  }
  rep.add("alpha_{n-1} = -1 iff bipartite", detail::agree(top.lambda, two) == bip,
          bip ? "bipartite" : "not bipartite");

  Series<F> sum, scale = nn;
  for (const auto &e : p) {
    sum += e.lambda;
    scale += magnitudes(e.lambda);
  }
  rep.add("sum of lambda_i = n", negligible(sum - nn, scale), "sum = " + to_string(sum));

  rep.add("lambda_1 <= n/(n-1)", compare(p[1].lambda, ratio) <= 0, "lambda_1 = " + to_string(p[1].lambda));
  rep.add("lambda_{n-1} >= n/(n-1)", compare(top.lambda, ratio) >= 0,
          "lambda_{n-1} = " + to_string(top.lambda));
  rep.add("alpha_{n-1} < 0", top.alpha.sign() < 0, "alpha_{n-1} = " + to_string(top.alpha));
  rep.add("|alpha_{n-1}| >= 1/(n-1)",
          compare(-top.alpha, Series<F>::rational(1, static_cast<long>(n - 1))) >= 0);
  return rep;
}

} // namespace lcg

#endif // LCG_SPECTRA_HPP
