#ifndef LCG_CHEEGER_HPP
#define LCG_CHEEGER_HPP

// Cheeger constant by exhaustive enumeration of vertex subsets, and the Cheeger inequality
// checks relating it to the spectral gap.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spectra.hpp"

namespace lcg {

template <CoefficientField F>
struct CheegerCut {
  std::vector<std::size_t> subset; // the side not containing vertex 0, ascending
  Series<F> h;
  Series<F> boundary; // b(S, complement)
  Series<F> mass;     // min(b(S), b(complement))
  Series<F> h_one_sided; // min of b(S, complement)/b(S) over b(S) <= b(V)/2
};

namespace detail {

template <class F>
struct SubsetWeights {
  Series<F> inside;
  Series<F> boundary;
};

template <class F>
SubsetWeights<F> subset_weights(const OFGraph<F> &g, std::uint32_t mask) {
  SubsetWeights<F> w;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!(mask >> x & 1U))
      continue;
    w.inside += g.vertex_weight(x);
    for (std::size_t y = 0; y < g.size(); ++y)
      if (!(mask >> y & 1U) && g.adjacent(x, y))
        w.boundary += g.weight(x, y);
  }
  return w;
}

inline std::vector<std::size_t> members(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if (mask >> x & 1U)
      out.push_back(x);
  return out;
}

// Is a/b below c/d? Denominators are positive.
template <class F>
int compare_quotients(const Series<F> &a, const Series<F> &b, const Series<F> &c, const Series<F> &d) {
  return compare(a * d, c * b);
}

} // namespace detail

/// h = min over nonempty proper S of b(S, complement) / min(b(S), b(complement)). Ties between
/// minimizing subsets go to the lexicographically smallest index list.
template <CoefficientField F>
CheegerCut<F> cheeger_constant(const OFGraph<F> &g) {
  g.require_spectral();
  const std::size_t n = g.size();
  const Series<F> total = g.total_weight();

  CheegerCut<F> best;
  bool have = false;
  for (std::uint32_t mask = 2; mask < (1U << n); mask += 2) { // subsets avoiding vertex 0
    auto w = detail::subset_weights(g, mask);
    Series<F> other = total - w.inside;
    Series<F> mass = compare(w.inside, other) <= 0 ? w.inside : other;
    auto subset = detail::members(mask, n);
    int c = have ? detail::compare_quotients(w.boundary, mass, best.boundary, best.mass) : -1;
    if (c < 0 || (c == 0 && subset < best.subset)) {
      best.subset = std::move(subset);
      best.boundary = w.boundary;
      best.mass = mass;
      have = true;
    }
  }
  best.h = best.boundary * inv(best.mass, g.order());

  // One-sided form over every subset no heavier than half the total mass.
  const Series<F> half = total.scaled(F::from_rational(BigRational(1, 2)));
  Series<F> num, den;
  bool any = false;
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
    auto w = detail::subset_weights(g, mask);
    if (compare(w.inside, half) > 0)
      continue;
    if (!any || detail::compare_quotients(w.boundary, w.inside, num, den) < 0) {
      num = w.boundary;
      den = w.inside;
      any = true;
    }
  }
  best.h_one_sided = num * inv(den, g.order());
  return best;
}

namespace detail {

// Sign of lambda_1 - (1 - sqrt(1 - h^2)), evaluated in numeric mode when the root is irrational.
template <class F>
int strong_bound_sign(const Series<F> &lambda1, const Series<F> &h, const Exponent &order) {
  Series<F> d = Series<F>(1) - h * h;
  if (d.is_zero())
    return compare(lambda1, Series<F>(1));
  if constexpr (F::exact) {
    try {
      return compare(lambda1, Series<F>(1) - sqrt(d, order));
    } catch (const ModeError &) {
      return strong_bound_sign(convert<Real>(lambda1), convert<Real>(h), order);
    }
  } else {
    return compare(lambda1, Series<F>(1) - sqrt(d, order));
  }
}

} // namespace detail

/// Cheeger inequalities for a connected graph. The square-root bound is checked in squared form
/// alpha_1^2 <= 1 - h^2, which is equivalent whenever alpha_1 >= 0; a negative alpha_1 satisfies
/// alpha_1 <= sqrt(1 - h^2) trivially.
template <CoefficientField F>
Report cheeger_inequality_check(const OFGraph<F> &g, const Spectrum<F> &s, const CheegerCut<F> &cut) {
  Report rep;
  const Series<F> one(1);
  const Series<F> &lambda1 = s.pairs.at(1).lambda;
  const Series<F> alpha1 = one - lambda1;
  const Series<F> &h = cut.h;
  const Series<F> d = one - h * h;

  rep.add("h <= 1", compare(h, one) <= 0, "h = " + to_string(h));
  rep.add("h agrees with the one-sided quotient", same_value(h, cut.h_one_sided),
          "one-sided = " + to_string(cut.h_one_sided));
  rep.add("lambda_1 >= h^2/2",
          compare(lambda1, (h * h).scaled(F::from_rational(BigRational(1, 2)))) >= 0);

  const bool negative = alpha1.sign() < 0;
  rep.add("alpha_1^2 <= 1 - h^2 (alpha_1 >= 0) or alpha_1 < 0",
          negative || compare(alpha1 * alpha1, d) <= 0,
          "alpha_1 = " + to_string(alpha1) + ", 1 - h^2 = " + to_string(d));
  rep.add("lambda_1 >= 1 - sqrt(1 - h^2)", detail::strong_bound_sign(lambda1, h, s.order) >= 0);

  if (!g.is_complete()) {
    rep.add("non-complete: alpha_1 >= 0", alpha1.sign() >= 0, "alpha_1 = " + to_string(alpha1));
    rep.add("non-complete: alpha_1 <= sqrt(1 - h^2)", !negative && compare(alpha1 * alpha1, d) <= 0);
  }
  return rep;
}

} // namespace lcg

#endif // LCG_CHEEGER_HPP
