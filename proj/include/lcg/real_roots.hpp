#ifndef LCG_REAL_ROOTS_HPP
#define LCG_REAL_ROOTS_HPP

// Real roots of univariate polynomials with real or rational coefficients.
//
// Numeric roots come from the derivative cascade: the real roots of p' split the line into
// intervals on which p is monotone, each holding at most one simple root (found by bisection),
// while a critical point where p vanishes is a root of multiplicity one more than its
// multiplicity in p'. Exact rational roots are recovered from the numeric ones on each square-free
// factor: a rational root p/q of an integer polynomial has q | leading coefficient, so rounding
// x * lead to the nearest integer gives the only candidate, which is then checked exactly.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "field.hpp"

namespace lcg::roots {

/// Coefficients in ascending degree.
using RealPoly = std::vector<BigFloat>;
using RationalPoly = std::vector<BigRational>;

template <class V>
struct Root {
  V value;
  int multiplicity;
};

namespace detail {

template <class T>
void trim(std::vector<T> &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

template <class T>
std::vector<T> derivative(const std::vector<T> &p) {
  std::vector<T> d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * static_cast<long>(i));
  return d;
}

template <class T>
T evaluate(const std::vector<T> &p, const T &x) {
  T acc = 0;
  for (std::size_t i = p.size(); i-- > 0;)
    acc = acc * x + p[i];
  return acc;
}

// Rounding-error scale of evaluating p at x.
inline BigFloat magnitude(const RealPoly &p, const BigFloat &x) {
  BigFloat ax = mp::abs(x), acc = 0;
  for (std::size_t i = p.size(); i-- > 0;)
    acc = acc * ax + mp::abs(p[i]);
  return acc;
}

inline BigFloat bisect(const RealPoly &p, BigFloat lo, BigFloat hi) {
  int slo = evaluate(p, lo) < 0 ? -1 : 1;
  const unsigned bits = numeric::precision_bits();
  BigFloat width_floor = mp::ldexp(BigFloat(1), -static_cast<int>(bits));
  for (unsigned it = 0; it < 4 * bits + 64; ++it) {
    BigFloat mid = (lo + hi) / 2;
    if (mid == lo || mid == hi)
      break;
    BigFloat fm = evaluate(p, mid);
    if (fm == 0)
      return mid;
    if ((fm < 0 ? -1 : 1) == slo)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= width_floor * std::max(BigFloat(1), BigFloat(mp::abs(mid))))
      break;
  }
  return (lo + hi) / 2;
}

} // namespace detail

/// Real roots of p, ascending, with multiplicities. Roots are accurate to roughly the working
/// precision for simple roots; a critical point where |p| is below max(tau, noise) relative to
/// the evaluation magnitude counts as a root.
inline std::vector<Root<BigFloat>> real_roots(RealPoly p) {
  detail::trim(p);
  std::vector<Root<BigFloat>> out;
  if (p.size() <= 1)
    return out;
  if (p.size() == 2) {
    out.push_back({BigFloat(-p[0] / p[1]), 1});
    return out;
  }
  const BigFloat &lead = p.back();
  BigFloat bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    bound = std::max(bound, BigFloat(mp::abs(p[i] / lead)));
  bound += 1;

  auto critical = real_roots(detail::derivative(p));
  const BigFloat threshold = std::max(numeric::tau(), numeric::noise());
  std::vector<std::pair<BigFloat, bool>> points; // (x, x is a root of p)
  points.emplace_back(-bound, false);
  for (const auto &c : critical) {
    BigFloat val = detail::evaluate(p, c.value);
    bool is_root = mp::abs(val) <= threshold * detail::magnitude(p, c.value);
    points.emplace_back(c.value, is_root);
    if (is_root)
      out.push_back({c.value, c.multiplicity + 1});
  }
  points.emplace_back(bound, false);

  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const auto &[a, a_root] = points[k];
    const auto &[b, b_root] = points[k + 1];
    if (a_root || b_root || !(a < b))
      continue;
    BigFloat fa = detail::evaluate(p, a), fb = detail::evaluate(p, b);
    if ((fa < 0) != (fb < 0) && fa != 0 && fb != 0)
      out.push_back({detail::bisect(p, a, b), 1});
  }
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.value < y.value; });
  return out;
}

// ---- exact polynomials over Q -------------------------------------------------------------

namespace detail {

// Quotient and remainder of a / b over Q; b must be nonzero.
inline std::pair<RationalPoly, RationalPoly> divmod(RationalPoly a, const RationalPoly &b) {
  trim(a);
  RationalPoly q;
  if (a.size() < b.size())
    return {q, a};
  q.assign(a.size() - b.size() + 1, BigRational(0));
  for (std::size_t i = a.size(); i-- >= b.size();) {
    BigRational c = a[i] / b.back();
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] -= c * b[j];
    if (i == b.size() - 1)
      break;
  }
  trim(a);
  return {q, a};
}

inline RationalPoly monic(RationalPoly p) {
  trim(p);
  if (!p.empty()) {
    BigRational l = p.back();
    for (auto &c : p)
      c /= l;
  }
  return p;
}

inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline RationalPoly sub(RationalPoly a, const RationalPoly &b) {
  if (a.size() < b.size())
    a.resize(b.size(), BigRational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  trim(a);
  return a;
}

} // namespace detail

/// Yun's square-free factorization of a nonzero polynomial: factors g_k with multiplicity k.
inline std::vector<std::pair<RationalPoly, int>> squarefree_factors(RationalPoly p) {
  detail::trim(p);
  std::vector<std::pair<RationalPoly, int>> out;
  if (p.size() <= 1)
    return out;
  RationalPoly dp = detail::derivative(p);
  RationalPoly a = detail::gcd(p, dp);
  RationalPoly b = detail::divmod(p, a).first;
  RationalPoly c = detail::divmod(dp, a).first;
  RationalPoly d = detail::sub(c, detail::derivative(b));
  for (int k = 1; b.size() > 1; ++k) {
    RationalPoly g = detail::gcd(b, d);
    b = detail::divmod(b, g).first;
    c = detail::divmod(d, g).first;
    d = detail::sub(c, detail::derivative(b));
    if (g.size() > 1)
      out.emplace_back(detail::monic(g), k);
  }
  return out;
}

/// All real roots of p, which must all be rational; throws ModeError otherwise.
inline std::vector<Root<BigRational>> rational_roots(const RationalPoly &p) {
  std::vector<Root<BigRational>> out;
  for (const auto &[factor, mult] : squarefree_factors(p)) {
    // Clear denominators: integer polynomial with the same roots.
    BigInt l = 1;
    for (const auto &c : factor)
      l = mp::lcm(l, BigInt(mp::denominator(c)));
    BigInt lead = mp::numerator(factor.back()) * (l / mp::denominator(factor.back()));
    lead = mp::abs(lead);

    unsigned need = static_cast<unsigned>(mp::msb(lead) + 1);
    for (const auto &c : factor)
      if (c != 0)
        need = std::max(need, static_cast<unsigned>(mp::msb(BigInt(mp::abs(mp::numerator(c)))) + 1));
    numeric::ScopedPrecision guard(std::max(numeric::precision_bits(), 3 * need + 96));

    RealPoly approx;
    for (const auto &c : factor)
      approx.push_back(BigFloat(mp::numerator(c)) / BigFloat(mp::denominator(c)));
    for (const auto &r : real_roots(approx)) {
      BigFloat scaled = r.value * BigFloat(lead);
      BigInt num(mp::round(scaled));
      BigRational candidate(num, lead);
      if (detail::evaluate(factor, candidate) != 0)
        throw ModeError("eigenvalue expansion has an irrational coefficient (root of " +
                        std::to_string(factor.size() - 1) +
                        "-degree factor); rerun in numeric coefficient mode");
      out.push_back({candidate, mult * r.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.value < y.value; });
  return out;
}

} // namespace lcg::roots

#endif // LCG_REAL_ROOTS_HPP
