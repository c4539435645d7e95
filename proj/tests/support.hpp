#ifndef LCG_TESTS_SUPPORT_HPP
#define LCG_TESTS_SUPPORT_HPP

// Shared generators and independent oracles for the unit tests.

#include <map>
#include <random>
#include <string>

#include "lcg/lcg.hpp"
#include "lcg/random.hpp"

namespace lcg::testing {

inline std::string data_path(const std::string &name) { return std::string(LCG_DATA_DIR) + "/" + name; }

template <class F>
OFGraph<F> fixture(const std::string &name, Exponent order = kDefaultOrder) {
  return load_graph<F>(data_path(name), std::move(order));
}

// Nonzero rational in [-max, max] with denominators up to max_den.
template <class Rng>
BigRational random_rational(Rng &rng, long max = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(1, max), den(1, max_den);
  std::bernoulli_distribution neg(0.5);
  BigRational q(num(rng), den(rng));
  return neg(rng) ? BigRational(-q) : q;
}

// Random element with up to `terms` terms on exponents k/2 for k in [lo, hi], optionally truncated.
template <class F, class Rng>
Series<F> random_series(Rng &rng, int terms = 4, int lo = -2, int hi = 6, bool truncate = true) {
  std::uniform_int_distribution<int> count(1, terms), exp(lo, hi);
  std::vector<typename Series<F>::Term> t;
  std::map<int, bool> used;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    int e = exp(rng);
    if (used[e])
      continue;
    used[e] = true;
    t.push_back({Exponent(e, 2), F::from_rational(random_rational(rng))});
  }
  std::sort(t.begin(), t.end(), [](const auto &a, const auto &b) { return a.exp < b.exp; });
  Order trunc = Order::infinity();
  if (truncate && std::bernoulli_distribution(0.5)(rng))
    trunc = Order(Exponent(hi + 1 + exp(rng) - lo, 2));
  return Series<F>::from_terms(std::move(t), trunc);
}

// Exponent -> coefficient map: a second representation for checking arithmetic.
using DenseSeries = std::map<BigRational, BigRational>;

inline DenseSeries dense(const Series<Rational> &a) {
  DenseSeries d;
  for (const auto &t : a.terms())
    d[t.exp.value()] = t.coeff;
  return d;
}

inline DenseSeries dense_product(const DenseSeries &a, const DenseSeries &b) {
  DenseSeries out;
  for (const auto &[ea, ca] : a)
    for (const auto &[eb, cb] : b)
      out[BigRational(ea + eb)] += ca * cb;
  return out;
}

// Keeps exponents strictly below `trunc` and drops zeros.
inline DenseSeries below(const DenseSeries &a, const Order &trunc) {
  DenseSeries out;
  for (const auto &[e, c] : a)
    if (c != 0 && (trunc.is_infinite() || Order(Exponent(e)) < trunc))
      out[e] = c;
  return out;
}

} // namespace lcg::testing

#endif // LCG_TESTS_SUPPORT_HPP
