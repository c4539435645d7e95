#ifndef LCG_RANDOM_HPP
#define LCG_RANDOM_HPP

// Seeded random OF-graphs and vertex functions for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lcg {

struct RandomGraphSpec {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 6;
  double edge_probability = 0.5;
  std::vector<Exponent> exponents = {Exponent(0), Exponent(1, 2), Exponent(1), Exponent(2)};
  long max_numerator = 9;
  long max_denominator = 4;
};

/// Uniform rational numerator/denominator in [1, max_num] / [1, max_den].
template <class Rng>
BigRational random_positive_rational(Rng &rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  return BigRational(num(rng), den(rng));
}

/// Connected graph: a random spanning tree plus extra edges, weights r * eps^q.
template <CoefficientField F, class Rng>
OFGraph<F> random_graph(Rng &rng, const RandomGraphSpec &spec = {}, Exponent order = kDefaultOrder) {
  std::uniform_int_distribution<std::size_t> size(spec.min_vertices, spec.max_vertices);
  const std::size_t n = size(rng);
  std::uniform_int_distribution<std::size_t> pick_q(0, spec.exponents.size() - 1);
  std::bernoulli_distribution extra(spec.edge_probability);
  auto weight = [&] {
    return Series<F>::monomial(
        F::from_rational(random_positive_rational(rng, spec.max_numerator, spec.max_denominator)),
        spec.exponents[pick_q(rng)]);
  };
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<typename OFGraph<F>::Edge> edges;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(std::to_string(i + 1));
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    std::size_t u = parent(rng);
    used[u][v] = used[v][u] = true;
    edges.push_back({names[u], names[v], weight()});
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!used[u][v] && extra(rng))
        edges.push_back({names[u], names[v], weight()});
  return OFGraph<F>::from_edges(edges, std::move(order), {}, names);
}

/// Random connected bipartite graph (both classes nonempty).
template <CoefficientField F, class Rng>
OFGraph<F> random_bipartite_graph(Rng &rng, const RandomGraphSpec &spec = {},
                                  Exponent order = kDefaultOrder) {
  std::uniform_int_distribution<std::size_t> size(std::max<std::size_t>(spec.min_vertices, 2),
                                                  spec.max_vertices);
  const std::size_t n = size(rng);
  std::uniform_int_distribution<std::size_t> pick_q(0, spec.exponents.size() - 1);
  std::bernoulli_distribution extra(spec.edge_probability);
  std::uniform_int_distribution<std::size_t> split(1, n - 1);
  const std::size_t k = split(rng); // vertices [0, k) on one side
  auto weight = [&] {
    return Series<F>::monomial(
        F::from_rational(random_positive_rational(rng, spec.max_numerator, spec.max_denominator)),
        spec.exponents[pick_q(rng)]);
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(std::to_string(i + 1));
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<typename OFGraph<F>::Edge> edges;
  // Spanning tree: vertices 0 and k seed both sides; every later vertex hangs off a placed vertex
  // of the other side.
  std::vector<std::size_t> placed{0, k};
  for (std::size_t v = 1; v < n; ++v)
    if (v != k)
      placed.push_back(v);
  for (std::size_t i = 1; i < placed.size(); ++i) {
    const std::size_t v = placed[i];
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < i; ++j)
      if ((placed[j] < k) != (v < k))
        candidates.push_back(placed[j]);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const std::size_t u = candidates[pick(rng)];
    used[u][v] = used[v][u] = true;
    edges.push_back({names[std::min(u, v)], names[std::max(u, v)], weight()});
  }
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = k; v < n; ++v)
      if (!used[u][v] && extra(rng))
        edges.push_back({names[u], names[v], weight()});
  return OFGraph<F>::from_edges(edges, std::move(order), {}, names);
}

/// Random function with small rational values times eps^q.
template <CoefficientField F, class Rng>
VertexFunction<F> random_function(Rng &rng, std::size_t n, const RandomGraphSpec &spec = {}) {
  std::uniform_int_distribution<long> num(-spec.max_numerator, spec.max_numerator);
  std::uniform_int_distribution<long> den(1, spec.max_denominator);
  std::uniform_int_distribution<std::size_t> pick_q(0, spec.exponents.size() - 1);
  std::vector<Series<F>> values;
  for (std::size_t i = 0; i < n; ++i)
    values.push_back(Series<F>::monomial(F::from_rational(BigRational(num(rng), den(rng))),
                                         spec.exponents[pick_q(rng)]));
  return VertexFunction<F>(std::move(values));
}

} // namespace lcg

#endif // LCG_RANDOM_HPP
