#ifndef LCG_OPERATOR_HPP
#define LCG_OPERATOR_HPP

// Scalar product on vertex functions, the normalized Laplacian L, the probability operator
// P = I - L, the Green formula and the Rayleigh quotient.

#include <cstddef>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace lcg {

/// Dense square matrix over Series<F>.
template <CoefficientField F>
class SquareMatrix {
public:
  using series_type = Series<F>;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = series_type(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  series_type &operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const series_type &operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  series_type trace() const {
    series_type t;
    for (std::size_t i = 0; i < n_; ++i)
      t += (*this)(i, i);
    return t;
  }

  friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
    if (a.n_ != b.n_)
      throw DimensionError("matrix sizes differ");
    SquareMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto &aik = a(i, k);
        if (aik.is_zero() && aik.is_exact())
          continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend SquareMatrix operator-(const SquareMatrix &a, const SquareMatrix &b) {
    if (a.n_ != b.n_)
      throw DimensionError("matrix sizes differ");
    SquareMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k)
      c.entries_[k] -= b.entries_[k];
    return c;
  }

  /// M - s*I
  SquareMatrix minus_diagonal(const series_type &s) const {
    SquareMatrix c = *this;
    for (std::size_t i = 0; i < n_; ++i)
      c(i, i) -= s;
    return c;
  }

private:
  std::size_t n_ = 0;
  std::vector<series_type> entries_;
};

enum class OperatorKind { Laplacian, Probability };

template <CoefficientField F>
struct OperatorMatrix {
  OperatorKind kind;
  SquareMatrix<F> entries;

  std::size_t size() const { return entries.size(); }
  const Series<F> &operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

/// Matrix of P: entry (x, y) = p(x, y), inverses of b(x) known to relative order `order`.
template <CoefficientField F>
OperatorMatrix<F> probability_matrix(const OFGraph<F> &g, const Exponent &order) {
  const std::size_t n = g.size();
  SquareMatrix<F> m(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (g.vertex_weight(x).is_zero())
      throw GraphError("vertex '" + g.name(x) + "' has no incident edge");
    Series<F> inv_bx = inv(g.vertex_weight(x), order);
    for (std::size_t y = 0; y < n; ++y)
      if (g.adjacent(x, y))
        m(x, y) = g.weight(x, y) * inv_bx;
  }
  return {OperatorKind::Probability, std::move(m)};
}

template <CoefficientField F>
OperatorMatrix<F> probability_matrix(const OFGraph<F> &g) {
  return probability_matrix(g, g.order());
}

/// Matrix of L = I - P.
template <CoefficientField F>
OperatorMatrix<F> laplacian_matrix(const OFGraph<F> &g, const Exponent &order) {
  auto p = probability_matrix(g, order);
  return {OperatorKind::Laplacian, SquareMatrix<F>::identity(g.size()) - p.entries};
}

template <CoefficientField F>
OperatorMatrix<F> laplacian_matrix(const OFGraph<F> &g) {
  return laplacian_matrix(g, g.order());
}

/// Edge weights b(x, y) as a matrix.
template <CoefficientField F>
SquareMatrix<F> weight_matrix(const OFGraph<F> &g) {
  SquareMatrix<F> m(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (g.adjacent(x, y))
        m(x, y) = g.weight(x, y);
  return m;
}

/// diag(b(x))
template <CoefficientField F>
SquareMatrix<F> degree_matrix(const OFGraph<F> &g) {
  SquareMatrix<F> m(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    m(x, x) = g.vertex_weight(x);
  return m;
}

template <CoefficientField F>
VertexFunction<F> apply(const SquareMatrix<F> &m, const VertexFunction<F> &f) {
  if (m.size() != f.size())
    throw DimensionError("operator and function dimensions differ");
  std::vector<Series<F>> out(f.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!(m(i, j).is_zero() && m(i, j).is_exact()))
        out[i] += m(i, j) * f[j];
  return VertexFunction<F>(std::move(out));
}

template <CoefficientField F>
VertexFunction<F> apply(const OperatorMatrix<F> &m, const VertexFunction<F> &f) {
  return apply(m.entries, f);
}

/// <f, g> = sum_x f(x) g(x) b(x)
template <CoefficientField F>
Series<F> inner(const VertexFunction<F> &f, const VertexFunction<F> &g, const OFGraph<F> &graph) {
  if (f.size() != graph.size() || g.size() != graph.size())
    throw DimensionError("function is not defined on the graph's vertex set");
  Series<F> s;
  for (std::size_t x = 0; x < graph.size(); ++x)
    s += f[x] * g[x] * graph.vertex_weight(x);
  return s;
}

/// ||f|| = sqrt(<f, f>). Needs numeric mode unless <f, f> has a rational square root.
template <CoefficientField F>
Series<F> norm(const VertexFunction<F> &f, const OFGraph<F> &graph) {
  Series<F> sq = inner(f, f, graph);
  if (sq.is_zero())
    return sq;
  return sqrt(sq, graph.order());
}

/// L f computed from its definition sum_y (f(x) - f(y)) p(x, y).
template <CoefficientField F>
VertexFunction<F> laplacian_apply(const OFGraph<F> &g, const VertexFunction<F> &f) {
  if (f.size() != g.size())
    throw DimensionError("function is not defined on the graph's vertex set");
  std::vector<Series<F>> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (g.adjacent(x, y))
        out[x] += (f[x] - f[y]) * g.normalized_weight(x, y);
  return VertexFunction<F>(std::move(out));
}

/// Both sides of the Green formula, evaluated independently:
///   lhs = sum_x (L f)(x) g(x) b(x),   rhs = 1/2 sum_{x,y} (f(y) - f(x)) (g(y) - g(x)) b(x, y).
template <CoefficientField F>
std::pair<Series<F>, Series<F>> green_sides(const VertexFunction<F> &f, const VertexFunction<F> &g,
                                            const OFGraph<F> &graph) {
  VertexFunction<F> lf = laplacian_apply(graph, f);
  Series<F> lhs;
  for (std::size_t x = 0; x < graph.size(); ++x)
    lhs += lf[x] * g[x] * graph.vertex_weight(x);
  Series<F> rhs;
  for (std::size_t x = 0; x < graph.size(); ++x)
    for (std::size_t y = 0; y < graph.size(); ++y)
      if (graph.adjacent(x, y))
        rhs += (f[y] - f[x]) * (g[y] - g[x]) * graph.weight(x, y);
  rhs = rhs.scaled(F::from_rational(BigRational(1, 2)));
  return {std::move(lhs), std::move(rhs)};
}

/// R(f) = <L f, f> / <f, f> for f not identically zero.
template <CoefficientField F>
Series<F> rayleigh(const VertexFunction<F> &f, const OFGraph<F> &graph) {
  if (f.is_zero())
    throw DomainError("Rayleigh quotient of the zero function");
  Series<F> num = inner(laplacian_apply(graph, f), f, graph);
  return num * inv(inner(f, f, graph), graph.order());
}

} // namespace lcg

#endif // LCG_OPERATOR_HPP
