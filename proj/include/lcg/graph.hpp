#ifndef LCG_GRAPH_HPP
#define LCG_GRAPH_HPP

// Finite graphs with symmetric positive Levi-Civita edge weights (OF-graphs) and functions on
// their vertices.

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "format.hpp"
#include "series.hpp"

namespace lcg {

/// Relative truncation used when no other is requested.
inline const Exponent kDefaultOrder{8};

/// Largest graph accepted by the spectral and Cheeger routines.
inline constexpr std::size_t kMaxSpectralVertices = 12;

struct Partition {
  std::vector<std::size_t> first;  // contains vertex 0
  std::vector<std::size_t> second;

  friend bool operator==(const Partition &, const Partition &) = default;
};

template <CoefficientField F>
class OFGraph {
public:
  using series_type = Series<F>;

  struct Edge {
    std::string u, v;
    series_type weight;
  };

  OFGraph() = default;

  /// Validates and builds a graph. Weights must be positive; an exact zero weight means "no
  /// edge". Vertices are ordered by first mention.
  static OFGraph from_edges(const std::vector<Edge> &edges, Exponent order = kDefaultOrder,
                            const std::vector<std::size_t> &lines = {},
                            const std::vector<std::string> &vertex_order = {}) {
    OFGraph g;
    g.order_ = std::move(order);
    for (const auto &name : vertex_order)
      g.intern(name);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      g.intern(edges[k].u);
      g.intern(edges[k].v);
    }
    const std::size_t n = g.names_.size();
    g.weights_.assign(n, std::vector<series_type>(n));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto &e = edges[k];
      std::size_t line = k < lines.size() ? lines[k] : 0;
      std::size_t i = g.index_.at(e.u), j = g.index_.at(e.v);
      if (i == j)
        throw GraphError("loop at vertex '" + e.u + "'", line);
      if (seen[i][j])
        throw GraphError("duplicate edge '" + e.u + "' - '" + e.v + "'", line);
      seen[i][j] = seen[j][i] = true;
      int s = e.weight.sign();
      if (s < 0)
        throw GraphError("negative weight on edge '" + e.u + "' - '" + e.v + "'", line);
      if (s == 0 && !e.weight.is_exact())
        throw GraphError("weight of edge '" + e.u + "' - '" + e.v + "' is indistinguishable from 0",
                         line);
      g.weights_[i][j] = g.weights_[j][i] = e.weight;
    }
    // Summed with guard bits so that b(x) equals the sum of its edge weights exactly.
    numeric::GuardPrecision guard;
    g.degrees_.assign(n, series_type());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g.degrees_[i] += g.weights_[i][j];
    return g;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string> &vertices() const noexcept { return names_; }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const Exponent &order() const noexcept { return order_; }
  OFGraph with_order(Exponent order) const {
    OFGraph g = *this;
    g.order_ = std::move(order);
    return g;
  }

  std::size_t index(const std::string &vertex) const {
    auto it = index_.find(vertex);
    if (it == index_.end())
      throw GraphError("unknown vertex '" + vertex + "'");
    return it->second;
  }

  const series_type &weight(std::size_t i, std::size_t j) const { return weights_.at(i).at(j); }
  bool adjacent(std::size_t i, std::size_t j) const { return !weights_.at(i).at(j).is_zero(); }

  /// b(x): sum of incident edge weights.
  const series_type &vertex_weight(std::size_t i) const { return degrees_.at(i); }
  const series_type &vertex_weight(const std::string &x) const { return degrees_[index(x)]; }

  /// b(V) = sum of all vertex weights.
  series_type total_weight() const {
    series_type s;
    for (const auto &d : degrees_)
      s += d;
    return s;
  }

  /// p(x,y) = b(x,y) / b(x).
  series_type normalized_weight(std::size_t i, std::size_t j, const Exponent &order) const {
    if (weights_.at(i).at(j).is_zero())
      return series_type();
    return weights_[i][j] * inv(degrees_.at(i), order);
  }
  series_type normalized_weight(std::size_t i, std::size_t j) const {
    return normalized_weight(i, j, order_);
  }
  series_type normalized_weight(const std::string &x, const std::string &y) const {
    return normalized_weight(index(x), index(y));
  }

  bool is_connected() const {
    const std::size_t n = size();
    if (n == 0)
      return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y)
        if (!seen[y] && adjacent(x, y)) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n;
  }

  bool is_complete() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (!adjacent(i, j))
          return false;
    return true;
  }

  /// Two-colouring by breadth-first search; nullopt when an odd cycle exists.
  std::optional<Partition> bipartition() const {
    const std::size_t n = size();
    std::vector<int> colour(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
      if (colour[start] != -1)
        continue;
      colour[start] = 0;
      std::queue<std::size_t> queue;
      queue.push(start);
      while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop();
        for (std::size_t y = 0; y < n; ++y) {
          if (!adjacent(x, y))
            continue;
          if (colour[y] == -1) {
            colour[y] = 1 - colour[x];
            queue.push(y);
          } else if (colour[y] == colour[x]) {
            return std::nullopt;
          }
        }
      }
    }
    Partition p;
    for (std::size_t i = 0; i < n; ++i)
      (colour[i] == 0 ? p.first : p.second).push_back(i);
    return p;
  }
  bool is_bipartite() const { return bipartition().has_value(); }

  /// Spectral routines assume a connected graph with 2 <= #V <= kMaxSpectralVertices.
  void require_spectral() const {
    if (size() < 2)
      throw GraphError("spectral operations need at least two vertices");
    if (size() > kMaxSpectralVertices)
      throw GraphError("graph has " + std::to_string(size()) + " vertices; the limit is " +
                       std::to_string(kMaxSpectralVertices));
    if (!is_connected())
      throw GraphError("graph is not connected");
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (adjacent(i, j))
          out.push_back({names_[i], names_[j], weights_[i][j]});
    return out;
  }

private:
  void intern(const std::string &name) {
    if (index_.emplace(name, names_.size()).second)
      names_.push_back(name);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<series_type>> weights_;
  std::vector<series_type> degrees_;
  Exponent order_ = kDefaultOrder;
};

/// Element of the function space on a graph's vertices, stored in the graph's vertex order.
template <CoefficientField F>
class VertexFunction {
public:
  using series_type = Series<F>;

  VertexFunction() = default;
  explicit VertexFunction(std::vector<series_type> values) : values_(std::move(values)) {}

  static VertexFunction constant(std::size_t n, const series_type &c) {
    return VertexFunction(std::vector<series_type>(n, c));
  }
  static VertexFunction zero(std::size_t n) { return constant(n, series_type()); }
  static VertexFunction delta(std::size_t n, std::size_t at) {
    VertexFunction f = zero(n);
    f.values_.at(at) = series_type(1);
    return f;
  }

  std::size_t size() const noexcept { return values_.size(); }
  const series_type &operator[](std::size_t i) const { return values_[i]; }
  series_type &operator[](std::size_t i) { return values_[i]; }
  const std::vector<series_type> &values() const noexcept { return values_; }

  bool is_zero() const {
    for (const auto &v : values_)
      if (!v.is_zero())
        return false;
    return true;
  }

  VertexFunction &operator+=(const VertexFunction &o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i)
      values_[i] += o.values_[i];
    return *this;
  }
  VertexFunction &operator-=(const VertexFunction &o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i)
      values_[i] -= o.values_[i];
    return *this;
  }
  friend VertexFunction operator+(VertexFunction a, const VertexFunction &b) { return a += b; }
  friend VertexFunction operator-(VertexFunction a, const VertexFunction &b) { return a -= b; }
  friend VertexFunction operator*(const series_type &c, VertexFunction f) {
    for (auto &v : f.values_)
      v = c * v;
    return f;
  }

  friend bool operator==(const VertexFunction &, const VertexFunction &) = default;

private:
  void check_same_size(const VertexFunction &o) const {
    if (o.size() != size())
      throw DimensionError("vertex functions live on different vertex sets");
  }

  std::vector<series_type> values_;
};

namespace detail {

inline std::string strip_comment(const std::string &line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

// Splits "a b rest of line" into two whitespace-delimited ids and the remainder.
inline bool split_two_ids(const std::string &line, std::string &a, std::string &b,
                          std::string &rest) {
  std::istringstream is(line);
  if (!(is >> a >> b))
    return false;
  std::getline(is, rest);
  return true;
}

inline bool split_one_id(const std::string &line, std::string &a, std::string &rest) {
  std::istringstream is(line);
  if (!(is >> a))
    return false;
  std::getline(is, rest);
  return true;
}

inline bool blank(const std::string &s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

template <class F>
Series<F> parse_on_line(const std::string &text, std::size_t line) {
  try {
    return parse_series<F>(text);
  } catch (const ParseError &e) {
    throw GraphError(std::string("bad series literal: ") + e.what(), line);
  }
}

} // namespace detail

/// Reads the graph file format: "vertex vertex series" per line, '#' starts a comment.
template <CoefficientField F>
OFGraph<F> read_graph(std::istream &in, Exponent order = kDefaultOrder) {
  std::vector<typename OFGraph<F>::Edge> edges;
  std::vector<std::size_t> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line))
      continue;
    std::string u, v, rest;
    if (!detail::split_two_ids(line, u, v, rest) || detail::blank(rest))
      throw GraphError("expected 'vertex vertex weight'", lineno);
    edges.push_back({u, v, detail::parse_on_line<F>(rest, lineno)});
    lines.push_back(lineno);
  }
  if (edges.empty())
    throw GraphError("graph has no edges");
  return OFGraph<F>::from_edges(edges, std::move(order), lines);
}

template <CoefficientField F>
OFGraph<F> parse_graph(const std::string &text, Exponent order = kDefaultOrder) {
  std::istringstream is(text);
  return read_graph<F>(is, std::move(order));
}

template <CoefficientField F>
OFGraph<F> load_graph(const std::string &path, Exponent order = kDefaultOrder) {
  std::ifstream in(path);
  if (!in)
    throw GraphError("cannot open graph file '" + path + "'");
  return read_graph<F>(in, std::move(order));
}

template <CoefficientField F>
std::string to_string(const OFGraph<F> &g, int digits = 0) {
  std::ostringstream os;
  for (const auto &e : g.edges())
    os << e.u << ' ' << e.v << ' ' << to_string(e.weight, digits) << '\n';
  return os.str();
}

/// Reads a vertex function: "vertex series" per line, covering every vertex exactly once.
template <CoefficientField F>
VertexFunction<F> read_function(std::istream &in, const OFGraph<F> &g) {
  std::vector<std::optional<Series<F>>> values(g.size());
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line))
      continue;
    std::string x, rest;
    if (!detail::split_one_id(line, x, rest) || detail::blank(rest))
      throw GraphError("expected 'vertex value'", lineno);
    std::size_t i;
    try {
      i = g.index(x);
    } catch (const GraphError &) {
      throw GraphError("unknown vertex '" + x + "'", lineno);
    }
    if (values[i])
      throw GraphError("vertex '" + x + "' assigned twice", lineno);
    values[i] = detail::parse_on_line<F>(rest, lineno);
  }
  std::vector<Series<F>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!values[i])
      throw GraphError("no value for vertex '" + g.name(i) + "'");
    out.push_back(*values[i]);
  }
  return VertexFunction<F>(std::move(out));
}

template <CoefficientField F>
VertexFunction<F> load_function(const std::string &path, const OFGraph<F> &g) {
  std::ifstream in(path);
  if (!in)
    throw GraphError("cannot open function file '" + path + "'");
  return read_function(in, g);
}

template <class To, class From>
OFGraph<To> convert(const OFGraph<From> &g) {
  if constexpr (std::is_same_v<To, From>) {
    return g;
  } else {
    std::vector<typename OFGraph<To>::Edge> edges;
    for (const auto &e : g.edges())
      edges.push_back({e.u, e.v, convert<To>(e.weight)});
    return OFGraph<To>::from_edges(edges, g.order(), {}, g.vertices());
  }
}

template <class To, class From>
VertexFunction<To> convert(const VertexFunction<From> &f) {
  std::vector<Series<To>> values;
  for (const auto &v : f.values())
    values.push_back(convert<To>(v));
  return VertexFunction<To>(std::move(values));
}

} // namespace lcg

#endif // LCG_GRAPH_HPP
