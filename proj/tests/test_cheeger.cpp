#include <gtest/gtest.h>

#include "support.hpp"

namespace lcg {
namespace {

using testing::fixture;
using Q = Series<Rational>;

Q q(const char *text) { return parse_series<Rational>(text); }

// Minimum over every nonempty proper subset, both sides enumerated, no symmetry reduction.
template <class F>
Series<F> brute_force_h(const OFGraph<F> &g) {
  const std::size_t n = g.size();
  std::optional<Series<F>> best;
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
    Series<F> in, out, cut;
    for (std::size_t x = 0; x < n; ++x) {
      (mask >> x & 1U ? in : out) += g.vertex_weight(x);
      for (std::size_t y = 0; y < n; ++y)
        if ((mask >> x & 1U) && !(mask >> y & 1U))
          cut += g.weight(x, y);
    }
    Series<F> h = cut * inv(less(in, out) ? in : out, g.order());
    if (!best || less(h, *best))
      best = h;
  }
  return *best;
}

TEST(Cheeger, Fig1) {
  auto g = fixture<Rational>("fig1.ofg");
  auto c = cheeger_constant(g);
  // D/(D + 2 R eps) with R = D = 1.
  EXPECT_TRUE(same_value(c.h, inv(q("1 + 2*eps"), Exponent(8))));
  EXPECT_EQ(c.subset, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(c.boundary, Q(1));
}

TEST(Cheeger, Fig2) {
  auto g = fixture<Rational>("fig2.ofg");
  auto c = cheeger_constant(g);
  // R eps / (2D + R eps).
  EXPECT_TRUE(same_value(c.h, q("eps") * inv(q("2 + eps"), Exponent(8))));
  EXPECT_EQ(to_string(c.h.truncated(Order(3))), "1/2*eps - 1/4*eps^2 + O(eps^3)");
}

TEST(Cheeger, K2AndTriangle) {
  EXPECT_EQ(cheeger_constant(fixture<Rational>("k2.ofg")).h, Q(1));
  EXPECT_EQ(cheeger_constant(fixture<Rational>("triangle.ofg")).h, Q(1));
}

TEST(Cheeger, TiesGoToSmallestSubset) {
  auto c = cheeger_constant(parse_graph<Rational>("1 2 1\n2 3 1\n3 4 1\n4 1 1\n"));
  EXPECT_EQ(c.subset, (std::vector<std::size_t>{1, 2}));
}

TEST(Cheeger, RejectsDisconnected) {
  EXPECT_THROW(cheeger_constant(parse_graph<Rational>("1 2 1\n3 4 1\n")), GraphError);
}

TEST(Cheeger, MatchesBruteForce) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 60; ++t) {
    RandomGraphSpec spec;
    spec.max_vertices = 7;
    auto g = random_graph<Rational>(rng, spec);
    auto c = cheeger_constant(g);
    EXPECT_TRUE(same_value(c.h, brute_force_h(g))) << to_string(g);
    EXPECT_LE(compare(c.h, Q(1)), 0);
    EXPECT_TRUE(same_value(c.h, c.h_one_sided));
    EXPECT_FALSE(c.subset.empty());
    EXPECT_LT(c.subset.size(), g.size());
  }
}

TEST(Cheeger, InequalitiesOnFixtures) {
  numeric::ScopedPrecision p(256);
  for (const char *name : {"fig1.ofg", "fig2.ofg", "k2.ofg", "triangle.ofg"}) {
    auto g = fixture<Real>(name);
    auto s = compute_spectrum(g);
    auto rep = cheeger_inequality_check(g, s, cheeger_constant(g));
    EXPECT_TRUE(rep.passed()) << name << "\n" << rep;
  }
}

TEST(Cheeger, Fig1AlphaBelowRoot) {
  numeric::ScopedPrecision p(256);
  auto g = fixture<Real>("fig1.ofg");
  auto s = compute_spectrum(g);
  auto c = cheeger_constant(g);
  const auto root = sqrt(Series<Real>(1) - c.h * c.h, Exponent(8));
  EXPECT_EQ(root.lead_exp(), Exponent(1, 2));
  EXPECT_LE(compare(s.pairs[1].alpha, root), 0);
}

TEST(Cheeger, InequalitiesOnRandomGraphs) {
  numeric::ScopedPrecision p(256);
  std::mt19937_64 rng(52);
  for (int t = 0; t < 12; ++t) {
    auto g = random_graph<Real>(rng, {}, Exponent(4));
    auto s = compute_spectrum(g);
    auto rep = cheeger_inequality_check(g, s, cheeger_constant(g));
    EXPECT_TRUE(rep.passed()) << to_string(g) << rep;
    const auto &top = s.pairs.back().alpha;
    EXPECT_LT(top.sign(), 0);
    EXPECT_GE(compare(-top, Series<Real>::rational(1, static_cast<long>(g.size() - 1))), 0);
  }
}

} // namespace
} // namespace lcg
