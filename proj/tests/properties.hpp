#ifndef LCG_TESTS_PROPERTIES_HPP
#define LCG_TESTS_PROPERTIES_HPP

// Randomized field, order, inverse, square-root and comparability checks on truncated series.

#include <functional>
#include <string>

#include "support.hpp"

namespace lcg::testing {

struct PropertyTally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok && failures++ == 0)
      first_failure = what;
  }
};

// Same leading exponent as d, perturbed only above it.
template <class F, class Rng>
Series<F> comparable_partner(Rng &rng, const Series<F> &d) {
  Series<F> a = Series<F>::monomial(d.lead_coeff(), d.lead_exp());
  std::uniform_int_distribution<int> step(1, 6);
  for (int k = 0; k < 3; ++k)
    a += Series<F>::monomial(F::from_rational(random_rational(rng)), d.lead_exp() + Exponent(step(rng), 2));
  return a;
}

/// Runs rounds of checks until at least `count` have been made.
template <class Rng>
PropertyTally field_properties(Rng &rng, long count) {
  using Q = Series<Rational>;
  using R = Series<Real>;
  const Exponent order(6);
  const Q one(1), eps = Q::eps();
  PropertyTally t;
  auto show = [](const Q &a) { return to_string(a); };

  while (t.checks < count) {
    Q a = random_series<Rational>(rng), b = random_series<Rational>(rng), c = random_series<Rational>(rng);
    const std::string abc = show(a) + " | " + show(b) + " | " + show(c);

    t.expect(same_value(a + b, b + a), "a + b = b + a: " + abc);
    t.expect(same_value(a * b, b * a), "ab = ba: " + abc);
    t.expect(same_value((a + b) + c, a + (b + c)), "(a + b) + c: " + abc);
    t.expect(same_value((a * b) * c, a * (b * c)), "(ab)c: " + abc);
    t.expect(same_value(a * (b + c), a * b + a * c), "a(b + c): " + abc);
    t.expect((a + (-a)).is_zero(), "a - a: " + abc);
    t.expect(same_value(a * one, a) && same_value(a + Q(), a), "identities: " + abc);
    t.expect(same_value(a * inv(a, order), one), "a inv(a) = 1: " + abc);
    t.expect(same_value(div(a * b, b, order), a), "(ab)/b = a: " + abc);

    // Order: trichotomy and closure of the positive cone.
    const int s = a.sign();
    t.expect((s > 0) + (s == 0) + ((-a).sign() > 0) == 1, "trichotomy: " + abc);
    Q pa = abs(a), pb = abs(b);
    t.expect((pa + pb).sign() > 0 && (pa * pb).sign() > 0, "positive cone: " + abc);
    t.expect(compare(a, b) == -compare(b, a), "antisymmetry: " + abc);
    if (less(a, b) && less(b, c))
      t.expect(less(a, c), "transitivity: " + abc);
    t.expect(compare(a + c, b + c) == compare(a, b), "translation: " + abc);
    t.expect(less(eps * pa, pa), "eps |a| < |a|: " + abc);

    // Square roots: exact on squares, residual-free numerically.
    Q sq = pa * pa;
    Q root = sqrt(sq, order);
    t.expect(same_value(root * root, sq) && root.sign() > 0, "sqrt(a^2)^2 = a^2: " + abc);
    {
      R x = abs(convert<Real>(b));
      R r = sqrt(x, order);
      t.expect(same_value(r * r, x) && r.sign() > 0, "numeric sqrt residual: " + abc);
    }

    // Consequences of comparability.
    Q a2 = comparable_partner(rng, a), b2 = comparable_partner(rng, b);
    t.expect(comparable(a, a2) && comparable(a2, a), "comparable partner: " + abc);
    t.expect(less(eps * abs(a), abs(a2)), "|a'| > eps |a|: " + abc);
    t.expect(comparable(a * b, a2 * b2), "products of comparable pairs: " + abc);
    t.expect(!comparable(a, a.scaled(BigRational(2))), "2a not comparable to a: " + abc);
  }
  return t;
}

} // namespace lcg::testing

#endif // LCG_TESTS_PROPERTIES_HPP
