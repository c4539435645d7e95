#ifndef LCG_SERIES_HPP
#define LCG_SERIES_HPP

// Truncated Levi-Civita numbers.
//
// A Series is a finite list of terms c * eps^q, strictly ascending in q with nonzero c, together
// with a truncation order T: the represented element is known modulo O(eps^T). Exact elements
// have T = +infinity. Every operation returns a canonical Series and propagates T with big-O
// bookkeeping, so no reported term is finer than what the inputs justify.
//
// The order on the field is lexicographic on the leading term: a > 0 iff its first coefficient is
// positive. A Series whose term list is empty is "zero at working precision".

#include <algorithm>
#include <utility>
#include <vector>

#include "exponent.hpp"
#include "field.hpp"

namespace lcg {

template <CoefficientField F>
class Series {
public:
  using field_type = F;
  using coeff_type = typename F::value_type;

  struct Term {
    Exponent exp;
    coeff_type coeff;

    friend bool operator==(const Term &a, const Term &b) {
      return a.exp == b.exp && F::equal(a.coeff, b.coeff);
    }
  };

  Series() = default;
  Series(long c) { // NOLINT(google-explicit-constructor)
    if (c != 0)
      terms_.push_back({Exponent(0), F::from_int(c)});
  }

  static Series constant(const coeff_type &c) { return monomial(c, Exponent(0)); }
  static Series monomial(const coeff_type &c, const Exponent &e) {
    Series s;
    if (!F::is_zero(c))
      s.terms_.push_back({e, c});
    return s;
  }
  static Series rational(long num, long den = 1) {
    return constant(F::from_rational(BigRational(num, den)));
  }
  static Series eps(const Exponent &e = Exponent(1)) { return monomial(F::from_int(1), e); }
  /// Zero known only modulo O(eps^order).
  static Series big_o(const Order &order) {
    Series s;
    s.trunc_ = order;
    return s;
  }
  static Series from_terms(std::vector<Term> terms, Order trunc = Order::infinity()) {
    Series s;
    s.terms_ = std::move(terms);
    s.trunc_ = std::move(trunc);
    s.canonicalize(false);
    return s;
  }

  const std::vector<Term> &terms() const noexcept { return terms_; }
  const Order &trunc() const noexcept { return trunc_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_exact() const noexcept { return trunc_.is_infinite(); }

  /// Leading exponent, +infinity for zero.
  Order valuation() const { return terms_.empty() ? Order::infinity() : Order(terms_.front().exp); }
  /// Lower bound on the valuation of the true element: leading exponent, or trunc when no term is
  /// known.
  Order valuation_bound() const { return terms_.empty() ? trunc_ : Order(terms_.front().exp); }
  /// Leading exponent of a residual: leading exponent, or trunc when nothing survives.
  Order residual_exponent() const { return valuation_bound(); }

  const Exponent &lead_exp() const {
    require_nonzero();
    return terms_.front().exp;
  }
  const coeff_type &lead_coeff() const {
    require_nonzero();
    return terms_.front().coeff;
  }

  int sign() const { return terms_.empty() ? 0 : F::sign(terms_.front().coeff); }

  /// Coefficient of eps^e, zero when absent.
  coeff_type coeff(const Exponent &e) const {
    for (const auto &t : terms_)
      if (t.exp == e)
        return t.coeff;
    return F::from_int(0);
  }

  Series truncated(const Order &order) const {
    if (!(order < trunc_))
      return *this;
    Series s;
    s.trunc_ = order;
    for (const auto &t : terms_) {
      if (!(t.exp < order))
        break;
      s.terms_.push_back(t);
    }
    return s;
  }

  /// The same known terms, declared exact.
  Series exact_part() const {
    Series s = *this;
    s.trunc_ = Order::infinity();
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto &t : s.terms_)
      t.coeff = -t.coeff;
    return s;
  }

  Series &operator+=(const Series &o) { return *this = add(*this, o, false); }
  Series &operator-=(const Series &o) { return *this = add(*this, o, true); }
  Series &operator*=(const Series &o) { return *this = mul(*this, o); }

  friend Series operator+(const Series &a, const Series &b) { return add(a, b, false); }
  friend Series operator-(const Series &a, const Series &b) { return add(a, b, true); }
  friend Series operator*(const Series &a, const Series &b) { return mul(a, b); }

  Series scaled(const coeff_type &c) const {
    if (F::is_zero(c))
      return Series();
    Series s = *this;
    for (auto &t : s.terms_)
      t.coeff *= c;
    s.canonicalize(true);
    return s;
  }

  /// Multiplication by eps^e.
  Series shifted(const Exponent &e) const {
    Series s = *this;
    for (auto &t : s.terms_)
      t.exp += e;
    if (s.trunc_.is_finite())
      s.trunc_ = Order(s.trunc_.exponent() + e);
    return s;
  }

  /// Structural identity: same terms and same truncation order.
  friend bool operator==(const Series &a, const Series &b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

private:
  void require_nonzero() const {
    if (terms_.empty())
      throw DomainError("leading term of a series that is zero at working precision");
  }

  // sorted: terms already ascending with unique exponents
  void canonicalize(bool sorted) {
    if (!sorted) {
      std::stable_sort(terms_.begin(), terms_.end(),
                       [](const Term &a, const Term &b) { return a.exp < b.exp; });
      std::vector<Term> merged;
      merged.reserve(terms_.size());
      coeff_type scale = 0;
      auto close = [&] {
        if (!merged.empty() && F::cancels(merged.back().coeff, scale))
          merged.back().coeff = 0;
      };
      for (auto &t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp) {
          if constexpr (!F::exact)
            scale = std::max(scale, coeff_type(mp::abs(t.coeff)));
          merged.back().coeff += t.coeff;
        } else {
          close();
          if constexpr (!F::exact)
            scale = mp::abs(t.coeff);
          merged.push_back(std::move(t));
        }
      }
      close();
      terms_ = std::move(merged);
    }
    std::erase_if(terms_, [&](const Term &t) { return F::is_zero(t.coeff) || !(t.exp < trunc_); });
  }

  static Series add(const Series &a, const Series &b, bool negate_b) {
    Series s;
    s.trunc_ = min_order(a.trunc_, b.trunc_);
    s.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    auto push_b = [&](const Term &t) {
      s.terms_.push_back(t);
      if (negate_b)
        s.terms_.back().coeff = -s.terms_.back().coeff;
    };
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exp < ib->exp)) {
        s.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->exp < ia->exp) {
        push_b(*ib++);
      } else {
        coeff_type c = negate_b ? coeff_type(ia->coeff - ib->coeff) : coeff_type(ia->coeff + ib->coeff);
        if constexpr (!F::exact) {
          if (F::cancels(c, std::max(coeff_type(mp::abs(ia->coeff)), coeff_type(mp::abs(ib->coeff)))))
            c = 0;
        }
        s.terms_.push_back({ia->exp, std::move(c)});
        ++ia;
        ++ib;
      }
    }
    s.canonicalize(true);
    return s;
  }

  static Series mul(const Series &a, const Series &b) {
    Series s;
    s.trunc_ = min_order(a.trunc_ + b.valuation_bound(), b.trunc_ + a.valuation_bound());
    if (a.terms_.empty() || b.terms_.empty())
      return s;
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &ta : a.terms_) {
      for (const auto &tb : b.terms_) {
        Exponent e = ta.exp + tb.exp;
        if (!(e < s.trunc_))
          break;
        raw.push_back({std::move(e), ta.coeff * tb.coeff});
      }
    }
    s.terms_ = std::move(raw);
    if (a.terms_.size() == 1 || b.terms_.size() == 1)
      s.canonicalize(true);
    else
      s.canonicalize(false);
    return s;
  }

  std::vector<Term> terms_;
  Order trunc_;
};

template <class F>
Series<F> pow(Series<F> base, unsigned long n) {
  Series<F> result(1);
  while (n) {
    if (n & 1U)
      result *= base;
    n >>= 1U;
    if (n)
      base *= base;
  }
  return result;
}

namespace detail {

// Splits nonzero a as c * eps^q * (1 + u) with u of positive valuation. u is truncated at the
// relative order `rel`.
template <class F>
Series<F> unit_part(const Series<F> &a, const Order &rel) {
  const auto &c = a.lead_coeff();
  const Exponent q = a.lead_exp();
  typename F::value_type inv_c = typename F::value_type(1) / c;
  std::vector<typename Series<F>::Term> rest;
  for (std::size_t i = 1; i < a.terms().size(); ++i)
    rest.push_back({a.terms()[i].exp - q, a.terms()[i].coeff * inv_c});
  if (rest.empty() && a.is_exact())
    return Series<F>();
  return Series<F>::from_terms(std::move(rest), a.trunc() - q).truncated(rel);
}

// sum_i coeff(i) * u^i truncated at rel; coeff(i) is a rational generator.
template <class F, class CoeffGen>
Series<F> power_series_in(const Series<F> &u, const Order &rel, CoeffGen coeff) {
  Series<F> sum(1);
  if (u.is_zero() && u.is_exact())
    return sum;
  Series<F> power(1);
  for (unsigned long i = 1;; ++i) {
    power = (power * u).truncated(rel);
    if (power.is_zero())
      break;
    BigRational k = coeff(i);
    if (k != 0)
      sum += power.scaled(F::from_rational(k));
  }
  return sum.truncated(rel);
}

inline Order relative_order(const Order &known, const Exponent &requested) {
  return min_order(known, Order(requested));
}

} // namespace detail

/// Multiplicative inverse. `order` bounds the relative precision of non-terminating results:
/// inv(c eps^q (1+u)) is known to O(eps^(-q + order)).
template <class F>
Series<F> inv(const Series<F> &a, const Exponent &order) {
  if (a.is_zero())
    throw DivisionByZero();
  const Exponent q = a.lead_exp();
  const Order rel = detail::relative_order(a.trunc() - q, order);
  Series<F> u = detail::unit_part(a, rel);
  Series<F> s = detail::power_series_in(u, rel, [](unsigned long i) {
    return BigRational(i % 2 ? -1 : 1);
  });
  return s.scaled(typename F::value_type(1) / a.lead_coeff()).shifted(-q);
}

template <class F>
Series<F> div(const Series<F> &a, const Series<F> &b, const Exponent &order) {
  return a * inv(b, order);
}

/// Positive square root via the binomial series. Requires a > 0.
template <class F>
Series<F> sqrt(const Series<F> &a, const Exponent &order) {
  if (a.sign() <= 0)
    throw DomainError("square root requires a positive argument");
  const Exponent q = a.lead_exp();
  const Order rel = detail::relative_order(a.trunc() - q, order);
  auto root_c = F::sqrt(a.lead_coeff());
  Series<F> u = detail::unit_part(a, rel);
  BigRational binom(1);
  Series<F> s = detail::power_series_in(u, rel, [&binom](unsigned long i) {
    binom *= BigRational(1, 2) - BigRational(static_cast<long>(i) - 1);
    binom /= static_cast<long>(i);
    return binom;
  });
  return s.scaled(root_c).shifted(q / Exponent(2));
}

template <class F>
Series<F> abs(const Series<F> &a) {
  return a.sign() < 0 ? -a : a;
}

/// Term-wise absolute values. Sums of these bound, exponent by exponent, the magnitudes that
/// went into a sum, which is the scale its rounding noise is judged against.
template <class F>
Series<F> magnitudes(const Series<F> &a) {
  std::vector<typename Series<F>::Term> t;
  for (const auto &term : a.terms())
    t.push_back({term.exp, mp::abs(term.coeff)});
  return Series<F>::from_terms(std::move(t), a.trunc());
}

/// d vanishes up to rounding relative to the term-wise `scale` (exactly, in rational mode).
template <class F>
bool negligible(const Series<F> &d, const Series<F> &scale) {
  for (const auto &term : d.terms())
    if (!F::cancels(term.coeff, mp::abs(scale.coeff(term.exp))))
      return false;
  return true;
}

/// Sign of a - b in the field order.
template <class F>
int compare(const Series<F> &a, const Series<F> &b) {
  return (a - b).sign();
}

template <class F>
bool less(const Series<F> &a, const Series<F> &b) {
  return compare(a, b) < 0;
}
template <class F>
bool less_equal(const Series<F> &a, const Series<F> &b) {
  return compare(a, b) <= 0;
}

/// Equal at working precision: the difference has no known term.
template <class F>
bool same_value(const Series<F> &a, const Series<F> &b) {
  return (a - b).is_zero();
}

/// a and d share leading exponent and leading coefficient; zero is comparable only to itself.
template <class F>
bool comparable(const Series<F> &a, const Series<F> &d) {
  if (a.is_zero() || d.is_zero())
    return a.is_zero() && d.is_zero();
  return a.lead_exp() == d.lead_exp() && F::equal(a.lead_coeff(), d.lead_coeff());
}

template <class To, class From>
Series<To> convert(const Series<From> &a) {
  if constexpr (std::is_same_v<To, From>) {
    return a;
  } else {
    std::vector<typename Series<To>::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto &t : a.terms())
      terms.push_back({t.exp, convert_coeff<To, From>(t.coeff)});
    return Series<To>::from_terms(std::move(terms), a.trunc());
  }
}

using RationalSeries = Series<Rational>;
using RealSeries = Series<Real>;

} // namespace lcg

#endif // LCG_SERIES_HPP
