#ifndef LCG_EXPONENT_HPP
#define LCG_EXPONENT_HPP

#include <compare>
#include <ostream>
#include <string>

#include "field.hpp"

namespace lcg {

/// Exact rational exponent of eps. Always stored in lowest terms with a positive denominator.
class Exponent {
public:
  Exponent() = default;
  Exponent(long v) : value_(v) {} // NOLINT(google-explicit-constructor)
  Exponent(long num, long den) {
    if (den == 0)
      throw DivisionByZero();
    value_ = BigRational(BigInt(num), BigInt(den)); // the (long, long) overload mishandles den < 0
  }
  explicit Exponent(BigRational v) : value_(std::move(v)) {}

  const BigRational &value() const noexcept { return value_; }
  BigInt numerator() const { return mp::numerator(value_); }
  BigInt denominator() const { return mp::denominator(value_); }
  bool is_integer() const { return mp::denominator(value_) == 1; }

  Exponent operator-() const { return Exponent(BigRational(-value_)); }
  Exponent &operator+=(const Exponent &o) {
    value_ += o.value_;
    return *this;
  }
  Exponent &operator-=(const Exponent &o) {
    value_ -= o.value_;
    return *this;
  }
  friend Exponent operator+(Exponent a, const Exponent &b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent &b) { return a -= b; }
  friend Exponent operator*(const Exponent &a, const Exponent &b) {
    return Exponent(BigRational(a.value_ * b.value_));
  }
  friend Exponent operator/(const Exponent &a, const Exponent &b) {
    if (b.value_ == 0)
      throw DivisionByZero();
    return Exponent(BigRational(a.value_ / b.value_));
  }

  friend bool operator==(const Exponent &a, const Exponent &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Exponent &a, const Exponent &b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const { return value_.str(); }
  friend std::ostream &operator<<(std::ostream &os, const Exponent &e) { return os << e.str(); }

private:
  BigRational value_;
};

/// Truncation order: an Exponent or +infinity. A value with order T is known modulo O(eps^T).
class Order {
public:
  Order() = default; // +infinity
  Order(const Exponent &e) : finite_(true), exp_(e) {} // NOLINT(google-explicit-constructor)
  Order(long v) : finite_(true), exp_(v) {}            // NOLINT(google-explicit-constructor)

  static Order infinity() { return Order(); }

  bool is_infinite() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }
  const Exponent &exponent() const {
    if (!finite_)
      throw DomainError("infinite order has no exponent");
    return exp_;
  }

  friend Order operator+(const Order &a, const Order &b) {
    if (a.is_infinite() || b.is_infinite())
      return infinity();
    return Order(a.exp_ + b.exp_);
  }
  friend Order operator-(const Order &a, const Exponent &b) {
    if (a.is_infinite())
      return infinity();
    return Order(a.exp_ - b);
  }

  friend bool operator==(const Order &a, const Order &b) {
    if (a.finite_ != b.finite_)
      return false;
    return !a.finite_ || a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Order &a, const Order &b) {
    if (a.is_infinite())
      return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite())
      return std::strong_ordering::less;
    return a.exp_ <=> b.exp_;
  }
  friend bool operator==(const Order &a, const Exponent &b) { return a == Order(b); }
  friend std::strong_ordering operator<=>(const Order &a, const Exponent &b) {
    return a <=> Order(b);
  }

  std::string str() const { return finite_ ? exp_.str() : std::string("inf"); }
  friend std::ostream &operator<<(std::ostream &os, const Order &o) { return os << o.str(); }

private:
  bool finite_ = false;
  Exponent exp_;
};

inline Order min_order(const Order &a, const Order &b) { return b < a ? b : a; }

} // namespace lcg

#endif // LCG_EXPONENT_HPP
