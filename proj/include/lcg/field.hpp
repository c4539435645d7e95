#ifndef LCG_FIELD_HPP
#define LCG_FIELD_HPP

// Coefficient fields for Levi-Civita series.
//
// A coefficient mode is a type, not a runtime tag: Series<Rational> and Series<Real> are distinct
// types, so combining modes inside one computation does not compile. Crossing modes is explicit
// through convert<To>().
//
//   Rational  exact arbitrary-precision rationals (GMP).
//   Real      arbitrary-precision binary floats (MPFR) at a process-wide precision. Values with
//             magnitude below the zero threshold tau are treated as exact zero, so sign() and
//             equality are only decided up to tau.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace lcg {

namespace mp = boost::multiprecision;

using BigInt = mp::mpz_int;
using BigRational = mp::mpq_rational;
using BigFloat = mp::mpfr_float;

namespace numeric {

struct State {
  unsigned bits = 256;
  unsigned tau_bits = 128;
  BigFloat tau;
  unsigned noise_bits = 192;
  unsigned outer_tau_bits = 0; // tau_bits outside an active GuardPrecision, 0 when unguarded
  BigFloat noise; // relative rounding floor, 2^-(3 bits / 4) unless set explicitly
};

inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

inline State &state() {
  static State s = [] {
    State init;
    BigFloat::default_precision(digits10_for_bits(init.bits));
    init.tau = BigFloat(1) / mp::pow(BigFloat(2), init.tau_bits);
    init.noise = BigFloat(1) / mp::pow(BigFloat(2), init.noise_bits);
    return init;
  }();
  return s;
}

// Sets the default MPFR precision before any Real value can be created.
inline const bool state_initialized = (state(), true);

inline unsigned precision_bits() { return state().bits; }
inline const BigFloat &tau() { return state().tau; }
inline const BigFloat &noise() { return state().noise; }

/// The zero threshold the caller works with, also inside a GuardPrecision that tightened it.
inline BigFloat outer_tau() {
  const unsigned b = state().outer_tau_bits ? state().outer_tau_bits : state().tau_bits;
  return mp::ldexp(BigFloat(1), -static_cast<int>(b));
}

/// Sets the working precision of every Real value created afterwards. The zero threshold
/// becomes 2^-(bits/2) and the relative noise floor 2^-(3 bits/4) unless given explicitly.
inline void set_precision(unsigned bits, unsigned tau_bits = 0, unsigned noise_bits = 0) {
  if (bits < 64)
    throw DomainError("numeric precision must be at least 64 bits");
  State &s = state();
  s.bits = bits;
  s.tau_bits = tau_bits ? tau_bits : bits / 2;
  BigFloat::default_precision(digits10_for_bits(bits));
  s.tau = BigFloat(1) / mp::pow(BigFloat(2), s.tau_bits);
  s.noise_bits = noise_bits ? noise_bits : 3 * bits / 4;
  s.noise = BigFloat(1) / mp::pow(BigFloat(2), s.noise_bits);
}

class ScopedPrecision {
public:
  explicit ScopedPrecision(unsigned bits, unsigned tau_bits = 0, unsigned noise_bits = 0)
      : saved_bits_(state().bits), saved_tau_bits_(state().tau_bits),
        saved_noise_bits_(state().noise_bits) {
    set_precision(bits, tau_bits, noise_bits);
  }
  ~ScopedPrecision() { set_precision(saved_bits_, saved_tau_bits_, saved_noise_bits_); }
  ScopedPrecision(const ScopedPrecision &) = delete;
  ScopedPrecision &operator=(const ScopedPrecision &) = delete;

private:
  unsigned saved_bits_;
  unsigned saved_tau_bits_;
  unsigned saved_noise_bits_;
};

/// Raises the working precision by a fixed factor for cancellation-heavy pipelines (root lifting,
/// elimination). Puiseux coefficients grow geometrically with the exponent, so rounding noise
/// relative to them must stay far below tau. The relative noise floor is kept: inputs are only
/// known to the user precision, so cancellation is still decided at that level. Threshold::Keep
/// also keeps tau; Threshold::Tighten drops it to 2^-(2 bits), so that Newton corrections
/// smaller than tau are still applied, and results should be re-canonicalized once the guard is
/// gone. Threshold::Verify raises the noise floor to tau, so identities between computed values
/// are judged with the tolerance of their last digits. Nested guards are no-ops.
enum class Threshold { Keep, Tighten, Verify };

class GuardPrecision {
public:
  static constexpr unsigned kFactor = 4;
  explicit GuardPrecision(Threshold t = Threshold::Keep) {
    if (active())
      return;
    const unsigned bits = state().bits;
    const unsigned tau_bits = state().tau_bits;
    state().outer_tau_bits = tau_bits;
    switch (t) {
    case Threshold::Keep:
      scope_.emplace(bits * kFactor, tau_bits, state().noise_bits);
      break;
    case Threshold::Tighten:
      scope_.emplace(bits * kFactor, 2 * bits, state().noise_bits);
      break;
    case Threshold::Verify:
      scope_.emplace(bits * kFactor, tau_bits, tau_bits);
      break;
    }
    active() = true;
  }
  ~GuardPrecision() {
    if (scope_) {
      scope_.reset();
      state().outer_tau_bits = 0;
      active() = false;
    }
  }
  GuardPrecision(const GuardPrecision &) = delete;
  GuardPrecision &operator=(const GuardPrecision &) = delete;

private:
  static bool &active() {
    static bool on = false;
    return on;
  }
  std::optional<ScopedPrecision> scope_;
};

} // namespace numeric

namespace detail {

inline bool is_perfect_square(const BigInt &v, BigInt &root) {
  if (v < 0)
    return false;
  root = mp::sqrt(v);
  return root * root == v;
}

// Accepts [-]digits[.digits][(e|E)[+-]digits]; the caller has already checked the shape.
inline bool looks_decimal(std::string_view s) {
  return s.find_first_of(".eE") != std::string_view::npos;
}

} // namespace detail

struct Rational {
  using value_type = BigRational;
  static constexpr const char *name = "rational";
  static constexpr bool exact = true;

  static bool is_zero(const value_type &v) { return v == 0; }
  static bool cancels(const value_type &sum, const value_type & /*scale*/) { return sum == 0; }
  static int sign(const value_type &v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  static bool equal(const value_type &a, const value_type &b) { return a == b; }
  static value_type from_rational(const BigRational &q) { return q; }
  static value_type from_int(long v) { return value_type(v); }

  static value_type sqrt(const value_type &v) {
    if (v < 0)
      throw DomainError("square root of a negative coefficient");
    BigInt rn, rd;
    if (!detail::is_perfect_square(mp::numerator(v), rn) ||
        !detail::is_perfect_square(mp::denominator(v), rd))
      throw ModeError("square root of " + v.str() +
                      " is irrational; rerun in numeric coefficient mode");
    return value_type(rn, rd);
  }

  static value_type parse(std::string_view text) {
    if (detail::looks_decimal(text))
      throw ModeError("decimal coefficient '" + std::string(text) +
                      "' requires numeric coefficient mode");
    return value_type(std::string(text));
  }

  static std::string to_string(const value_type &v, int /*digits*/ = 0) { return v.str(); }
};

struct Real {
  using value_type = BigFloat;
  static constexpr const char *name = "numeric";
  static constexpr bool exact = false;

  static bool is_zero(const value_type &v) { return mp::abs(v) < numeric::tau(); }
  /// A sum is zero when it is below tau, or when it is rounding noise relative to the magnitude
  /// of the terms that cancelled in it.
  static bool cancels(const value_type &sum, const value_type &scale) {
    return is_zero(sum) || mp::abs(sum) <= numeric::noise() * scale;
  }
  static int sign(const value_type &v) { return is_zero(v) ? 0 : (v > 0 ? 1 : -1); }
  static bool equal(const value_type &a, const value_type &b) { return is_zero(a - b); }
  static value_type from_rational(const BigRational &q) {
    return value_type(mp::numerator(q)) / value_type(mp::denominator(q));
  }
  static value_type from_int(long v) { return value_type(v); }

  static value_type sqrt(const value_type &v) {
    if (v < 0)
      throw DomainError("square root of a negative coefficient");
    return mp::sqrt(v);
  }

  static value_type parse(std::string_view text) {
    if (detail::looks_decimal(text))
      return value_type(std::string(text));
    return from_rational(BigRational(std::string(text)));
  }

  /// digits <= 0 prints enough digits to read the value back unchanged.
  static std::string to_string(const value_type &v, int digits = 0) {
    if (digits <= 0)
      digits = static_cast<int>(numeric::digits10_for_bits(numeric::precision_bits())) + 2;
    if (is_zero(v))
      return "0";
    return v.str(digits, std::ios_base::fmtflags(0));
  }
};

template <class F>
concept CoefficientField = requires(const typename F::value_type &v) {
  { F::is_zero(v) } -> std::convertible_to<bool>;
  { F::sign(v) } -> std::convertible_to<int>;
  { F::from_rational(BigRational{}) } -> std::convertible_to<typename F::value_type>;
};

template <class To, class From>
typename To::value_type convert_coeff(const typename From::value_type &v) {
  if constexpr (std::is_same_v<To, From>)
    return v;
  else if constexpr (std::is_same_v<To, Real> && std::is_same_v<From, Rational>)
    return Real::from_rational(v);
  else
    static_assert(std::is_same_v<To, From>, "numeric coefficients cannot be made exact");
}

} // namespace lcg

#endif // LCG_FIELD_HPP
