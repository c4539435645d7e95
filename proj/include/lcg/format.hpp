#ifndef LCG_FORMAT_HPP
#define LCG_FORMAT_HPP

// Text form of Levi-Civita numbers.
//
//   series   := ['-'] term (('+'|'-') term)* ['+' 'O' '(' order ')']
//   term     := coeff ['*' 'eps' ['^' exponent]] | 'eps' ['^' exponent]
//   coeff    := integer ['/' positive-integer] | decimal          (decimal: numeric mode only)
//   exponent := integer | '(' integer ['/' positive-integer] ')'
//   order    := '1' | 'eps' ['^' exponent]
//
// Whitespace is insignificant. Printing is canonical: ascending exponents, unit coefficients
// omitted in front of eps, and a trailing "+ O(eps^T)" when the value is truncated.

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "series.hpp"

namespace lcg {

namespace detail {

inline std::string exponent_suffix(const Exponent &e) {
  if (e == Exponent(1))
    return "eps";
  if (e.is_integer() && e >= Exponent(0))
    return "eps^" + e.str();
  return "eps^(" + e.str() + ")";
}

template <class F>
class SeriesParser {
public:
  explicit SeriesParser(std::string_view text) : text_(text) {}

  Series<F> parse() {
    std::vector<typename Series<F>::Term> terms;
    Order trunc = Order::infinity();
    skip_ws();
    if (at_end())
      fail("empty series literal");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    bool first = true;
    while (true) {
      skip_ws();
      if (peek() == 'O') {
        if (negative && first)
          fail("big-O marker cannot be negated");
        trunc = min_order(trunc, parse_big_o());
      } else {
        auto term = parse_term();
        if (negative)
          term.coeff = -term.coeff;
        terms.push_back(std::move(term));
      }
      first = false;
      skip_ws();
      if (at_end())
        break;
      char c = peek();
      if (c != '+' && c != '-')
        fail(std::string("expected '+' or '-', found '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return Series<F>::from_terms(std::move(terms), trunc);
  }

private:
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  BigInt integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    BigInt v(digits());
    return neg ? BigInt(-v) : v;
  }

  Exponent exponent() {
    skip_ws();
    if (peek() != '(')
      return Exponent(BigRational(integer()));
    ++pos_;
    BigInt num = integer();
    BigInt den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      den = BigInt(digits());
      if (den == 0)
        fail("zero denominator in exponent");
    }
    expect(')');
    return Exponent(BigRational(num, den));
  }

  Exponent eps_power() {
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      return exponent();
    }
    return Exponent(1);
  }

  Order parse_big_o() {
    ++pos_; // 'O'
    expect('(');
    skip_ws();
    Order order;
    if (accept_word("eps")) {
      order = Order(eps_power());
    } else {
      std::size_t at = pos_;
      if (digits() != "1") {
        pos_ = at;
        fail("expected 1 or eps inside O(...)");
      }
      order = Order(0);
    }
    expect(')');
    return order;
  }

  // Unsigned coefficient token: integer, fraction or (numeric mode) decimal.
  typename F::value_type coefficient() {
    std::size_t start = pos_;
    digits();
    bool decimal = false;
    if (peek() == '.') {
      decimal = true;
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        digits();
    }
    if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < text_.size()) {
      char n = text_[pos_ + 1];
      bool sign = (n == '+' || n == '-') && pos_ + 2 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]));
      if (std::isdigit(static_cast<unsigned char>(n)) || sign) {
        decimal = true;
        pos_ += sign ? 2 : 1;
        digits();
      }
    }
    std::string token(text_.substr(start, pos_ - start));
    if (!decimal) {
      std::size_t save = pos_;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (BigInt(den) == 0)
          fail("zero denominator");
        token += "/" + den;
      } else {
        pos_ = save;
      }
    }
    try {
      return F::parse(token);
    } catch (const ModeError &e) {
      throw ParseError(e.what(), start);
    }
  }

  typename Series<F>::Term parse_term() {
    skip_ws();
    if (accept_word("eps"))
      return {eps_power(), F::from_int(1)};
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a coefficient or eps");
    auto c = coefficient();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      if (!accept_word("eps"))
        fail("expected eps after '*'");
      return {eps_power(), std::move(c)};
    }
    return {Exponent(0), std::move(c)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

template <class F>
Series<F> parse_series(std::string_view text) {
  return detail::SeriesParser<F>(text).parse();
}

/// Significant digits used by to_string when no count is passed (0: round-trip).
inline int &display_digits() {
  static int digits = 0;
  return digits;
}

/// Canonical text. `digits` limits significant digits of numeric coefficients (0: round-trip,
/// negative: display_digits()).
template <class F>
std::string to_string(const Series<F> &a, int digits = -1) {
  if (digits < 0)
    digits = display_digits();
  std::ostringstream os;
  bool first = true;
  for (const auto &t : a.terms()) {
    bool negative = F::sign(t.coeff) < 0;
    typename F::value_type mag = negative ? typename F::value_type(-t.coeff) : t.coeff;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (t.exp == Exponent(0)) {
      os << F::to_string(mag, digits);
    } else if (F::equal(mag, F::from_int(1))) {
      os << detail::exponent_suffix(t.exp);
    } else {
      os << F::to_string(mag, digits) << "*" << detail::exponent_suffix(t.exp);
    }
  }
  if (a.trunc().is_finite()) {
    const Exponent &e = a.trunc().exponent();
    std::string marker = e == Exponent(0) ? "O(1)" : "O(" + detail::exponent_suffix(e) + ")";
    os << (first ? "" : " + ") << marker;
  } else if (first) {
    os << "0";
  }
  return os.str();
}

template <class F>
std::ostream &operator<<(std::ostream &os, const Series<F> &a) {
  return os << to_string(a);
}

} // namespace lcg

#endif // LCG_FORMAT_HPP
