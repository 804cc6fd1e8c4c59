#include "vknot/laurent.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "vknot/error.hpp"

namespace vknot {

LaurentPolynomial LaurentPolynomial::monomial(int sign, Exponent exponent) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("monomial sign must be +1 or -1");
  }
  LaurentPolynomial p;
  p.terms_.emplace(exponent, Integer(sign));
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(const Integer& value) {
  LaurentPolynomial p;
  p.add_term(0, value);
  return p;
}

Integer LaurentPolynomial::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(Exponent exponent, const Integer& coefficient) {
  if (coefficient.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent shift) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const Integer& factor) const {
  LaurentPolynomial out;
  if (factor.is_zero()) {
    return out;
  }
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    add_term(e, c);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    add_term(e, -c);
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), e, -c);
  }
  return out;
}

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + b; }

LaurentPolynomial negate(const LaurentPolynomial& f) { return -f; }

LaurentPolynomial monomial(int sign, LaurentPolynomial::Exponent exponent) {
  return LaurentPolynomial::monomial(sign, exponent);
}

LaurentPolynomial substitute_inverse(const LaurentPolynomial& f) {
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    out.add_term(-e, c);
  }
  return out;
}

Integer eval_at_one(const LaurentPolynomial& f) {
  Integer sum = 0;
  for (const auto& [e, c] : f.terms()) {
    sum += c;
  }
  return sum;
}

Integer derivative_at_one(const LaurentPolynomial& f) {
  Integer sum = 0;
  for (const auto& [e, c] : f.terms()) {
    sum += c * e;
  }
  return sum;
}

Integer one_norm(const LaurentPolynomial& f) {
  Integer sum = 0;
  for (const auto& [e, c] : f.terms()) {
    sum += abs(c);
  }
  return sum;
}

namespace {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  LaurentPolynomial parse() {
    LaurentPolynomial out;
    skip_space();
    if (at_end()) {
      fail("empty polynomial");
    }
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      parse_term(sign, out);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  void parse_term(int sign, LaurentPolynomial& out) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_digits();
      have_coeff = true;
      skip_space();
    }
    bool have_star = false;
    if (!at_end() && peek() == '*') {
      if (!have_coeff) {
        fail("'*' without a coefficient");
      }
      have_star = true;
      advance();
      skip_space();
    }
    LaurentPolynomial::Exponent exponent = 0;
    if (!at_end() && peek() == 't') {
      advance();
      skip_space();
      exponent = 1;
      if (!at_end() && peek() == '^') {
        advance();
        skip_space();
        int exp_sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          exp_sign = peek() == '-' ? -1 : 1;
          advance();
          skip_space();
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected exponent digits after '^'");
        }
        Integer e = read_digits();
        if (e > Integer(std::numeric_limits<std::int64_t>::max())) {
          fail("exponent out of range");
        }
        exponent = exp_sign * e.convert_to<std::int64_t>();
      }
    } else if (have_star) {
      fail("expected 't' after '*'");
    } else if (!have_coeff) {
      fail("expected a term");
    }
    out.add_term(exponent, coeff * sign);
  }

  Integer read_digits() {
    Integer value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      advance();
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial syntax error at column " + std::to_string(pos_ + 1) + ": " + what,
                     pos_ + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_poly(std::string_view text) { return PolyScanner(text).parse(); }

std::string format_poly(const LaurentPolynomial& f) {
  if (f.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (e == 0) {
      out << magnitude;
    } else {
      if (magnitude != 1) {
        out << magnitude << '*';
      }
      out << 't';
      if (e != 1) {
        out << '^' << e;
      }
    }
    first = false;
  }
  return out.str();
}

}  // namespace vknot
