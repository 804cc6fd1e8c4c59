#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vknot {

using Integer = boost::multiprecision::cpp_int;

/// Exact element of Z[t, 1/t]. Only nonzero coefficients are stored, so the
/// zero polynomial has no terms and equality is termwise.
class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Integer>;

  LaurentPolynomial() = default;

  /// sign * t^exponent; `sign` must be +1 or -1.
  static LaurentPolynomial monomial(int sign, Exponent exponent);
  static LaurentPolynomial constant(const Integer& value);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Integer coefficient(Exponent exponent) const;

  void add_term(Exponent exponent, const Integer& coefficient);

  /// Multiplication by t^shift.
  LaurentPolynomial shifted(Exponent shift) const;
  LaurentPolynomial scaled(const Integer& factor) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Terms terms_;
};

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial negate(const LaurentPolynomial& f);
LaurentPolynomial monomial(int sign, LaurentPolynomial::Exponent exponent);

/// f(1/t).
LaurentPolynomial substitute_inverse(const LaurentPolynomial& f);

/// f(1), the coefficient sum.
Integer eval_at_one(const LaurentPolynomial& f);

/// f'(1) = sum of i * a_i.
Integer derivative_at_one(const LaurentPolynomial& f);

/// ||f|| = sum of |a_i|.
Integer one_norm(const LaurentPolynomial& f);

/// Text form: terms joined by '+'/'-', term := [coeff]['*']['t'['^'exp]].
/// Whitespace is ignored. "0" is the zero polynomial.
LaurentPolynomial parse_poly(std::string_view text);

/// Canonical text form, highest exponent first: "-t^3-2*t+1", "t^-2", "0".
std::string format_poly(const LaurentPolynomial& f);

}  // namespace vknot
