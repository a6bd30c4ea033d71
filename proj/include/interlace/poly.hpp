#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.
//
// Coefficients are stored in ascending degree order and kept canonical: the
// zero polynomial has no coefficients, every other polynomial has a nonzero
// leading coefficient.

#include <gmpxx.h>

#include <climits>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "interlace/error.hpp"

namespace interlace {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kNegInfinityDegree = INT_MIN;

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  static Poly monomial(const Integer& c, std::size_t power);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  // kNegInfinityDegree for the zero polynomial.
  int degree() const noexcept;

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  // Coefficient of x^k; zero past the degree.
  Integer coeff(std::size_t k) const;

  // Requires a nonzero polynomial.
  const Integer& leading() const;

  // Nonnegative gcd of the coefficients; zero for the zero polynomial.
  Integer content() const;

  // Divided by its content, sign-normalized so the leading coefficient is positive.
  Poly primitive() const;

  bool has_nonnegative_coeffs() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Integer& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& s) { return a *= s; }
  friend Poly operator*(const Integer& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Exact division by an integer that divides every coefficient.
  Poly divexact(const Integer& d) const;

  // "c0,c1,...,cd" ascending; "0" for the zero polynomial.
  std::string to_string() const;
  static Poly parse(std::string_view text);

  // Human-oriented rendering, e.g. "x^2 + 3x - 1".
  std::string pretty() const;

 private:
  void canonicalize();

  std::vector<Integer> coeffs_;
};

Poly derivative(const Poly& a);

// Primitive gcd with positive leading coefficient. Throws BothZero.
Poly gcd(const Poly& a, const Poly& b);

// lc(b)^(deg a - deg b + 1) * a reduced modulo b. Requires b nonzero.
Poly pseudo_remainder(const Poly& a, const Poly& b);

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

// Division over the integers: succeeds when every quotient step is integral.
// Returns false if some leading-coefficient division is inexact.
bool integer_divide(const Poly& a, const Poly& b, DivisionResult& out);

// True iff b divides a in Q[x].
bool divides(const Poly& b, const Poly& a);

Rational evaluate(const Poly& a, const Rational& t);

// Sign of a(t) computed without forming the rational value.
int sign_at(const Poly& a, const Rational& t);

Poly pow(const Poly& base, unsigned exponent);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace interlace
