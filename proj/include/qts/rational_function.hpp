#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qts/polynomial.hpp"

namespace qts {

// Raised when a denominator vanishes: evaluating at a pole, a q -> 1 limit
// that does not exist at the requested order, or a singular Pochhammer.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element of Q(q, t, X) in canonical reduced form.
//
// num and den have integer coefficients with gcd(num, den) = 1 (including
// integer content) and den's leading coefficient, under graded lex with
// q > t > X, is positive.  Equality of values is structural equality.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(int c) : RationalFn(BigRational(c)) {}  // NOLINT: constant embedding
  RationalFn(const BigRational& c);                  // NOLINT
  explicit RationalFn(const Polynomial& p);
  RationalFn(const Polynomial& num, const Polynomial& den);
  RationalFn(const IntPolynomial& num, const IntPolynomial& den);

  static RationalFn q() { return variable(Var::q); }
  static RationalFn t() { return variable(Var::t); }
  static RationalFn X() { return variable(Var::X); }
  static RationalFn variable(Var v);
  // q^a t^b X^c with exponents of either sign.
  static RationalFn monomial(int eq, int et, int ex = 0, const BigRational& coeff = 1);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  Polynomial numerator() const { return to_rational(num_); }
  Polynomial denominator() const { return to_rational(den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool involves(Var v) const { return num_.involves(v) || den_.involves(v); }

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  // Throws std::domain_error when b is zero.
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& b) { return *this = *this + b; }
  RationalFn& operator-=(const RationalFn& b) { return *this = *this - b; }
  RationalFn& operator*=(const RationalFn& b) { return *this = *this * b; }
  RationalFn& operator/=(const RationalFn& b) { return *this = *this / b; }

  RationalFn inverse() const;
  RationalFn pow(long exponent) const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // f(1/q, 1/t, X).
  RationalFn flip_qt() const;
  // Replaces v by an arbitrary rational function.
  RationalFn substitute(Var v, const RationalFn& value) const;
  // t = q^alpha, alpha >= 1.
  RationalFn substitute_t_eq_q_pow(int alpha) const;

  // Exact value at (q0, t0, X0); PoleError if the reduced denominator
  // vanishes there.
  BigRational evaluate(const BigRational& q0, const BigRational& t0,
                       const BigRational& x0 = 0) const;

  // (1-q)^(-order) * f at q = 1.  PoleError when the reduced denominator
  // still vanishes identically at q = 1.
  RationalFn limit_q_to_1(int order = 0) const;

  // "(q^2*t - 1)/(q - 1)"; numerator alone when the denominator is 1.
  std::string str() const;
  static RationalFn parse(std::string_view text);

  std::size_t hash() const;

 private:
  struct Canonical {};
  RationalFn(IntPolynomial num, IntPolynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFn reduce(IntPolynomial num, IntPolynomial den);

  IntPolynomial num_;
  IntPolynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.str(); }

}  // namespace qts

template <>
struct std::hash<qts::RationalFn> {
  std::size_t operator()(const qts::RationalFn& f) const { return f.hash(); }
};
