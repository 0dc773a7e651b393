#include "qts/rational_function.hpp"

#include <cctype>
#include <functional>

#include "qts/gcd.hpp"

namespace qts {
namespace {

IntPolynomial make_den_positive(IntPolynomial& num, IntPolynomial den) {
  if (den.leading_coeff() < 0) {
    num = -num;
    return -den;
  }
  return den;
}

}  // namespace

RationalFn RationalFn::reduce(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return RationalFn();
  IntPolynomial g = gcd(num, den);
  if (!g.is_one()) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  den = make_den_positive(num, std::move(den));
  return RationalFn(std::move(num), std::move(den), Canonical{});
}

RationalFn::RationalFn(const BigRational& c)
    : num_(IntPolynomial(BigInt(c.get_num()))), den_(IntPolynomial(BigInt(c.get_den()))) {}

RationalFn::RationalFn(const Polynomial& p) {
  auto [num, den] = clear_denominators(p);
  *this = reduce(std::move(num), IntPolynomial(den));
}

RationalFn::RationalFn(const Polynomial& num, const Polynomial& den) {
  auto [pn, dn] = clear_denominators(num);
  auto [pd, dd] = clear_denominators(den);
  *this = reduce(pn.scaled(dd), pd.scaled(dn));
}

RationalFn::RationalFn(const IntPolynomial& num, const IntPolynomial& den) {
  *this = reduce(num, den);
}

RationalFn RationalFn::variable(Var v) {
  return RationalFn(IntPolynomial::variable(v), IntPolynomial(1), Canonical{});
}

RationalFn RationalFn::monomial(int eq, int et, int ex, const BigRational& coeff) {
  if (coeff == 0) return RationalFn();
  Monomial up(std::max(eq, 0), std::max(et, 0), std::max(ex, 0));
  Monomial down(std::max(-eq, 0), std::max(-et, 0), std::max(-ex, 0));
  IntPolynomial num = IntPolynomial::monomial(up, BigInt(coeff.get_num()));
  IntPolynomial den = IntPolynomial::monomial(down, BigInt(coeff.get_den()));
  return RationalFn(std::move(num), std::move(den), Canonical{});
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Canonical{}); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFn::reduce(a.num_ + b.num_, a.den_);
  IntPolynomial g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFn::Canonical{});
  }
  // With b = g b', d = g d': gcd(a d' + c b', b' d' g) = gcd(a d' + c b', g).
  IntPolynomial ad = divide_exact(a.den_, g);
  IntPolynomial bd = divide_exact(b.den_, g);
  IntPolynomial num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RationalFn();
  IntPolynomial den = ad * b.den_;
  IntPolynomial h = gcd(num, g);
  if (!h.is_one()) {
    num = divide_exact(num, h);
    den = divide_exact(den, h);
  }
  den = make_den_positive(num, std::move(den));
  return RationalFn(std::move(num), std::move(den), RationalFn::Canonical{});
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  IntPolynomial g1 = gcd(a.num_, b.den_);
  IntPolynomial g2 = gcd(b.num_, a.den_);
  IntPolynomial an = g1.is_one() ? a.num_ : divide_exact(a.num_, g1);
  IntPolynomial bd = g1.is_one() ? b.den_ : divide_exact(b.den_, g1);
  IntPolynomial bn = g2.is_one() ? b.num_ : divide_exact(b.num_, g2);
  IntPolynomial ad = g2.is_one() ? a.den_ : divide_exact(a.den_, g2);
  return RationalFn(an * bn, ad * bd, RationalFn::Canonical{});
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw std::domain_error("division by the zero function");
  IntPolynomial num = den_;
  IntPolynomial den = make_den_positive(num, num_);
  return RationalFn(std::move(num), std::move(den), Canonical{});
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

RationalFn RationalFn::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  IntPolynomial num(1), den(1);
  IntPolynomial bn = num_, bd = den_;
  for (long e = exponent; e > 0; e >>= 1) {
    if (e & 1) {
      num *= bn;
      den *= bd;
    }
    if (e > 1) {
      bn *= bn;
      bd *= bd;
    }
  }
  // Powers of coprime polynomials stay coprime.
  return RationalFn(std::move(num), std::move(den), Canonical{});
}

RationalFn RationalFn::flip_qt() const {
  const int dq = std::max(num_.degree(Var::q), den_.degree(Var::q));
  const int dt = std::max(num_.degree(Var::t), den_.degree(Var::t));
  auto mirror = [&](const IntPolynomial& p) {
    std::vector<IntPolynomial::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      out.emplace_back(Monomial(dq - m.exponent(Var::q), dt - m.exponent(Var::t), m.exponent(Var::X)), c);
    }
    return IntPolynomial::from_terms(std::move(out));
  };
  return reduce(mirror(num_), mirror(den_));
}

RationalFn RationalFn::substitute(Var v, const RationalFn& value) const {
  if (!involves(v)) return *this;
  const int d = std::max(num_.degree(v), den_.degree(v));
  std::vector<IntPolynomial> p_pow{IntPolynomial(1)}, q_pow{IntPolynomial(1)};
  for (int i = 1; i <= d; ++i) {
    p_pow.push_back(p_pow.back() * value.num_);
    q_pow.push_back(q_pow.back() * value.den_);
  }
  // Homogenize with the common degree d so that both sides share Q^d.
  auto homogenize = [&](const IntPolynomial& poly) {
    IntPolynomial out;
    for (const auto& [deg, coeff] : poly.coefficients_in(v)) {
      out += coeff * p_pow[deg] * q_pow[d - deg];
    }
    return out;
  };
  IntPolynomial den = homogenize(den_);
  if (den.is_zero()) throw PoleError("substitution annihilates the denominator");
  return reduce(homogenize(num_), std::move(den));
}

RationalFn RationalFn::substitute_t_eq_q_pow(int alpha) const {
  if (alpha < 1) throw std::invalid_argument("substitute_t_eq_q_pow: alpha must be >= 1");
  return substitute(Var::t, monomial(alpha, 0, 0));
}

BigRational RationalFn::evaluate(const BigRational& q0, const BigRational& t0,
                                 const BigRational& x0) const {
  const std::array<BigRational, kNumVars> point{q0, t0, x0};
  BigRational d = den_.evaluate(point);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RationalFn RationalFn::limit_q_to_1(int order) const {
  if (order < 0) throw std::invalid_argument("limit_q_to_1: negative prefactor order");
  RationalFn scaled = *this;
  if (order > 0) scaled = *this / (RationalFn(1) - q()).pow(order);
  IntPolynomial den = scaled.den_.evaluate_var(Var::q, BigInt(1));
  if (den.is_zero()) {
    throw PoleError("limit q -> 1 does not exist at prefactor order " + std::to_string(order) +
                    " for " + str());
  }
  return reduce(scaled.num_.evaluate_var(Var::q, BigInt(1)), std::move(den));
}

std::string RationalFn::str() const {
  std::string num = num_.str();
  if (den_.is_one()) return num;
  if (num_.size() > 1) num = "(" + num + ")";
  std::string den = den_.str();
  const bool bare =
      den_.is_constant() ||
      (den_.is_monomial() && den_.leading_coeff() == 1 && [&] {
        int vars = 0;
        for (Var v : kAllVars) vars += den_.leading_monomial().exponent(v) != 0;
        return vars == 1;
      }());
  if (!bare) den = "(" + den + ")";
  return num + "/" + den;
}

std::size_t RationalFn::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const IntPolynomial* p : {&num_, &den_}) {
    mix(p->size());
    for (const auto& [m, c] : p->terms()) {
      mix(std::hash<std::uint64_t>{}(m.key()));
      mix(static_cast<std::size_t>(mpz_get_si(c.get_mpz_t())));
    }
  }
  return h;
}

// --------------------------------------------------------------------- parse
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= '-'? integer | '(' '-'? integer ')'
//   primary := integer | 'q' | 't' | 'X' | 'x' | '(' expr ')'

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFn parse() {
    RationalFn value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                     std::string(text_) + "\"");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  RationalFn expr() {
    RationalFn value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }
  RationalFn term() {
    RationalFn value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        RationalFn d = unary();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }
  RationalFn unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  RationalFn power() {
    RationalFn base = primary();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool negative = accept('-');
    BigInt e = integer();
    if (paren && !accept(')')) fail("expected ')'");
    if (!e.fits_slong_p()) fail("exponent out of range");
    const long exponent = negative ? -e.get_si() : e.get_si();
    if (exponent < 0 && base.is_zero()) fail("zero to a negative power");
    return base.pow(exponent);
  }
  RationalFn primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFn(BigRational(integer()));
    ++pos_;
    switch (c) {
      case 'q': return RationalFn::q();
      case 't': return RationalFn::t();
      case 'X':
      case 'x': return RationalFn::X();
      default: --pos_; fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFn RationalFn::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace qts
