#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qts/monomial.hpp"
#include "qts/numbers.hpp"

namespace qts {

// Sparse polynomial in q, t, X.  Terms are kept sorted by descending
// Monomial (graded lex, q > t > X) with no zero coefficients, so two
// polynomials are equal iff their term vectors are equal.
template <class Coeff>
class BasicPolynomial {
 public:
  using Term = std::pair<Monomial, Coeff>;

  BasicPolynomial() = default;
  BasicPolynomial(const Coeff& c) {  // NOLINT: implicit constant embedding
    if (c != 0) terms_.emplace_back(Monomial(), c);
  }
  BasicPolynomial(int c) : BasicPolynomial(Coeff(c)) {}  // NOLINT

  static BasicPolynomial monomial(Monomial m, const Coeff& c = Coeff(1)) {
    BasicPolynomial p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }
  static BasicPolynomial variable(Var v) { return monomial(Monomial::of(v)); }

  // Sorts, merges equal monomials and drops zeros.
  static BasicPolynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    BasicPolynomial p;
    for (auto& term : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == term.first) {
        p.terms_.back().second += term.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(term));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second == 1; }

  // Callers must check is_zero() first.
  Monomial leading_monomial() const { return terms_.front().first; }
  const Coeff& leading_coeff() const { return terms_.front().second; }
  Coeff constant_coeff() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return Coeff(0);
  }

  int degree(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }
  int total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  bool involves(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const Term& t) { return t.first.exponent(v) != 0; });
  }

  BasicPolynomial operator-() const {
    BasicPolynomial p = *this;
    for (auto& term : p.terms_) term.second = -term.second;
    return p;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    return merge(a, b, false);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return merge(a, b, true);
  }
  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = *this - b; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    if (b.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<std::uint64_t, Coeff> acc;
    acc.reserve(a.size() * b.size());
    Coeff prod;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        prod = ca * cb;
        acc[(ma * mb).key()] += prod;
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc) {
      if (c != 0) out.emplace_back(Monomial::from_key(key), std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return x.first > y.first; });
    BasicPolynomial p;
    p.terms_ = std::move(out);
    return p;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  BasicPolynomial times_term(Monomial m, const Coeff& c) const {
    BasicPolynomial p;
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& [mt, ct] : terms_) p.terms_.emplace_back(mt * m, ct * c);
    return p;
  }
  BasicPolynomial scaled(const Coeff& c) const { return times_term(Monomial(), c); }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Coefficients with respect to v: degree -> polynomial free of v.
  std::map<int, BasicPolynomial> coefficients_in(Var v) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& [m, c] : terms_) buckets[m.exponent(v)].emplace_back(m.without(v), c);
    std::map<int, BasicPolynomial> out;
    for (auto& [d, ts] : buckets) out.emplace(d, from_terms(std::move(ts)));
    return out;
  }

  // Substitutes v = value, leaving a polynomial free of v.
  BasicPolynomial evaluate_var(Var v, const Coeff& value) const {
    std::vector<Coeff> powers{Coeff(1)};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      const int e = m.exponent(v);
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
      out.emplace_back(m.without(v), c * powers[e]);
    }
    return from_terms(std::move(out));
  }

  // Substitutes v = value where value is a polynomial.
  BasicPolynomial substitute(Var v, const BasicPolynomial& value) const {
    std::vector<BasicPolynomial> powers{BasicPolynomial(Coeff(1))};
    BasicPolynomial out;
    for (const auto& [d, coeff] : coefficients_in(v)) {
      while (static_cast<int>(powers.size()) <= d) powers.push_back(powers.back() * value);
      out += coeff * powers[d];
    }
    return out;
  }

  BigRational evaluate(const std::array<BigRational, kNumVars>& point) const {
    BigRational sum = 0;
    for (const auto& [m, c] : terms_) {
      BigRational term = BigRational(c);
      for (Var v : kAllVars) {
        const int e = m.exponent(v);
        if (e != 0) term *= pow(point[static_cast<int>(v)], e);
      }
      sum += term;
    }
    return sum;
  }

  // Expanded form, e.g. "q^2*t - 2*X + 1"; "0" for the zero polynomial.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      Coeff mag = negative ? Coeff(-c) : c;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (m.is_one()) {
        out += to_string(mag);
      } else {
        if (mag != 1) out += to_string(mag) + "*";
        out += m.str();
      }
    }
    return out;
  }

 private:
  static BasicPolynomial merge(const BasicPolynomial& a, const BasicPolynomial& b, bool subtract) {
    BasicPolynomial p;
    p.terms_.reserve(a.size() + b.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first > ib->first)) {
        p.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first > ia->first) {
        p.terms_.emplace_back(ib->first, subtract ? Coeff(-ib->second) : ib->second);
        ++ib;
      } else {
        Coeff c = subtract ? Coeff(ia->second - ib->second) : Coeff(ia->second + ib->second);
        if (c != 0) p.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

using Polynomial = BasicPolynomial<BigRational>;
using IntPolynomial = BasicPolynomial<BigInt>;

// Clears denominators: returns (p, d) with rational_poly == p / d, p integral.
std::pair<IntPolynomial, BigInt> clear_denominators(const Polynomial& p);
Polynomial to_rational(const IntPolynomial& p);

}  // namespace qts
