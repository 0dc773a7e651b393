#include "qts/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qts {

char var_name(Var v) {
  switch (v) {
    case Var::q: return 'q';
    case Var::t: return 't';
    case Var::X: return 'X';
  }
  return '?';
}

Monomial::Monomial(int eq, int et, int ex) {
  if (eq < 0 || et < 0 || ex < 0) {
    throw std::invalid_argument("Monomial: negative exponent");
  }
  const long long deg = static_cast<long long>(eq) + et + ex;
  if (deg > kMaxDegree) {
    throw std::overflow_error("Monomial: degree exceeds packed range");
  }
  key_ = (static_cast<std::uint64_t>(deg) << (3 * kFieldBits)) |
         (static_cast<std::uint64_t>(eq) << shift(Var::q)) |
         (static_cast<std::uint64_t>(et) << shift(Var::t)) |
         static_cast<std::uint64_t>(ex);
}

Monomial Monomial::of(Var v, int e) {
  std::array<int, kNumVars> ex{};
  ex[static_cast<int>(v)] = e;
  return Monomial(ex[0], ex[1], ex[2]);
}

bool Monomial::divides(Monomial other) const {
  for (Var v : kAllVars) {
    if (exponent(v) > other.exponent(v)) return false;
  }
  return true;
}

Monomial Monomial::without(Var v) const {
  std::array<int, kNumVars> ex{};
  for (Var w : kAllVars) ex[static_cast<int>(w)] = exponent(w);
  ex[static_cast<int>(v)] = 0;
  return Monomial(ex[0], ex[1], ex[2]);
}

Monomial operator*(Monomial a, Monomial b) {
  if (a.degree() + b.degree() > Monomial::kMaxDegree) {
    throw std::overflow_error("Monomial: degree exceeds packed range");
  }
  // Each field is bounded by the total degree, so no carries cross fields.
  return Monomial::from_key(a.key_ + b.key_);
}

Monomial operator/(Monomial a, Monomial b) {
  if (!b.divides(a)) throw std::domain_error("Monomial: inexact division");
  return Monomial::from_key(a.key_ - b.key_);
}

Monomial Monomial::gcd(Monomial a, Monomial b) {
  return Monomial(std::min(a.exponent(Var::q), b.exponent(Var::q)),
                  std::min(a.exponent(Var::t), b.exponent(Var::t)),
                  std::min(a.exponent(Var::X), b.exponent(Var::X)));
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (Var v : kAllVars) {
    const int e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace qts
