#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace qts {

// The three indeterminates. X stands for q^x, x a generic exponent.
enum class Var : int { q = 0, t = 1, X = 2 };

inline constexpr int kNumVars = 3;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::q, Var::t, Var::X};

char var_name(Var v);

// Packed exponent vector q^a t^b X^c with a, b, c >= 0.
//
// Bits 48..63 hold the total degree, then 16 bits each for the q, t and X
// exponents.  Comparing packed keys as integers is therefore graded
// lexicographic order with q > t > X, and multiplying monomials is key
// addition.
class Monomial {
 public:
  static constexpr int kFieldBits = 16;
  static constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;
  static constexpr int kMaxDegree = static_cast<int>(kFieldMask);

  constexpr Monomial() = default;
  Monomial(int eq, int et, int ex);

  static Monomial of(Var v, int e = 1);
  static constexpr Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }

  int exponent(Var v) const {
    return static_cast<int>((key_ >> shift(v)) & kFieldMask);
  }
  int degree() const { return static_cast<int>(key_ >> (3 * kFieldBits)); }
  bool is_one() const { return key_ == 0; }
  std::uint64_t key() const { return key_; }

  bool divides(Monomial other) const;
  // Same monomial with the exponent of v set to zero.
  Monomial without(Var v) const;

  friend Monomial operator*(Monomial a, Monomial b);
  // Requires b.divides(a).
  friend Monomial operator/(Monomial a, Monomial b);

  static Monomial gcd(Monomial a, Monomial b);

  friend constexpr auto operator<=>(Monomial a, Monomial b) = default;

  // "q^2*t", "X", "1"
  std::string str() const;

 private:
  static constexpr int shift(Var v) {
    return (2 - static_cast<int>(v)) * kFieldBits;
  }
  std::uint64_t key_ = 0;
};

}  // namespace qts
