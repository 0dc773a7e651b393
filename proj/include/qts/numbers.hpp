#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qts {

using BigInt = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive
// denominator once canonicalized; every constructor below does that.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "3", "-7", "11/10".
BigRational parse_rational(std::string_view text);
std::string to_string(const BigInt& z);
std::string to_string(const BigRational& r);

BigRational pow(const BigRational& base, long exponent);
BigInt factorial(unsigned long n);

}  // namespace qts
