#pragma once

#include <optional>

#include "qts/polynomial.hpp"

namespace qts {

// gcd of the integer coefficients; 0 for the zero polynomial.
BigInt content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

// a / b when b divides a in Z[q,t,X], otherwise nullopt.  b must be nonzero.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
// Throws std::domain_error if b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Greatest common divisor in Z[q,t,X], normalized to a positive leading
// coefficient (gcd(0, 0) = 0).  Tries the heuristic route first and falls
// back to the primitive PRS route.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Heuristic GCD: evaluate at a large integer, recurse, reconstruct by
// xi-adic expansion and confirm by trial division.  nullopt when every
// evaluation point was unlucky.
std::optional<IntPolynomial> gcd_heuristic(const IntPolynomial& a, const IntPolynomial& b);

// Recursive primitive polynomial remainder sequence.  Always succeeds;
// slower than the heuristic on dense inputs.
IntPolynomial gcd_prs(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace qts
