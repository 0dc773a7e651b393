#pragma once

#include <vector>

#include "qts/partition.hpp"
#include "qts/rational_function.hpp"
#include "qts/report.hpp"

namespace qts {

// standard: base q and t.  flipped: base 1/q and 1/t, built from explicit
// reciprocals so that X is never touched.
enum class PochBase { standard, flipped };

// (a; q)_m = prod_{k<m} (1 - a q^k); for m < 0, 1 / (a q^m; q)_{-m}.
// PoleError when a factor of the inverted product vanishes.
RationalFn poch(const RationalFn& a, int m, PochBase base = PochBase::standard);

// (a; q, t)_lambda = prod_i (a t^{1-i}; q)_{lambda_i}.
RationalFn poch_partition(const RationalFn& a, const Partition& lambda,
                          PochBase base = PochBase::standard);

// (a_1, ..., a_k)_lambda.
RationalFn poch_multi(const std::vector<RationalFn>& args, const Partition& lambda,
                      PochBase base = PochBase::standard);

// x^{|mu|} (1/x; q, t)_mu = (-1)^{|mu|} q^{n(mu')} t^{-n(mu)} (x; 1/q, 1/t)_mu.
IdentityReport flip_poch_identity_check(const RationalFn& x, const Partition& mu);

}  // namespace qts
