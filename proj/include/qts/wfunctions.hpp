#pragma once

#include <stdexcept>
#include <vector>

#include "qts/partition.hpp"
#include "qts/rational_function.hpp"
#include "qts/report.hpp"

namespace qts {

class NotAStripError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments x_1..x_n of a w function.  Entries are arbitrary rational
// functions; the helpers below build the specializations used throughout.
using ArgumentVector = std::vector<RationalFn>;

// q^{kq} t^{kt}
RationalFn exponent_pair(int kq, int kt);
// X t^{kt}
RationalFn generic_x(int kt);
// (q^{z_1} t^{n-1}, ..., q^{z_n} t^0), i.e. q^z t^delta.
ArgumentVector q_pow_t_delta(const std::vector<int>& z);
inline ArgumentVector q_pow_t_delta(const Partition& lambda) { return q_pow_t_delta(lambda.parts()); }
// (X t^{n-1}, ..., X), i.e. q^{x-bar} t^delta.
ArgumentVector generic_staircase(int n);
// Every entry multiplied by s.
ArgumentVector scaled(const ArgumentVector& xs, const RationalFn& s);

// H_{lambda/mu}(q, t); NotAStripError unless lambda/mu is a horizontal strip.
RationalFn h_factor(const Partition& lambda, const Partition& mu);

// Single-variable skew functions; 0 when lambda/mu is not a horizontal strip.
RationalFn w_skew_single(const Partition& lambda, const Partition& mu, const RationalFn& x);
RationalFn w_hat_skew_single(const Partition& lambda, const Partition& mu, const RationalFn& x);

// Multivariable skew functions by the branching recursion, peeling x_1
// first.  xs.size() variables; with none left the value is [lambda == mu].
RationalFn w_skew_multi(const Partition& lambda, const Partition& mu, const ArgumentVector& xs);
RationalFn w_hat_skew_multi(const Partition& lambda, const Partition& mu, const ArgumentVector& xs);
// w_mu(xs) and its dual; xs.size() must equal mu.n().
RationalFn w_multi(const Partition& mu, const ArgumentVector& xs);
RationalFn w_hat_multi(const Partition& mu, const ArgumentVector& xs);
// w_mu(q^lambda t^delta) and ŵ_mu(q^lambda t^delta), memoized.
RationalFn w_at(const Partition& mu, const Partition& lambda);
RationalFn w_hat_at(const Partition& mu, const Partition& lambda);

// Closed form of w_mu(x t^delta).
RationalFn w_staircase(const Partition& mu, const RationalFn& x);
// Closed form q^{-nk} prod_i (q^{1-k} x_i; q)_k of w at the rectangle k-bar.
RationalFn w_rect_closed(int k, const ArgumentVector& xs);

// w_mu(q^lambda t^delta) = 0 for mu not contained in lambda.
IdentityReport w_vanishing_check(const Partition& mu, const Partition& lambda);
// ŵ_mu(x; q, t) = q^{-|mu|} t^{-2n(mu)+(n-1)|mu|} w_mu(1/x; 1/q, 1/t).
IdentityReport duality_check(const Partition& mu, const ArgumentVector& xs);
// The same identity with t^{-2n(mu)-(n-1)|mu|}; expected to fail for n >= 2.
IdentityReport duality_variant_exponent_check(const Partition& mu, const ArgumentVector& xs);
// Both sides of the duality relation, exposed for tests.
RationalFn duality_rhs(const Partition& mu, const ArgumentVector& xs, bool variant_exponent = false);

// lim_{q->1} (1-q)^{-mu_1} w_mu(q^lambda t^delta; q, t) when invert is false;
// with invert, the same limit of w_mu(q^{-lambda} t^{-delta}; 1/q, 1/t).
// Both are functions of t only.
RationalFn w_bar(const Partition& mu, const Partition& lambda, bool invert);

void clear_w_caches();

}  // namespace qts
