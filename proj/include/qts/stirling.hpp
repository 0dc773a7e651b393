#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qts/partition.hpp"
#include "qts/rational_function.hpp"
#include "qts/report.hpp"

namespace qts {

// [prod_{i<n} (1-t)^{mu_i-mu_{i+1}} / (1-t^{n-i})^{mu_i}]
//   * prod_{j >= i+2} ((1-t^{j-i}) / (1-t^{j-i-1}))^{mu_i-mu_j}
//   / (mu_n! prod_{i<n} (mu_i-mu_{i+1})!)
RationalFn f_factor(const Partition& mu);

// q^{|mu|} t^{2n(mu)} / (q t^{n-1})_mu * prod_{i<j} (q t^{j-i})/(q t^{j-i-1}) * ŵ_mu(q^lambda t^delta)
RationalFn u_matrix(const Partition& lambda, const Partition& mu);
// (-1)^{|mu|} q^{n(mu')} t^{-n(mu)} binom(lambda, mu)
RationalFn v_matrix(const Partition& lambda, const Partition& mu);

// Closed forms of lim_{q->1} u(lambda, mu; 1/q, 1/t) and v(lambda, mu; 1/q, 1/t).
RationalFn u_limit(const Partition& lambda, const Partition& mu);
RationalFn v_limit(const Partition& lambda, const Partition& mu);
// The same limits taken directly from the flipped matrices.
RationalFn u_limit_direct(const Partition& lambda, const Partition& mu);
RationalFn v_limit_direct(const Partition& lambda, const Partition& mu);

// prod_i (1 - q t^{n-i})^{nu_i - mu_i}
RationalFn stirling_denominator(const Partition& nu, const Partition& mu);

// Explicit multiple qt-Stirling numbers; 0 unless mu is contained in nu.
RationalFn s1(const Partition& nu, const Partition& mu);
RationalFn s2(const Partition& nu, const Partition& mu);

// prod_i ((1 - x t^{n-i}) / (1 - q t^{n-i}))^{mu_i}
RationalFn limit_bracket(const RationalFn& x, const Partition& mu);

// Lower-triangular matrix indexed by partitions mu <= lambda <= bound.
class PartitionMatrix {
 public:
  using Index = std::pair<Partition, Partition>;
  using EntryFn = std::function<RationalFn(const Partition&, const Partition&)>;

  PartitionMatrix(Partition bound, const EntryFn& entry);
  static PartitionMatrix identity(const Partition& bound);

  const Partition& bound() const { return bound_; }
  int n() const { return bound_.n(); }
  // 0 outside the triangle.
  RationalFn at(const Partition& lambda, const Partition& mu) const;
  const std::map<Index, RationalFn>& entries() const { return entries_; }

  friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
    return a.bound_ == b.bound_ && a.entries_ == b.entries_;
  }

 private:
  PartitionMatrix() = default;
  friend PartitionMatrix valgebra_multiply(const PartitionMatrix& a, const PartitionMatrix& b);

  Partition bound_;
  std::map<Index, RationalFn> entries_;
};

// (AB)_{lambda mu} = sum_{mu <= nu <= lambda} A_{lambda nu} B_{nu mu}.
// Throws std::invalid_argument on a bound mismatch.
PartitionMatrix valgebra_multiply(const PartitionMatrix& a, const PartitionMatrix& b);

// sum_{mu <= lambda <= nu} u(nu, lambda) v(lambda, mu) = delta for every mu <= nu.
IdentityReport uv_inversion_check(const Partition& nu);
// S1 S2 = S2 S1 = identity on the triangle below bound.
IdentityReport stirling_inversion_check(const Partition& bound);
// (X; 1/q, 1/t)_lambda = sum_mu u(lambda, mu) X^{|mu|}
IdentityReport change_of_basis_u_check(const Partition& lambda);
// X^{|lambda|} = sum_mu v(lambda, mu) (X; 1/q, 1/t)_mu
IdentityReport change_of_basis_v_check(const Partition& lambda);
// u_limit and v_limit against the direct limits of the flipped matrices.
IdentityReport uv_limit_check(const Partition& lambda, const Partition& mu);
// h(mu; 1/q, 1/t) = t^{2n(mu)-(n-1)|mu|} h(mu) for the binomial h-product.
IdentityReport h_flip_check(const Partition& mu);
// (q t^{n-1}; 1/q, 1/t)_mu = (-1)^{|mu|} q^{-|mu|-n(mu')} t^{n(mu)-(n-1)|mu|} (q t^{n-1})_mu
IdentityReport g_flip_check(const Partition& mu);

// <X>_nu = sum_mu q^{-n(nu')} t^{2n(mu)-(n-1)|mu|} s1(nu, mu) limit_bracket(X, mu)
IdentityReport expansion_s1_check(const Partition& nu);
// limit_bracket(X, nu) = sum_mu q^{n(mu')} t^{-2n(nu)+(n-1)|nu|} s2(nu, mu) <X>_mu
IdentityReport expansion_s2_check(const Partition& nu);
// s1(nu, nu) = s2(nu, nu) = 1
IdentityReport diagonal_check(const Partition& nu);
// s1(nu, 0) = s2(nu, 0) = 0; meaningful for nu_n != 0.
IdentityReport zero_column_check(const Partition& nu);
// s1(nu, mu) + s2(nu, mu) = 0 when mu <= nu and |nu| - |mu| = 1.
IdentityReport adjacent_weight_check(const Partition& nu, const Partition& mu);

void clear_stirling_caches();

}  // namespace qts
