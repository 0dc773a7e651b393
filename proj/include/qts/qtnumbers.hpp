#pragma once

#include <vector>

#include "qts/partition.hpp"
#include "qts/rational_function.hpp"
#include "qts/report.hpp"
#include "qts/wfunctions.hpp"

namespace qts {

// prod_{i<j} (q t^{j-i})_{mu_i-mu_j} / (q t^{j-i-1})_{mu_i-mu_j}
RationalFn binomial_h_product(const Partition& mu);
// prod_{i<j} (t^{j-i})_{mu_i-mu_j} / (t^{j-i+1})_{mu_i-mu_j}
RationalFn bracket_t_product(const Partition& mu);
// prod_i (1 - q t^{n-i})^{e_i}
RationalFn q_t_power_product(const std::vector<int>& exponents);

// qt-binomial coefficient with the w argument q^z t^delta supplied directly.
RationalFn qt_binomial_args(const ArgumentVector& qz_tdelta, const Partition& mu);
// z an integer vector (not necessarily a partition).
RationalFn qt_binomial(const std::vector<int>& z, const Partition& mu);
// z = lambda, memoized.
RationalFn qt_binomial(const Partition& lambda, const Partition& mu);
// z = x-bar with q^x = X.
RationalFn qt_binomial_generic(const Partition& mu);
// Closed form at z = x-bar.
RationalFn qt_binomial_rect(const Partition& mu);

// (x)_lambda = sum_{mu <= lambda} (-1)^{|mu|} q^{n(mu')} t^{-n(mu)} binom(lambda, mu) x^{|mu|}
IdentityReport binomial_theorem_check(const Partition& lambda);

// [z, s]_mu with the argument q^z t^delta supplied directly.
RationalFn qt_bracket_args(const ArgumentVector& qz_tdelta, const RationalFn& s, const Partition& mu);
RationalFn qt_bracket(const std::vector<int>& z, const RationalFn& s, const Partition& mu);
// prod_i (1 - q^{z_i} t^{n-i}) / (1 - q t^{n-i})
RationalFn qt_number(const std::vector<int>& z);
// prod_i (x t^{i-1}; 1/q)_{mu_i} / (1 - q t^{n-i})^{mu_i}
RationalFn bracket_rect(const RationalFn& x, const Partition& mu);

// [z]_mu = t^{-2n(mu)-(1-n)|mu|} prod_i (q t^{n-i})_{mu_i}/(1-q t^{n-i})^{mu_i}
//          * bracket_t_product / binomial_h_product * binom(z, mu).
IdentityReport bracket_binomial_relation_check(const ArgumentVector& qz_tdelta, const Partition& mu);

}  // namespace qts
