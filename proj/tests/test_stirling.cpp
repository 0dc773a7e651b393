#include "doctest.h"
#include "oracles/classical.hpp"
#include "qts/qtnumbers.hpp"
#include "qts/stirling.hpp"

using namespace qts;

namespace {

RationalFn P(const char* s) { return RationalFn::parse(s); }

std::vector<Partition> default_range() {
  std::vector<Partition> out;
  for (int n = 1; n <= 2; ++n)
    for (const Partition& nu : partitions_in_box(n, 3)) out.push_back(nu);
  for (const Partition& nu : partitions_in_box(3, 2)) out.push_back(nu);
  return out;
}

void check_report(const IdentityReport& r) {
  CHECK_MESSAGE(r.passed, r.to_json(false).dump());
}

RationalFn classical(const RationalFn& f) { return f.substitute_t_eq_q_pow(1).limit_q_to_1(0); }

}  // namespace

TEST_CASE("f factor") {
  CHECK(f_factor(Partition::zero(1)).is_one());
  CHECK(f_factor(Partition::zero(3)).is_one());
  CHECK(f_factor(Partition{2}) == P("1/2"));
  // n = 2, mu = (1,0): (1-t)/(1-t) / 1!
  CHECK(f_factor(Partition{1, 0}).is_one());
}

TEST_CASE("diagonal and zero column") {
  for (const Partition& nu : default_range()) {
    check_report(diagonal_check(nu));
    if (nu[nu.n() - 1] != 0) check_report(zero_column_check(nu));
  }
  CHECK(s1(Partition{1, 0}, Partition{1, 1}).is_zero());
}

TEST_CASE("u and v are mutually inverse change-of-basis matrices") {
  for (const Partition& nu : default_range()) {
    check_report(uv_inversion_check(nu));
    check_report(change_of_basis_u_check(nu));
    check_report(change_of_basis_v_check(nu));
  }
}

TEST_CASE("closed-form limits of u and v") {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : partitions_in_box(n, 2))
      for (const Partition& mu : subpartitions(lambda)) check_report(uv_limit_check(lambda, mu));
}

TEST_CASE("flip identities for h and g") {
  for (const Partition& mu : default_range()) {
    check_report(h_flip_check(mu));
    check_report(g_flip_check(mu));
  }
}

TEST_CASE("s1 and s2 are inverse in both orders") {
  for (const Partition& bound : {Partition{3}, Partition{3, 3}, Partition{3, 1}, Partition{2, 2, 2}}) {
    check_report(stirling_inversion_check(bound));
  }
}

TEST_CASE("expansions") {
  for (const Partition& nu : default_range()) {
    check_report(expansion_s1_check(nu));
    check_report(expansion_s2_check(nu));
  }
}

TEST_CASE("adjacent weight") {
  for (const Partition& nu : default_range())
    for (const Partition& mu : subpartitions(nu))
      if (mu.weight() + 1 == nu.weight()) check_report(adjacent_weight_check(nu, mu));
}

TEST_CASE("classical reduction at n = 1, t = q, q -> 1") {
  for (int m = 0; m <= 5; ++m) {
    const oracle::Coeffs first = oracle::falling_factorial_coeffs(m);
    const oracle::Coeffs second = oracle::stirling2_row(m);
    for (int k = 0; k <= m; ++k) {
      CHECK_MESSAGE(classical(s1(Partition{m}, Partition{k})) == RationalFn(BigRational(first[k])),
                    "s1 " << m << "," << k);
      CHECK_MESSAGE(classical(s2(Partition{m}, Partition{k})) == RationalFn(BigRational(second[k])),
                    "s2 " << m << "," << k);
    }
  }
}

TEST_CASE("V-algebra product") {
  const Partition bound{2, 1};
  const PartitionMatrix id = PartitionMatrix::identity(bound);
  const PartitionMatrix u(bound, [](const Partition& a, const Partition& b) { return u_matrix(a, b); });
  const PartitionMatrix v(bound, [](const Partition& a, const Partition& b) { return v_matrix(a, b); });
  CHECK(valgebra_multiply(u, v) == id);
  CHECK(valgebra_multiply(v, u) == id);
  CHECK(valgebra_multiply(id, u) == u);
  CHECK(id.entries().size() == subpartitions(bound).size());
  CHECK_THROWS_AS(valgebra_multiply(u, PartitionMatrix::identity(Partition{2, 2})), std::invalid_argument);
}

TEST_CASE("caches can be cleared without changing values") {
  const RationalFn before = s1(Partition{2, 1}, Partition{1, 0});
  clear_stirling_caches();
  CHECK(s1(Partition{2, 1}, Partition{1, 0}) == before);
}

TEST_CASE("small u and v values") {
  const Partition one{1};
  CHECK(v_matrix(one, one) == RationalFn(-1));
  CHECK(u_limit(one, one) == RationalFn(-1));
  CHECK(u_limit_direct(one, one) == RationalFn(-1));
  CHECK(u_matrix(Partition{2, 1}, Partition{0, 0}).is_one());
  CHECK(v_matrix(Partition{2, 1}, Partition{0, 0}).is_one());
  CHECK(u_matrix(Partition{1, 0}, Partition{1, 1}).is_zero());
  CHECK(v_matrix(Partition{1, 0}, Partition{1, 1}).is_zero());
  // n = 1: u and v invert on a 2 x 2 block, so u((1),(1)) = 1 / v((1),(1)).
  CHECK(u_matrix(one, one) == RationalFn(-1));
  CHECK(stirling_denominator(Partition{2, 1}, Partition{1, 0}) == P("(1-q*t)*(1-q)"));
  CHECK(limit_bracket(RationalFn::q(), Partition{3, 2}).is_one());
}
