#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qts/partition.hpp"
#include "qts/rational_function.hpp"
#include "qts/report.hpp"

namespace qts {

// x = 0 sums of both kinds.  The first kind is evaluated under both readings
// of its t-exponent, 2n(mu) - (n-1)|mu| and 2n(mu) + (n-1)|mu|; the report
// passes when the second kind and the minus reading hold, and its index lists
// every reading that held under "first_kind_readings".
IdentityReport check_x0_sums(const Partition& nu);
// LHS - RHS of the first-kind x = 0 sum under the chosen reading.
RationalFn x0_sum_first_kind_residual(const Partition& nu, bool plus_reading);

// X = q^m t^{1-j} in the s1 expansion must give 0.  For m = 0 and nu_n != 0
// the two restricted-support sums are asserted as well.  Throws
// std::invalid_argument unless 1 <= j <= n and 0 <= m < nu_j.
IdentityReport check_root_vanishing(const Partition& nu, int j, int m);
// sum_mu q^{-n(nu')} t^{2n(mu)-(n-1)|mu|} s1(nu, mu) = 0, the X = q case;
// requires nu_1 >= 2.
IdentityReport check_s1_row_sum(const Partition& nu);

// Index range of a suite run: every partition of length n <= n_max with
// parts <= part_max(n).
struct SuiteConfig {
  // Unset fields use the desk-scale defaults: n <= 3, parts <= 3 for n <= 2
  // and parts <= 2 for n = 3 (1 beyond that).
  std::optional<int> n_max;
  std::optional<int> part_max;
  // Empty runs every registered identity.
  std::vector<std::string> identities;
  unsigned seed = 1;

  int max_n() const;
  int max_part(int n) const;
  // Partitions in range, ordered by n and then lexicographically.
  std::vector<Partition> partitions(int n) const;
};

struct RegisteredIdentity {
  std::string id;
  std::string description;
  std::function<std::vector<IdentityReport>(const SuiteConfig&)> run;
};

// Registration order is the run order.
const std::vector<RegisteredIdentity>& identity_registry();

// Throws std::invalid_argument for an unknown id in cfg.identities.
std::vector<IdentityReport> run_suite(const SuiteConfig& cfg);
nlohmann::json suite_json(const SuiteConfig& cfg, const std::vector<IdentityReport>& reports,
                          bool with_elapsed = true);

enum class TableKind { s1, s2, binomial, bracket };
enum class TableFormat { json, csv };
TableKind parse_table_kind(const std::string& text);
TableFormat parse_table_format(const std::string& text);

struct TableEntry {
  Partition nu, mu;
  RationalFn value;
};
// All (nu, mu) with mu <= nu <= bound, nu ascending then mu ascending.
std::vector<TableEntry> table_entries(TableKind kind, const Partition& bound);
void emit_table(TableKind kind, const Partition& bound, TableFormat format, std::ostream& out);

// Symbolic value of "s1([2,1],[1,0])", "s2(..)", "u(..)", "v(..)",
// "binomial(lambda,mu)", "bracket(z,mu)", "qt_number(z)", "f(mu)",
// "w(mu,lambda)", "w_hat(mu,lambda)", "w_bar(mu,lambda)", or any plain
// rational expression in q, t, X.
RationalFn eval_expression(const std::string& expr);
// Exact value at (q0, t0, X0); PoleError at a pole.
BigRational eval_point(const std::string& expr, const BigRational& q0, const BigRational& t0,
                       const BigRational& x0 = 0);

}  // namespace qts
