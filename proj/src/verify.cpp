#include "qts/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "qts/pochhammer.hpp"
#include "qts/qtnumbers.hpp"
#include "qts/stirling.hpp"
#include "qts/wfunctions.hpp"

namespace qts {
namespace {

using Reports = std::vector<IdentityReport>;
using nlohmann::json;

const RationalFn kX = RationalFn::X();

json nu_index(const Partition& nu) { return {{"nu", to_json_value(nu)}}; }

// D(mu) = prod_i (1 - q t^{n-i})^{mu_i}
RationalFn d_product(const Partition& mu) { return q_t_power_product(mu.parts()); }

RationalFn s1_prefactor(const Partition& nu, const Partition& mu, bool plus_reading = false) {
  const int n = nu.n(), w = mu.weight();
  return RationalFn::monomial(-nu.n_stat_conj(), 2 * mu.n_stat() + (plus_reading ? 1 : -1) * (n - 1) * w);
}

RationalFn s2_prefactor(const Partition& nu, const Partition& mu) {
  const int n = nu.n();
  return RationalFn::monomial(mu.n_stat_conj(), -2 * nu.n_stat() + (n - 1) * nu.weight());
}

// Argument vectors for the w checks: generic staircase, a mixed vector and
// an integer point q^z t^delta with z drawn from the seed.
std::vector<ArgumentVector> sample_args(int n, unsigned seed) {
  std::vector<ArgumentVector> out{generic_staircase(n)};
  ArgumentVector mixed{kX, RationalFn::monomial(3, 1), kX * RationalFn::monomial(2, -1)};
  while (static_cast<int>(mixed.size()) < n) mixed.push_back(kX * RationalFn::monomial(1, static_cast<int>(mixed.size())));
  mixed.resize(static_cast<std::size_t>(n));
  out.push_back(mixed);
  std::mt19937 rng(seed + 7919u * static_cast<unsigned>(n));
  std::uniform_int_distribution<int> part(0, 3);
  std::vector<int> z(static_cast<std::size_t>(n));
  for (int& zi : z) zi = part(rng);
  out.push_back(q_pow_t_delta(z));
  return out;
}

json args_index(const Partition& mu, std::size_t sample) {
  return {{"mu", to_json_value(mu)}, {"args", sample}};
}

// Coefficients of x(x-1)...(x-m+1), entry k for x^k.
std::vector<BigInt> falling_factorial(int m) {
  std::vector<BigInt> c{1};
  for (int j = 0; j < m; ++j) {
    std::vector<BigInt> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= j * c[k];
    }
    c = std::move(next);
  }
  return c;
}

// S(m, k) by S(m, k) = k S(m-1, k) + S(m-1, k-1).
std::vector<BigInt> stirling2(int m) {
  std::vector<BigInt> row{1};
  for (int r = 1; r <= m; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1, 0);
    for (int k = 1; k <= r; ++k) {
      const BigInt prev = k < r ? row[static_cast<std::size_t>(k)] : BigInt(0);
      next[static_cast<std::size_t>(k)] = k * prev + row[static_cast<std::size_t>(k - 1)];
    }
    row = std::move(next);
  }
  return row;
}

// ------------------------------------------------------------ runners

Reports poch_negative(const SuiteConfig& cfg) {
  Reports out;
  const int top = cfg.max_part(1);
  for (int m = 1; m <= std::max(top, 1); ++m) {
    Stopwatch clock;
    const RationalFn lhs = poch(kX, -m), rhs = poch(kX * RationalFn::q().pow(-m), m).inverse();
    out.push_back(compare("poch_negative_index", {{"m", m}}, lhs, rhs, clock));
  }
  return out;
}

Reports flip(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& mu : cfg.partitions(n)) out.push_back(flip_poch_identity_check(kX, mu));
  return out;
}

Reports w_rect(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    const auto samples = sample_args(n, cfg.seed);
    for (int k = 0; k <= cfg.max_part(n); ++k) {
      for (std::size_t s = 0; s < samples.size(); ++s) {
        Stopwatch clock;
        out.push_back(compare("w_rect", {{"n", n}, {"k", k}, {"args", s}},
                              w_multi(Partition::rectangle(n, k), samples[s]), w_rect_closed(k, samples[s]), clock));
      }
    }
  }
  return out;
}

Reports w_staircase_runner(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    for (const Partition& mu : cfg.partitions(n)) {
      Stopwatch clock;
      out.push_back(compare("w_staircase", {{"mu", to_json_value(mu)}}, w_staircase(mu, kX),
                            w_multi(mu, generic_staircase(n)), clock));
    }
  }
  return out;
}

Reports w_vanishing(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    const auto box = cfg.partitions(n);
    for (const Partition& mu : box)
      for (const Partition& lambda : box)
        if (!contains(lambda, mu)) out.push_back(w_vanishing_check(mu, lambda));
  }
  return out;
}

Reports w_symmetry(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 2; n <= cfg.max_n(); ++n) {
    const ArgumentVector xs = sample_args(n, cfg.seed)[1];
    for (const Partition& mu : cfg.partitions(n)) {
      Stopwatch clock;
      const RationalFn base = w_multi(mu, xs);
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      bool ok = true;
      std::string witness;
      while (ok && std::next_permutation(perm.begin(), perm.end())) {
        ArgumentVector ys;
        for (int i : perm) ys.push_back(xs[static_cast<std::size_t>(i)]);
        const RationalFn diff = w_multi(mu, ys) - base;
        if (!diff.is_zero()) {
          ok = false;
          witness = json(perm).dump() + ": " + diff.str();
        }
      }
      out.push_back(verdict("w_symmetry", {{"mu", to_json_value(mu)}}, ok, witness, clock));
    }
  }
  return out;
}

Reports duality(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    const auto samples = sample_args(n, cfg.seed);
    for (const Partition& mu : cfg.partitions(n)) {
      for (std::size_t s = 0; s < samples.size(); ++s) {
        IdentityReport r = duality_check(mu, samples[s]);
        r.index = args_index(mu, s);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

Reports w_bar_limit(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    const auto box = cfg.partitions(n);
    for (const Partition& mu : box) {
      for (const Partition& lambda : box) {
        for (bool invert : {false, true}) {
          Stopwatch clock;
          const json index = {{"mu", to_json_value(mu)}, {"lambda", to_json_value(lambda)}, {"invert", invert}};
          try {
            const RationalFn v = w_bar(mu, lambda, invert);
            const bool ok = !v.involves(Var::q) && !v.involves(Var::X);
            out.push_back(verdict("w_bar_limit", index, ok, "depends on q or X: " + v.str(), clock));
          } catch (const PoleError& e) {
            out.push_back(verdict("w_bar_limit", index, false, std::string("pole: ") + e.what(), clock));
          }
        }
      }
    }
  }
  return out;
}

Reports binomial_rect(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    for (const Partition& mu : cfg.partitions(n)) {
      Stopwatch clock;
      out.push_back(compare("binomial_rect", {{"mu", to_json_value(mu)}}, qt_binomial_rect(mu),
                            qt_binomial_generic(mu), clock));
    }
  }
  return out;
}

Reports gaussian(const SuiteConfig&) {
  Reports out;
  const RationalFn q = RationalFn::q();
  for (int m = 0; m <= 6; ++m) {
    for (int k = 0; k <= m; ++k) {
      Stopwatch clock;
      const RationalFn b = qt_binomial(Partition{m}, Partition{k});
      const RationalFn expect = poch(q, m) / (poch(q, k) * poch(q, m - k));
      const bool ok = !b.involves(Var::t) && b == expect;
      out.push_back(verdict("gaussian_reduction", {{"m", m}, {"k", k}}, ok, (b - expect).str(), clock));
    }
  }
  return out;
}

Reports binomial_theorem(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& lambda : cfg.partitions(n)) out.push_back(binomial_theorem_check(lambda));
  return out;
}

Reports bracket_binomial(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    const auto box = cfg.partitions(n);
    for (const Partition& mu : box) {
      IdentityReport r = bracket_binomial_relation_check(generic_staircase(n), mu);
      r.index = {{"z", "generic"}, {"mu", to_json_value(mu)}};
      out.push_back(std::move(r));
      for (const Partition& lambda : box) {
        if (!contains(lambda, mu)) continue;
        IdentityReport s = bracket_binomial_relation_check(q_pow_t_delta(lambda), mu);
        s.index = {{"z", to_json_value(lambda)}, {"mu", to_json_value(mu)}};
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

Reports qt_number_runner(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) {
    for (const Partition& mu : cfg.partitions(n)) {
      Stopwatch clock;
      out.push_back(compare("bracket_rect", {{"mu", to_json_value(mu)}}, bracket_rect(kX, mu),
                            qt_bracket_args(generic_staircase(n), 1, mu), clock));
    }
    for (const Partition& z : cfg.partitions(n)) {
      Stopwatch clock;
      out.push_back(compare("qt_number", {{"z", to_json_value(z)}},
                            qt_bracket(z.parts(), 1, Partition::rectangle(n, 1)), qt_number(z.parts()), clock));
    }
  }
  return out;
}

// Runs check(nu) for every nu in range.
Reports per_nu(const SuiteConfig& cfg, IdentityReport (*check)(const Partition&)) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& nu : cfg.partitions(n)) out.push_back(check(nu));
  return out;
}

Reports uv_limits(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& lambda : cfg.partitions(n))
      for (const Partition& mu : subpartitions(lambda)) out.push_back(uv_limit_check(lambda, mu));
  return out;
}

Reports zero_column(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& nu : cfg.partitions(n))
      if (nu[n - 1] != 0) out.push_back(zero_column_check(nu));
  return out;
}

Reports stirling_inversion(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n) out.push_back(stirling_inversion_check(Partition::rectangle(n, cfg.max_part(n))));
  return out;
}

Reports adjacent_weight(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& nu : cfg.partitions(n))
      for (const Partition& mu : subpartitions(nu))
        if (mu.weight() + 1 == nu.weight()) out.push_back(adjacent_weight_check(nu, mu));
  return out;
}

Reports classical(const SuiteConfig& cfg) {
  Reports out;
  const int top = std::max(cfg.max_part(1), 5);
  for (int m = 0; m <= top; ++m) {
    const auto first = falling_factorial(m);
    const auto second = stirling2(m);
    for (int k = 0; k <= m; ++k) {
      Stopwatch clock;
      const Partition nu{m}, mu{k};
      const auto reduce = [](const RationalFn& f) { return f.substitute_t_eq_q_pow(1).limit_q_to_1(0); };
      const RationalFn a = reduce(s1(nu, mu)), b = reduce(s2(nu, mu));
      const RationalFn ea(BigRational(first[static_cast<std::size_t>(k)]));
      const RationalFn eb(BigRational(second[static_cast<std::size_t>(k)]));
      out.push_back(verdict("classical_reduction", {{"m", m}, {"k", k}}, a == ea && b == eb,
                            "s1: " + (a - ea).str() + "; s2: " + (b - eb).str(), clock));
    }
  }
  return out;
}

Reports roots(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& nu : cfg.partitions(n))
      for (int j = 1; j <= n; ++j)
        for (int m = 0; m < nu[j - 1]; ++m) out.push_back(check_root_vanishing(nu, j, m));
  return out;
}

Reports row_sum(const SuiteConfig& cfg) {
  Reports out;
  for (int n = 1; n <= cfg.max_n(); ++n)
    for (const Partition& nu : cfg.partitions(n))
      if (nu.first() >= 2) out.push_back(check_s1_row_sum(nu));
  return out;
}

std::vector<RegisteredIdentity> build_registry() {
  using C = const SuiteConfig&;
  return {
      {"poch_negative_index", "(a;q)_{-m} = 1/(a q^{-m};q)_m", poch_negative},
      {"flip", "x^{|mu|}(1/x;q,t)_mu against (x;1/q,1/t)_mu", flip},
      {"w_rect", "w at a rectangle: closed form against the recursion", w_rect},
      {"w_staircase", "w_mu(x t^delta) closed form against the recursion", w_staircase_runner},
      {"w_vanishing", "w_mu(q^lambda t^delta) = 0 unless mu <= lambda", w_vanishing},
      {"w_symmetry", "w_mu invariant under argument permutations", w_symmetry},
      {"duality", "w-hat against the flipped w", duality},
      {"w_bar_limit", "q -> 1 limits of w exist and depend on t only", w_bar_limit},
      {"binomial_rect", "rectangular qt-binomial closed form", binomial_rect},
      {"gaussian_reduction", "n = 1 qt-binomial is the Gaussian polynomial", gaussian},
      {"binomial_theorem", "terminating qt-binomial theorem in X", binomial_theorem},
      {"bracket_binomial_relation", "qt-bracket in terms of the qt-binomial", bracket_binomial},
      {"qt_number", "bracket_rect and qt_number specializations of the qt-bracket", qt_number_runner},
      {"change_of_basis_u", "(X;1/q,1/t)_lambda = sum u X^{|mu|}", [](C c) { return per_nu(c, change_of_basis_u_check); }},
      {"change_of_basis_v", "X^{|lambda|} = sum v (X;1/q,1/t)_mu", [](C c) { return per_nu(c, change_of_basis_v_check); }},
      {"uv_inversion", "u and v are mutually inverse", [](C c) { return per_nu(c, uv_inversion_check); }},
      {"flip_h", "flip of the h product", [](C c) { return per_nu(c, h_flip_check); }},
      {"flip_g", "flip of (q t^{n-1})_mu", [](C c) { return per_nu(c, g_flip_check); }},
      {"uv_limits", "closed forms of the q -> 1 limits of flipped u and v", uv_limits},
      {"diagonal", "s1(nu,nu) = s2(nu,nu) = 1", [](C c) { return per_nu(c, diagonal_check); }},
      {"zero_column", "s1(nu,0) = s2(nu,0) = 0 for nu_n != 0", zero_column},
      {"stirling_inversion", "s1 s2 = s2 s1 = identity", stirling_inversion},
      {"expansion_s1", "bracket expansion in limit brackets via s1", [](C c) { return per_nu(c, expansion_s1_check); }},
      {"expansion_s2", "limit bracket expansion in brackets via s2", [](C c) { return per_nu(c, expansion_s2_check); }},
      {"classical_reduction", "n = 1, t = q, q -> 1 gives classical Stirling numbers", classical},
      {"x0_sums", "x = 0 sums of both kinds", [](C c) { return per_nu(c, check_x0_sums); }},
      {"root_vanishing", "s1 expansion vanishes at X = q^m t^{1-j}", roots},
      {"s1_row_sum", "X = q: weighted row sum of s1 vanishes", row_sum},
      {"adjacent_weight", "s1 = -s2 when |nu| - |mu| = 1", adjacent_weight},
  };
}

RationalFn first_kind_sum(const Partition& nu, bool plus_reading) {
  RationalFn sum;
  for (const Partition& mu : subpartitions(nu)) sum += s1_prefactor(nu, mu, plus_reading) * s1(nu, mu) / d_product(mu);
  return sum;
}

// ------------------------------------------------------------ expressions

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Splits at commas outside brackets.
std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

// ------------------------------------------------------------ x = 0, roots

RationalFn x0_sum_first_kind_residual(const Partition& nu, bool plus_reading) {
  return d_product(nu).inverse() - first_kind_sum(nu, plus_reading);
}

IdentityReport check_x0_sums(const Partition& nu) {
  Stopwatch clock;
  RationalFn second;
  for (const Partition& mu : subpartitions(nu)) second += s2_prefactor(nu, mu) * s2(nu, mu) / d_product(mu);
  const RationalFn lhs = d_product(nu).inverse();
  const RationalFn minus_residual = x0_sum_first_kind_residual(nu, false);
  const RationalFn plus_residual = x0_sum_first_kind_residual(nu, true);
  json readings = json::array();
  if (minus_residual.is_zero()) readings.push_back("minus");
  if (plus_residual.is_zero()) readings.push_back("plus");
  json index = nu_index(nu);
  index["first_kind_readings"] = readings;
  const RationalFn second_residual = lhs - second;
  return verdict("x0_sums", index, minus_residual.is_zero() && second_residual.is_zero(),
                 "first: " + minus_residual.str() + "; second: " + second_residual.str(), clock);
}

IdentityReport check_root_vanishing(const Partition& nu, int j, int m) {
  const int n = nu.n();
  if (j < 1 || j > n || m < 0 || m >= nu[j - 1]) {
    throw std::invalid_argument("root_vanishing needs 1 <= j <= n and 0 <= m < nu_j; got nu=" + nu.str() +
                                " j=" + std::to_string(j) + " m=" + std::to_string(m));
  }
  Stopwatch clock;
  const RationalFn x = RationalFn::monomial(m, 1 - j);
  RationalFn full;
  for (const Partition& mu : subpartitions(nu)) full += s1_prefactor(nu, mu) * s1(nu, mu) * limit_bracket(x, mu);
  std::string witness;
  if (!full.is_zero()) witness = "expansion: " + full.str();
  const bool restricted = m == 0 && nu[n - 1] != 0;
  json index = {{"nu", to_json_value(nu)}, {"j", j}, {"m", m}, {"restricted", restricted}};
  if (restricted) {
    RationalFn r1, r2;
    const auto zero_from = [](const Partition& mu, int first) {
      for (int i = first; i < mu.n(); ++i)
        if (mu[i] != 0) return false;
      return true;
    };
    for (const Partition& mu : subpartitions(nu)) {
      if (zero_from(mu, j - 1)) r1 += s1_prefactor(nu, mu) * s1(nu, mu) * limit_bracket(x, mu);
      if (zero_from(mu, n - j)) r2 += s2_prefactor(nu, mu) * s2(nu, mu) * bracket_rect(x, mu);
    }
    if (!r1.is_zero()) witness += (witness.empty() ? "" : "; ") + std::string("restricted s1: ") + r1.str();
    if (!r2.is_zero()) witness += (witness.empty() ? "" : "; ") + std::string("restricted s2: ") + r2.str();
  }
  return verdict("root_vanishing", index, witness.empty(), witness, clock);
}

IdentityReport check_s1_row_sum(const Partition& nu) {
  if (nu.first() < 2) throw std::invalid_argument("s1_row_sum needs nu_1 >= 2; got " + nu.str());
  Stopwatch clock;
  RationalFn sum;
  for (const Partition& mu : subpartitions(nu)) sum += s1_prefactor(nu, mu) * s1(nu, mu);
  return compare("s1_row_sum", nu_index(nu), sum, RationalFn(0), clock);
}

// ------------------------------------------------------------ suite

int SuiteConfig::max_n() const { return n_max.value_or(3); }

int SuiteConfig::max_part(int n) const {
  if (part_max) return *part_max;
  return n <= 2 ? 3 : n == 3 ? 2 : 1;
}

std::vector<Partition> SuiteConfig::partitions(int n) const { return partitions_in_box(n, max_part(n)); }

const std::vector<RegisteredIdentity>& identity_registry() {
  static const std::vector<RegisteredIdentity> registry = build_registry();
  return registry;
}

std::vector<IdentityReport> run_suite(const SuiteConfig& cfg) {
  if (cfg.max_n() < 1) throw std::invalid_argument("n_max must be at least 1");
  if (cfg.part_max && *cfg.part_max < 0) throw std::invalid_argument("part_max must be nonnegative");
  const auto& registry = identity_registry();
  std::set<std::string> wanted(cfg.identities.begin(), cfg.identities.end());
  for (const std::string& id : wanted) {
    const bool known = std::any_of(registry.begin(), registry.end(), [&](const auto& r) { return r.id == id; });
    if (!known) throw std::invalid_argument("unknown identity \"" + id + "\"");
  }
  std::vector<IdentityReport> out;
  for (const RegisteredIdentity& entry : registry) {
    if (!wanted.empty() && !wanted.count(entry.id)) continue;
    for (IdentityReport& r : entry.run(cfg)) out.push_back(std::move(r));
  }
  return out;
}

json suite_json(const SuiteConfig& cfg, const std::vector<IdentityReport>& reports, bool with_elapsed) {
  json ranges = json::array();
  for (int n = 1; n <= cfg.max_n(); ++n) ranges.push_back({{"n", n}, {"part_max", cfg.max_part(n)}});
  std::size_t passed = 0;
  json items = json::array();
  for (const IdentityReport& r : reports) {
    passed += r.passed ? 1 : 0;
    items.push_back(r.to_json(with_elapsed));
  }
  return {{"config", {{"ranges", ranges}, {"identities", cfg.identities}, {"seed", cfg.seed}}},
          {"summary", {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}},
          {"reports", items}};
}

// ------------------------------------------------------------ tables

TableKind parse_table_kind(const std::string& text) {
  if (text == "s1") return TableKind::s1;
  if (text == "s2") return TableKind::s2;
  if (text == "binomial") return TableKind::binomial;
  if (text == "bracket") return TableKind::bracket;
  throw std::invalid_argument("unknown table kind \"" + text + "\"");
}

TableFormat parse_table_format(const std::string& text) {
  if (text == "json") return TableFormat::json;
  if (text == "csv") return TableFormat::csv;
  throw std::invalid_argument("unknown table format \"" + text + "\"");
}

std::vector<TableEntry> table_entries(TableKind kind, const Partition& bound) {
  std::vector<TableEntry> out;
  for (const Partition& nu : subpartitions(bound)) {
    for (const Partition& mu : subpartitions(nu)) {
      RationalFn value;
      switch (kind) {
        case TableKind::s1: value = s1(nu, mu); break;
        case TableKind::s2: value = s2(nu, mu); break;
        case TableKind::binomial: value = qt_binomial(nu, mu); break;
        case TableKind::bracket: value = qt_bracket(nu.parts(), 1, mu); break;
      }
      out.push_back({nu, mu, std::move(value)});
    }
  }
  return out;
}

void emit_table(TableKind kind, const Partition& bound, TableFormat format, std::ostream& out) {
  const auto entries = table_entries(kind, bound);
  if (format == TableFormat::json) {
    using ordered = nlohmann::ordered_json;
    ordered items = ordered::array();
    for (const TableEntry& e : entries) {
      items.push_back({{"nu", e.nu.parts()}, {"mu", e.mu.parts()}, {"value", e.value.str()}});
    }
    out << ordered{{"n", bound.n()}, {"bound", bound.parts()}, {"entries", items}}.dump(2) << '\n';
    return;
  }
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  out << "nu,mu,value\n";
  for (const TableEntry& e : entries) {
    out << quote(e.nu.str()) << ',' << quote(e.mu.str()) << ',' << quote(e.value.str()) << '\n';
  }
}

// ------------------------------------------------------------ eval

RationalFn eval_expression(const std::string& expr) {
  const std::string text = trim(expr);
  const auto open = text.find('(');
  if (open != std::string::npos && text.back() == ')') {
    const std::string name = trim(text.substr(0, open));
    const bool identifier =
        !name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    if (identifier && name != "q" && name != "t" && name != "X" && name != "x") {
      const auto args = split_args(text.substr(open + 1, text.size() - open - 2));
      std::vector<Partition> p;
      for (const std::string& a : args) p.push_back(Partition::parse(a));
      const auto need = [&](std::size_t k) {
        if (p.size() != k) {
          throw std::invalid_argument(name + " takes " + std::to_string(k) + " partition argument(s)");
        }
      };
      if (name == "s1") return need(2), s1(p[0], p[1]);
      if (name == "s2") return need(2), s2(p[0], p[1]);
      if (name == "u") return need(2), u_matrix(p[0], p[1]);
      if (name == "v") return need(2), v_matrix(p[0], p[1]);
      if (name == "binomial") return need(2), qt_binomial(p[0].parts(), p[1]);
      if (name == "bracket") return need(2), qt_bracket(p[0].parts(), 1, p[1]);
      if (name == "qt_number") return need(1), qt_number(p[0].parts());
      if (name == "f") return need(1), f_factor(p[0]);
      if (name == "w") return need(2), w_at(p[0], p[1]);
      if (name == "w_hat") return need(2), w_hat_at(p[0], p[1]);
      if (name == "w_bar") return need(2), w_bar(p[0], p[1], false);
      throw std::invalid_argument("unknown function \"" + name + "\"");
    }
  }
  return RationalFn::parse(text);
}

BigRational eval_point(const std::string& expr, const BigRational& q0, const BigRational& t0,
                       const BigRational& x0) {
  return eval_expression(expr).evaluate(q0, t0, x0);
}

}  // namespace qts
