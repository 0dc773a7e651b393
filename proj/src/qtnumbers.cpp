#include "qts/qtnumbers.hpp"

#include "qts/memo.hpp"
#include "qts/pochhammer.hpp"

namespace qts {
namespace {

struct PairKey {
  Partition a, b;
  bool operator==(const PairKey&) const = default;
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::size_t h = std::hash<Partition>{}(k.a);
    hash_combine(h, std::hash<Partition>{}(k.b));
    return h;
  }
};

MemoTable<PairKey, RationalFn, PairKeyHash>& binomial_cache() {
  static MemoTable<PairKey, RationalFn, PairKeyHash> table;
  return table;
}

RationalFn binomial_prefactor(const Partition& mu) {
  const int n = mu.n(), w = mu.weight();
  return RationalFn::monomial(w, 2 * mu.n_stat() + (1 - n) * w) /
         poch_partition(RationalFn::monomial(1, n - 1), mu) * binomial_h_product(mu);
}

}  // namespace

RationalFn binomial_h_product(const Partition& mu) {
  RationalFn out(1);
  for (int i = 1; i <= mu.n(); ++i) {
    for (int j = i + 1; j <= mu.n(); ++j) {
      const int d = mu[i - 1] - mu[j - 1];
      out *= poch(RationalFn::monomial(1, j - i), d) / poch(RationalFn::monomial(1, j - i - 1), d);
    }
  }
  return out;
}

RationalFn bracket_t_product(const Partition& mu) {
  RationalFn out(1);
  for (int i = 1; i <= mu.n(); ++i) {
    for (int j = i + 1; j <= mu.n(); ++j) {
      const int d = mu[i - 1] - mu[j - 1];
      out *= poch(RationalFn::monomial(0, j - i), d) / poch(RationalFn::monomial(0, j - i + 1), d);
    }
  }
  return out;
}

RationalFn q_t_power_product(const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  RationalFn out(1);
  for (int i = 0; i < n; ++i) {
    out *= (RationalFn(1) - RationalFn::monomial(1, n - 1 - i)).pow(exponents[static_cast<std::size_t>(i)]);
  }
  return out;
}

RationalFn qt_binomial_args(const ArgumentVector& qz_tdelta, const Partition& mu) {
  return binomial_prefactor(mu) * w_multi(mu, qz_tdelta);
}

RationalFn qt_binomial(const std::vector<int>& z, const Partition& mu) {
  return qt_binomial_args(q_pow_t_delta(z), mu);
}

RationalFn qt_binomial(const Partition& lambda, const Partition& mu) {
  return binomial_cache().get_or_compute({lambda, mu}, [&] {
    if (!contains(lambda, mu)) return RationalFn(0);
    return binomial_prefactor(mu) * w_at(mu, lambda);
  });
}

RationalFn qt_binomial_generic(const Partition& mu) {
  return qt_binomial_args(generic_staircase(mu.n()), mu);
}

RationalFn qt_binomial_rect(const Partition& mu) {
  const int n = mu.n(), w = mu.weight();
  RationalFn out = RationalFn::monomial(0, 2 * mu.n_stat() + (1 - n) * w) /
                   poch_partition(RationalFn::monomial(1, n - 1), mu) *
                   poch_partition(RationalFn::X(), mu, PochBase::flipped);
  return out * binomial_h_product(mu) / bracket_t_product(mu);
}

IdentityReport binomial_theorem_check(const Partition& lambda) {
  Stopwatch clock;
  const RationalFn lhs = poch_partition(RationalFn::X(), lambda);
  RationalFn rhs;
  for (const Partition& mu : subpartitions(lambda)) {
    const int w = mu.weight();
    rhs += RationalFn::monomial(mu.n_stat_conj(), -mu.n_stat(), w, w % 2 ? -1 : 1) *
           qt_binomial(lambda, mu);
  }
  return compare("binomial_theorem", {{"lambda", to_json_value(lambda)}}, lhs, rhs, clock);
}

RationalFn qt_bracket_args(const ArgumentVector& qz_tdelta, const RationalFn& s, const Partition& mu) {
  std::vector<int> neg(mu.parts());
  for (int& e : neg) e = -e;
  return RationalFn::monomial(mu.weight(), 0) * q_t_power_product(neg) * bracket_t_product(mu) *
         w_multi(mu, scaled(qz_tdelta, s));
}

RationalFn qt_bracket(const std::vector<int>& z, const RationalFn& s, const Partition& mu) {
  return qt_bracket_args(q_pow_t_delta(z), s, mu);
}

RationalFn qt_number(const std::vector<int>& z) {
  const int n = static_cast<int>(z.size());
  RationalFn out(1);
  for (int i = 0; i < n; ++i) {
    out *= (RationalFn(1) - RationalFn::monomial(z[static_cast<std::size_t>(i)], n - 1 - i)) /
           (RationalFn(1) - RationalFn::monomial(1, n - 1 - i));
  }
  return out;
}

RationalFn bracket_rect(const RationalFn& x, const Partition& mu) {
  std::vector<int> neg(mu.parts());
  for (int& e : neg) e = -e;
  RationalFn out = q_t_power_product(neg);
  for (int i = 0; i < mu.n(); ++i) out *= poch(x * RationalFn::monomial(0, i), mu[i], PochBase::flipped);
  return out;
}

IdentityReport bracket_binomial_relation_check(const ArgumentVector& qz_tdelta, const Partition& mu) {
  Stopwatch clock;
  const int n = mu.n(), w = mu.weight();
  std::vector<int> neg(mu.parts());
  for (int& e : neg) e = -e;
  const RationalFn lhs = qt_bracket_args(qz_tdelta, RationalFn(1), mu);
  const RationalFn rhs = RationalFn::monomial(0, -2 * mu.n_stat() - (1 - n) * w) *
                         poch_partition(RationalFn::monomial(1, n - 1), mu) * q_t_power_product(neg) *
                         bracket_t_product(mu) / binomial_h_product(mu) *
                         qt_binomial_args(qz_tdelta, mu);
  nlohmann::json args = nlohmann::json::array();
  for (const auto& a : qz_tdelta) args.push_back(a.str());
  return compare("bracket_binomial_relation", {{"mu", to_json_value(mu)}, {"z", args}}, lhs, rhs, clock);
}

}  // namespace qts
