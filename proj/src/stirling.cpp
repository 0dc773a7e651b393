#include "qts/stirling.hpp"

#include "qts/memo.hpp"
#include "qts/pochhammer.hpp"
#include "qts/qtnumbers.hpp"
#include "qts/wfunctions.hpp"

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
using PairTable = MemoTable<PairKey, RationalFn, PairKeyHash>;

PairTable& u_cache() { static PairTable t; return t; }
PairTable& s1_cache() { static PairTable t; return t; }
PairTable& s2_cache() { static PairTable t; return t; }

RationalFn sign(int e) { return RationalFn(e % 2 == 0 ? 1 : -1); }
RationalFn one_minus(const RationalFn& a) { return RationalFn(1) - a; }

nlohmann::json pair_json(const Partition& a, const char* an, const Partition& b, const char* bn) {
  return {{an, to_json_value(a)}, {bn, to_json_value(b)}};
}

}  // namespace

RationalFn f_factor(const Partition& mu) {
  const int n = mu.n();
  RationalFn out(1);
  BigInt fact = factorial(static_cast<unsigned long>(mu[n - 1]));
  const RationalFn t = RationalFn::t();
  for (int i = 1; i < n; ++i) {
    const int d = mu[i - 1] - mu[i];
    out *= one_minus(t).pow(d) / one_minus(t.pow(n - i)).pow(mu[i - 1]);
    fact *= factorial(static_cast<unsigned long>(d));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      out *= (one_minus(t.pow(j - i)) / one_minus(t.pow(j - i - 1))).pow(mu[i - 1] - mu[j - 1]);
    }
  }
  return out / RationalFn(BigRational(fact));
}

RationalFn u_matrix(const Partition& lambda, const Partition& mu) {
  return u_cache().get_or_compute({lambda, mu}, [&] {
    if (!contains(lambda, mu)) return RationalFn(0);
    const int n = mu.n();
    return RationalFn::monomial(mu.weight(), 2 * mu.n_stat()) /
           poch_partition(RationalFn::monomial(1, n - 1), mu) * binomial_h_product(mu) *
           w_hat_at(mu, lambda);
  });
}

RationalFn v_matrix(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return RationalFn(0);
  return sign(mu.weight()) * RationalFn::monomial(mu.n_stat_conj(), -mu.n_stat()) *
         qt_binomial(lambda, mu);
}

RationalFn u_limit(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return RationalFn(0);
  const int n = mu.n(), w = mu.weight();
  return sign(w) * RationalFn::monomial(0, mu.n_stat() - (n - 1) * w) * w_bar(mu, lambda, false) *
         f_factor(mu);
}

RationalFn v_limit(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return RationalFn(0);
  const int n = mu.n(), w = mu.weight();
  return RationalFn::monomial(0, (n - 1) * w) * w_bar(mu, lambda, true) * f_factor(mu);
}

RationalFn u_limit_direct(const Partition& lambda, const Partition& mu) {
  return u_matrix(lambda, mu).flip_qt().limit_q_to_1(0);
}

RationalFn v_limit_direct(const Partition& lambda, const Partition& mu) {
  return v_matrix(lambda, mu).flip_qt().limit_q_to_1(0);
}

RationalFn stirling_denominator(const Partition& nu, const Partition& mu) {
  std::vector<int> e(static_cast<std::size_t>(nu.n()));
  for (int i = 0; i < nu.n(); ++i) e[static_cast<std::size_t>(i)] = nu[i] - mu[i];
  return q_t_power_product(e);
}

RationalFn s1(const Partition& nu, const Partition& mu) {
  return s1_cache().get_or_compute({nu, mu}, [&] {
    if (!contains(nu, mu)) return RationalFn(0);
    const int n = nu.n();
    RationalFn sum;
    for (const Partition& lambda : interval(mu, nu)) {
      sum += u_matrix(nu, lambda) * RationalFn::monomial(0, (1 - n) * lambda.weight()) *
             w_bar(mu, lambda, true);
    }
    return RationalFn::monomial(nu.n_stat_conj(), -2 * mu.n_stat() + 2 * (n - 1) * mu.weight()) /
           stirling_denominator(nu, mu) * f_factor(mu) * sum;
  });
}

RationalFn s2(const Partition& nu, const Partition& mu) {
  return s2_cache().get_or_compute({nu, mu}, [&] {
    if (!contains(nu, mu)) return RationalFn(0);
    const int n = nu.n();
    RationalFn sum;
    for (const Partition& lambda : interval(mu, nu)) {
      sum += sign(lambda.weight()) * RationalFn::monomial(0, lambda.n_stat()) *
             w_bar(lambda, nu, false) * f_factor(lambda) * v_matrix(lambda, mu);
    }
    return RationalFn::monomial(-mu.n_stat_conj(), 2 * nu.n_stat() + (1 - n) * nu.weight()) /
           stirling_denominator(nu, mu) * sum;
  });
}

RationalFn limit_bracket(const RationalFn& x, const Partition& mu) {
  const int n = mu.n();
  RationalFn out(1);
  for (int i = 0; i < n; ++i) {
    out *= (one_minus(x * RationalFn::monomial(0, n - 1 - i)) /
            one_minus(RationalFn::monomial(1, n - 1 - i)))
               .pow(mu[i]);
  }
  return out;
}

// ------------------------------------------------------------ V-algebra

PartitionMatrix::PartitionMatrix(Partition bound, const EntryFn& entry) : bound_(std::move(bound)) {
  for (const Partition& lambda : subpartitions(bound_)) {
    for (const Partition& mu : subpartitions(lambda)) {
      RationalFn v = entry(lambda, mu);
      if (!v.is_zero()) entries_.emplace(Index{lambda, mu}, std::move(v));
    }
  }
}

PartitionMatrix PartitionMatrix::identity(const Partition& bound) {
  return PartitionMatrix(bound, [](const Partition& a, const Partition& b) {
    return a == b ? RationalFn(1) : RationalFn(0);
  });
}

RationalFn PartitionMatrix::at(const Partition& lambda, const Partition& mu) const {
  auto it = entries_.find({lambda, mu});
  return it == entries_.end() ? RationalFn(0) : it->second;
}

PartitionMatrix valgebra_multiply(const PartitionMatrix& a, const PartitionMatrix& b) {
  if (a.bound() != b.bound()) {
    throw std::invalid_argument("V-algebra product of matrices with bounds " + a.bound().str() +
                                " and " + b.bound().str());
  }
  PartitionMatrix out;
  out.bound_ = a.bound();
  for (const Partition& lambda : subpartitions(a.bound())) {
    for (const Partition& mu : subpartitions(lambda)) {
      RationalFn sum;
      for (const Partition& nu : interval(mu, lambda)) sum += a.at(lambda, nu) * b.at(nu, mu);
      if (!sum.is_zero()) out.entries_.emplace(PartitionMatrix::Index{lambda, mu}, std::move(sum));
    }
  }
  return out;
}

// --------------------------------------------------------------- checks

IdentityReport uv_inversion_check(const Partition& nu) {
  Stopwatch clock;
  for (const Partition& mu : subpartitions(nu)) {
    RationalFn sum;
    for (const Partition& lambda : interval(mu, nu)) sum += u_matrix(nu, lambda) * v_matrix(lambda, mu);
    const RationalFn expect = nu == mu ? RationalFn(1) : RationalFn(0);
    if (sum != expect) {
      return verdict("uv_inversion", {{"nu", to_json_value(nu)}}, false,
                     "mu=" + mu.str() + ": " + (sum - expect).str(), clock);
    }
  }
  return verdict("uv_inversion", {{"nu", to_json_value(nu)}}, true, "", clock);
}

IdentityReport stirling_inversion_check(const Partition& bound) {
  Stopwatch clock;
  const PartitionMatrix m1(bound, [](const Partition& a, const Partition& b) { return s1(a, b); });
  const PartitionMatrix m2(bound, [](const Partition& a, const Partition& b) { return s2(a, b); });
  const PartitionMatrix id = PartitionMatrix::identity(bound);
  const nlohmann::json index = {{"bound", to_json_value(bound)}};
  for (const auto& [order, product] :
       {std::pair{"s1*s2", valgebra_multiply(m1, m2)}, std::pair{"s2*s1", valgebra_multiply(m2, m1)}}) {
    if (product == id) continue;
    for (const auto& [idx, v] : product.entries()) {
      const RationalFn err = v - id.at(idx.first, idx.second);
      if (!err.is_zero()) {
        return verdict("stirling_inversion", index, false,
                       std::string(order) + " at (" + idx.first.str() + "," + idx.second.str() +
                           "): " + err.str(),
                       clock);
      }
    }
    return verdict("stirling_inversion", index, false, std::string(order) + ": missing diagonal entry",
                   clock);
  }
  return verdict("stirling_inversion", index, true, "", clock);
}

IdentityReport change_of_basis_u_check(const Partition& lambda) {
  Stopwatch clock;
  RationalFn rhs;
  for (const Partition& mu : subpartitions(lambda)) {
    rhs += u_matrix(lambda, mu) * RationalFn::X().pow(mu.weight());
  }
  return compare("change_of_basis_u", {{"lambda", to_json_value(lambda)}},
                 poch_partition(RationalFn::X(), lambda, PochBase::flipped), rhs, clock);
}

IdentityReport change_of_basis_v_check(const Partition& lambda) {
  Stopwatch clock;
  RationalFn rhs;
  for (const Partition& mu : subpartitions(lambda)) {
    rhs += v_matrix(lambda, mu) * poch_partition(RationalFn::X(), mu, PochBase::flipped);
  }
  return compare("change_of_basis_v", {{"lambda", to_json_value(lambda)}},
                 RationalFn::X().pow(lambda.weight()), rhs, clock);
}

IdentityReport uv_limit_check(const Partition& lambda, const Partition& mu) {
  Stopwatch clock;
  const auto index = pair_json(lambda, "lambda", mu, "mu");
  try {
    const RationalFn du = u_limit(lambda, mu) - u_limit_direct(lambda, mu);
    const RationalFn dv = v_limit(lambda, mu) - v_limit_direct(lambda, mu);
    const bool ok = du.is_zero() && dv.is_zero();
    return verdict("uv_limits", index, ok, "u: " + du.str() + "; v: " + dv.str(), clock);
  } catch (const PoleError& e) {
    return verdict("uv_limits", index, false, std::string("pole: ") + e.what(), clock);
  }
}

IdentityReport h_flip_check(const Partition& mu) {
  Stopwatch clock;
  const int n = mu.n();
  const RationalFn h = binomial_h_product(mu);
  return compare("flip_h", {{"mu", to_json_value(mu)}}, h.flip_qt(),
                 RationalFn::monomial(0, 2 * mu.n_stat() - (n - 1) * mu.weight()) * h, clock);
}

IdentityReport g_flip_check(const Partition& mu) {
  Stopwatch clock;
  const int n = mu.n(), w = mu.weight();
  const RationalFn g = poch_partition(RationalFn::monomial(1, n - 1), mu);
  return compare("flip_g", {{"mu", to_json_value(mu)}}, g.flip_qt(),
                 sign(w) * RationalFn::monomial(-w - mu.n_stat_conj(), mu.n_stat() - (n - 1) * w) * g,
                 clock);
}

IdentityReport expansion_s1_check(const Partition& nu) {
  Stopwatch clock;
  const int n = nu.n();
  const RationalFn X = RationalFn::X();
  RationalFn rhs;
  for (const Partition& mu : subpartitions(nu)) {
    rhs += RationalFn::monomial(-nu.n_stat_conj(), 2 * mu.n_stat() - (n - 1) * mu.weight()) *
           s1(nu, mu) * limit_bracket(X, mu);
  }
  return compare("expansion_s1", {{"nu", to_json_value(nu)}}, bracket_rect(X, nu), rhs, clock);
}

IdentityReport expansion_s2_check(const Partition& nu) {
  Stopwatch clock;
  const int n = nu.n();
  const RationalFn X = RationalFn::X();
  RationalFn rhs;
  const RationalFn pref = RationalFn::monomial(0, -2 * nu.n_stat() + (n - 1) * nu.weight());
  for (const Partition& mu : subpartitions(nu)) {
    rhs += RationalFn::monomial(mu.n_stat_conj(), 0) * pref * s2(nu, mu) * bracket_rect(X, mu);
  }
  return compare("expansion_s2", {{"nu", to_json_value(nu)}}, limit_bracket(X, nu), rhs, clock);
}

IdentityReport diagonal_check(const Partition& nu) {
  Stopwatch clock;
  const RationalFn a = s1(nu, nu), b = s2(nu, nu);
  return verdict("diagonal", {{"nu", to_json_value(nu)}}, a.is_one() && b.is_one(),
                 "s1=" + a.str() + "; s2=" + b.str(), clock);
}

IdentityReport zero_column_check(const Partition& nu) {
  Stopwatch clock;
  const Partition zero = Partition::zero(nu.n());
  const RationalFn a = s1(nu, zero), b = s2(nu, zero);
  return verdict("zero_column", {{"nu", to_json_value(nu)}}, a.is_zero() && b.is_zero(),
                 "s1=" + a.str() + "; s2=" + b.str(), clock);
}

IdentityReport adjacent_weight_check(const Partition& nu, const Partition& mu) {
  Stopwatch clock;
  return compare("adjacent_weight", pair_json(nu, "nu", mu, "mu"), s1(nu, mu), -s2(nu, mu), clock);
}

void clear_stirling_caches() {
  u_cache().clear();
  s1_cache().clear();
  s2_cache().clear();
}

}  // namespace qts
