#include "qts/wfunctions.hpp"

#include "qts/memo.hpp"
#include "qts/pochhammer.hpp"

namespace qts {
namespace {

struct SkewKey {
  Partition lambda, mu;
  bool hat;
  ArgumentVector xs;
  bool operator==(const SkewKey&) const = default;
};

struct SkewKeyHash {
  std::size_t operator()(const SkewKey& k) const {
    std::size_t h = std::hash<Partition>{}(k.lambda);
    hash_combine(h, std::hash<Partition>{}(k.mu));
    hash_combine(h, k.hat);
    for (const auto& x : k.xs) hash_combine(h, x.hash());
    return h;
  }
};

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

MemoTable<SkewKey, RationalFn, SkewKeyHash>& skew_cache() {
  static MemoTable<SkewKey, RationalFn, SkewKeyHash> table;
  return table;
}
MemoTable<PairKey, RationalFn, PairKeyHash>& h_cache() {
  static MemoTable<PairKey, RationalFn, PairKeyHash> table;
  return table;
}
MemoTable<PairKey, RationalFn, PairKeyHash>& wbar_cache(bool invert) {
  static MemoTable<PairKey, RationalFn, PairKeyHash> plain, inverted;
  return invert ? inverted : plain;
}

// prod_i (x^{-1} t^{1-i} q^{mu_i}; q)_{lambda_i - mu_i}, the telescoped form
// of (1/x)_lambda / (1/x)_mu.  The quotient form would produce 0/0 at
// specialized x.
RationalFn poch_ratio(const RationalFn& xinv, const Partition& lambda, const Partition& mu) {
  RationalFn out(1);
  for (int i = 0; i < lambda.n(); ++i) {
    out *= poch(xinv * RationalFn::monomial(mu[i], -i), lambda[i] - mu[i]);
  }
  return out;
}

RationalFn skew_multi(const Partition& lambda, const Partition& mu, const ArgumentVector& xs,
                      std::size_t first, bool hat) {
  const std::size_t count = xs.size() - first;
  if (count == 0) return lambda == mu ? RationalFn(1) : RationalFn(0);
  if (!contains(lambda, mu)) return RationalFn(0);
  if (lambda == mu) return RationalFn(1);

  SkewKey key{lambda, mu, hat, ArgumentVector(xs.begin() + static_cast<long>(first), xs.end())};
  return skew_cache().get_or_compute(key, [&] {
    const int ell = static_cast<int>(count) - 1;
    const RationalFn y = xs[first] * RationalFn::monomial(0, -ell);
    RationalFn sum;
    for (const Partition& nu : horizontal_strip_predecessors(lambda)) {
      if (!contains(nu, mu)) continue;
      RationalFn inner = skew_multi(nu, mu, xs, first + 1, hat);
      if (inner.is_zero()) continue;
      RationalFn term = hat ? w_hat_skew_single(lambda, nu, y) : w_skew_single(lambda, nu, y);
      if (!hat) term *= RationalFn::monomial(0, ell * (lambda.weight() - nu.weight()));
      sum += term * inner;
    }
    return sum;
  });
}

void require_length(const Partition& mu, const ArgumentVector& xs) {
  if (static_cast<int>(xs.size()) != mu.n()) {
    throw std::invalid_argument("argument vector length " + std::to_string(xs.size()) +
                                " does not match ambient n of " + mu.str());
  }
}

}  // namespace

RationalFn exponent_pair(int kq, int kt) { return RationalFn::monomial(kq, kt); }

RationalFn generic_x(int kt) { return RationalFn::monomial(0, kt, 1); }

ArgumentVector q_pow_t_delta(const std::vector<int>& z) {
  const int n = static_cast<int>(z.size());
  ArgumentVector out;
  for (int i = 0; i < n; ++i) out.push_back(exponent_pair(z[static_cast<std::size_t>(i)], n - 1 - i));
  return out;
}

ArgumentVector generic_staircase(int n) {
  ArgumentVector out;
  for (int i = 0; i < n; ++i) out.push_back(generic_x(n - 1 - i));
  return out;
}

ArgumentVector scaled(const ArgumentVector& xs, const RationalFn& s) {
  ArgumentVector out;
  for (const auto& x : xs) out.push_back(x * s);
  return out;
}

RationalFn h_factor(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu)) {
    throw NotAStripError(lambda.str() + "/" + mu.str() + " is not a horizontal strip");
  }
  return h_cache().get_or_compute({lambda, mu}, [&] {
    RationalFn num(1), den(1);
    const int n = lambda.n();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const int mi = mu[i - 1], li = lambda[i - 1], mj1 = mu[j - 2];
        const int m = mj1 - lambda[j - 1];
        if (m == 0) continue;
        num *= poch(RationalFn::monomial(mi - mj1, j - i), m);
        den *= poch(RationalFn::monomial(mi - mj1 + 1, j - i - 1), m);
        num *= poch(RationalFn::monomial(li - mj1 + 1, j - i - 1), m);
        den *= poch(RationalFn::monomial(li - mj1, j - i), m);
      }
    }
    return num / den;
  });
}

RationalFn w_skew_single(const Partition& lambda, const Partition& mu, const RationalFn& x) {
  if (!is_horizontal_strip(lambda, mu)) return RationalFn(0);
  const int dw = mu.weight() - lambda.weight();
  RationalFn pref = (RationalFn(-1) * RationalFn::q() / x).pow(dw) *
                    RationalFn::monomial(mu.n_stat_conj() - lambda.n_stat_conj(), 0);
  return pref * h_factor(lambda, mu) * poch_ratio(x.inverse(), lambda, mu);
}

RationalFn w_hat_skew_single(const Partition& lambda, const Partition& mu, const RationalFn& x) {
  if (!is_horizontal_strip(lambda, mu)) return RationalFn(0);
  RationalFn pref = RationalFn::monomial(0, -lambda.n_stat() + mu.weight() + mu.n_stat());
  return pref * h_factor(lambda, mu) * poch_ratio(x.inverse(), lambda, mu);
}

RationalFn w_skew_multi(const Partition& lambda, const Partition& mu, const ArgumentVector& xs) {
  return skew_multi(lambda, mu, xs, 0, false);
}

RationalFn w_hat_skew_multi(const Partition& lambda, const Partition& mu, const ArgumentVector& xs) {
  return skew_multi(lambda, mu, xs, 0, true);
}

RationalFn w_multi(const Partition& mu, const ArgumentVector& xs) {
  require_length(mu, xs);
  return w_skew_multi(mu, Partition::zero(mu.n()), xs);
}

RationalFn w_hat_multi(const Partition& mu, const ArgumentVector& xs) {
  require_length(mu, xs);
  return w_hat_skew_multi(mu, Partition::zero(mu.n()), xs);
}

RationalFn w_at(const Partition& mu, const Partition& lambda) {
  return w_multi(mu, q_pow_t_delta(lambda));
}

RationalFn w_hat_at(const Partition& mu, const Partition& lambda) {
  return w_hat_multi(mu, q_pow_t_delta(lambda));
}

RationalFn w_staircase(const Partition& mu, const RationalFn& x) {
  RationalFn out = RationalFn::monomial(-mu.weight(), 0) * poch_partition(x, mu, PochBase::flipped);
  const int n = mu.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int d = mu[i - 1] - mu[j - 1];
      out *= poch(RationalFn::monomial(0, j - i + 1), d) / poch(RationalFn::monomial(0, j - i), d);
    }
  }
  return out;
}

RationalFn w_rect_closed(int k, const ArgumentVector& xs) {
  const int n = static_cast<int>(xs.size());
  RationalFn out = RationalFn::monomial(-n * k, 0);
  for (const auto& x : xs) out *= poch(RationalFn::monomial(1 - k, 0) * x, k);
  return out;
}

IdentityReport w_vanishing_check(const Partition& mu, const Partition& lambda) {
  Stopwatch clock;
  return compare("w_vanishing", {{"mu", to_json_value(mu)}, {"lambda", to_json_value(lambda)}},
                 w_at(mu, lambda), RationalFn(0), clock);
}

RationalFn duality_rhs(const Partition& mu, const ArgumentVector& xs, bool variant_exponent) {
  const int n = mu.n(), w = mu.weight();
  ArgumentVector flipped_inverse;
  for (const auto& x : xs) flipped_inverse.push_back(x.inverse().flip_qt());
  const RationalFn w_flipped = w_multi(mu, flipped_inverse).flip_qt();
  const int t_exp = -2 * mu.n_stat() + (variant_exponent ? -(n - 1) * w : (n - 1) * w);
  return RationalFn::monomial(-w, t_exp) * w_flipped;
}

namespace {

nlohmann::json args_json(const ArgumentVector& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

IdentityReport duality_check(const Partition& mu, const ArgumentVector& xs) {
  Stopwatch clock;
  return compare("duality", {{"mu", to_json_value(mu)}, {"x", args_json(xs)}}, w_hat_multi(mu, xs),
                 duality_rhs(mu, xs, false), clock);
}

IdentityReport duality_variant_exponent_check(const Partition& mu, const ArgumentVector& xs) {
  Stopwatch clock;
  return compare("duality_variant_exponent", {{"mu", to_json_value(mu)}, {"x", args_json(xs)}},
                 w_hat_multi(mu, xs), duality_rhs(mu, xs, true), clock);
}

RationalFn w_bar(const Partition& mu, const Partition& lambda, bool invert) {
  if (mu.n() != lambda.n()) throw AmbientMismatch("w_bar: " + mu.str() + " vs " + lambda.str());
  return wbar_cache(invert).get_or_compute({mu, lambda}, [&] {
    RationalFn w = w_at(mu, lambda);
    if (invert) w = w.flip_qt();
    return w.limit_q_to_1(mu.first());
  });
}

void clear_w_caches() {
  skew_cache().clear();
  h_cache().clear();
  wbar_cache(false).clear();
  wbar_cache(true).clear();
}

}  // namespace qts
