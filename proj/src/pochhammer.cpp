#include "qts/pochhammer.hpp"

namespace qts {
namespace {

RationalFn base_q(PochBase base) {
  return base == PochBase::standard ? RationalFn::q() : RationalFn::monomial(-1, 0);
}
RationalFn base_t(PochBase base) {
  return base == PochBase::standard ? RationalFn::t() : RationalFn::monomial(0, -1);
}

}  // namespace

RationalFn poch(const RationalFn& a, int m, PochBase base) {
  const RationalFn b = base_q(base);
  if (m >= 0) {
    RationalFn out(1), shift = a;
    for (int k = 0; k < m; ++k) {
      out *= RationalFn(1) - shift;
      shift *= b;
    }
    return out;
  }
  RationalFn den(1), shift = a * b.pow(m);
  for (int k = 0; k < -m; ++k) {
    RationalFn factor = RationalFn(1) - shift;
    if (factor.is_zero()) {
      throw PoleError("poch(" + a.str() + ", " + std::to_string(m) + ") has a vanishing factor");
    }
    den *= factor;
    shift *= b;
  }
  return den.inverse();
}

RationalFn poch_partition(const RationalFn& a, const Partition& lambda, PochBase base) {
  const RationalFn tinv = base_t(base).inverse();
  RationalFn out(1), arg = a;
  for (int i = 0; i < lambda.n(); ++i) {
    out *= poch(arg, lambda[i], base);
    arg *= tinv;
  }
  return out;
}

RationalFn poch_multi(const std::vector<RationalFn>& args, const Partition& lambda, PochBase base) {
  RationalFn out(1);
  for (const RationalFn& a : args) out *= poch_partition(a, lambda, base);
  return out;
}

IdentityReport flip_poch_identity_check(const RationalFn& x, const Partition& mu) {
  Stopwatch clock;
  const int w = mu.weight();
  RationalFn lhs = x.pow(w) * poch_partition(x.inverse(), mu);
  RationalFn rhs = RationalFn::monomial(mu.n_stat_conj(), -mu.n_stat(), 0, w % 2 ? -1 : 1) *
                   poch_partition(x, mu, PochBase::flipped);
  return compare("flip", {{"mu", to_json_value(mu)}, {"x", x.str()}}, lhs, rhs, clock);
}

}  // namespace qts
