#include "qts/gcd.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace qts {
namespace {

IntPolynomial normalize_sign(IntPolynomial p) {
  if (!p.is_zero() && p.leading_coeff() < 0) return -p;
  return p;
}

BigInt max_norm(const IntPolynomial& p) {
  BigInt m = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

IntPolynomial divide_ground(const IntPolynomial& p, const BigInt& d) {
  std::vector<IntPolynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.emplace_back(m, std::move(qc));
  }
  return IntPolynomial::from_terms(std::move(out));
}

// Smallest exponent of each variable over all terms.
Monomial monomial_content(const IntPolynomial& p) {
  Monomial g = p.terms().front().first;
  for (const auto& [m, c] : p.terms()) g = Monomial::gcd(g, m);
  return g;
}

IntPolynomial divide_monomial(const IntPolynomial& p, Monomial m) {
  if (m.is_one()) return p;
  std::vector<IntPolynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [mt, c] : p.terms()) out.emplace_back(mt / m, c);
  // Dividing by a common monomial preserves the order, but from_terms is cheap
  // enough and keeps the invariant obvious.
  return IntPolynomial::from_terms(std::move(out));
}

std::vector<Var> active_vars(const IntPolynomial& f, const IntPolynomial& g,
                             const std::vector<Var>& vars) {
  std::vector<Var> out;
  for (Var v : vars) {
    if (f.involves(v) || g.involves(v)) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------- heuristic

struct HeuResult {
  IntPolynomial h, cff, cfg;
};

constexpr int kHeuristicAttempts = 6;

IntPolynomial interpolate(IntPolynomial h, const BigInt& xi, Var v) {
  const BigInt half = xi / 2;
  std::vector<IntPolynomial::Term> out;
  int power = 0;
  while (!h.is_zero()) {
    std::vector<IntPolynomial::Term> digit;
    for (const auto& [m, c] : h.terms()) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.emplace_back(m, std::move(r));
    }
    IntPolynomial g = IntPolynomial::from_terms(digit);
    for (auto& [m, c] : digit) out.emplace_back(m * Monomial::of(v, power), std::move(c));
    h = divide_ground(h - g, xi);
    ++power;
  }
  return normalize_sign(IntPolynomial::from_terms(std::move(out)));
}

std::optional<HeuResult> heu(const IntPolynomial& f0, const IntPolynomial& g0,
                             const std::vector<Var>& vars_in) {
  if (f0.is_zero() && g0.is_zero()) return HeuResult{{}, {}, {}};
  if (f0.is_zero()) {
    IntPolynomial h = normalize_sign(g0);
    return HeuResult{h, {}, IntPolynomial(h == g0 ? 1 : -1)};
  }
  if (g0.is_zero()) {
    IntPolynomial h = normalize_sign(f0);
    return HeuResult{h, IntPolynomial(h == f0 ? 1 : -1), {}};
  }
  const std::vector<Var> vars = active_vars(f0, g0, vars_in);
  if (vars.empty()) {
    BigInt a = f0.constant_coeff(), b = g0.constant_coeff();
    BigInt h = gcd(a, b);
    return HeuResult{IntPolynomial(h), IntPolynomial(BigInt(a / h)), IntPolynomial(BigInt(b / h))};
  }

  // Each input is made primitive on its own: leftover content in one of
  // them can share factors with xi and let a cofactor route accept a
  // proper divisor of the gcd.
  const BigInt cf = content(f0), cg = content(g0);
  const BigInt ground = gcd(cf, cg);
  const IntPolynomial f = divide_ground(f0, cf);
  const IntPolynomial g = divide_ground(g0, cg);
  const BigInt f_extra = cf / ground, g_extra = cg / ground;

  const BigInt f_norm = max_norm(f), g_norm = max_norm(g);
  // The trial-division test certifies the gcd only when xi exceeds
  // 1 + 2 min(|f|, |g|), so no square-root cap is applied here.
  BigInt xi = 2 * (f_norm < g_norm ? f_norm : g_norm) + 29;
  BigInt f_ratio = f_norm / abs(f.leading_coeff());
  BigInt g_ratio = g_norm / abs(g.leading_coeff());
  BigInt alt = 2 * (f_ratio < g_ratio ? f_ratio : g_ratio) + 2;
  if (alt > xi) xi = alt;

  const Var v = vars.front();
  const std::vector<Var> rest(vars.begin() + 1, vars.end());

  auto accept = [&](IntPolynomial h) -> std::optional<HeuResult> {
    h = normalize_sign(primitive_part(h));
    if (h.is_zero()) return std::nullopt;
    auto cff = exact_quotient(f, h);
    if (!cff) return std::nullopt;
    auto cfg = exact_quotient(g, h);
    if (!cfg) return std::nullopt;
    return HeuResult{h.scaled(ground), cff->scaled(f_extra), cfg->scaled(g_extra)};
  };

  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    IntPolynomial ff = f.evaluate_var(v, xi);
    IntPolynomial gg = g.evaluate_var(v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      if (auto sub = heu(ff, gg, rest)) {
        if (auto r = accept(interpolate(sub->h, xi, v))) return r;
        IntPolynomial cff = interpolate(sub->cff, xi, v);
        if (!cff.is_zero()) {
          if (auto h = exact_quotient(f, cff)) {
            if (auto r = accept(*h)) return r;
          }
        }
        IntPolynomial cfg = interpolate(sub->cfg, xi, v);
        if (!cfg.is_zero()) {
          if (auto h = exact_quotient(g, cfg)) {
            if (auto r = accept(*h)) return r;
          }
        }
      }
    }
    BigInt s = sqrt(BigInt(sqrt(xi)));
    xi = 73794 * xi * s / 27011;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------- PRS

IntPolynomial prs(const IntPolynomial& f, const IntPolynomial& g, const std::vector<Var>& vars);

// Leading coefficient of p viewed as a polynomial in v.
IntPolynomial lc_in(const IntPolynomial& p, Var v, int* degree) {
  auto coeffs = p.coefficients_in(v);
  *degree = coeffs.rbegin()->first;
  return coeffs.rbegin()->second;
}

IntPolynomial content_in(const IntPolynomial& p, Var v, const std::vector<Var>& rest) {
  IntPolynomial c;
  for (const auto& [d, coeff] : p.coefficients_in(v)) {
    c = prs(c, coeff, rest);
    if (c.is_one()) break;
  }
  return c;
}

IntPolynomial primitive_in(const IntPolynomial& p, Var v, const std::vector<Var>& rest) {
  if (p.is_zero()) return p;
  IntPolynomial c = content_in(p, v, rest);
  if (p.leading_coeff() < 0) c = -c;
  return divide_exact(p, c);
}

IntPolynomial pseudo_remainder(IntPolynomial r, const IntPolynomial& b, Var v) {
  int db = 0;
  const IntPolynomial lcb = lc_in(b, v, &db);
  while (!r.is_zero()) {
    int dr = 0;
    IntPolynomial lcr = lc_in(r, v, &dr);
    if (dr < db) break;
    r = lcb * r - (lcr * b).times_term(Monomial::of(v, dr - db), BigInt(1));
  }
  return r;
}

IntPolynomial prs(const IntPolynomial& f, const IntPolynomial& g, const std::vector<Var>& vars_in) {
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  const std::vector<Var> vars = active_vars(f, g, vars_in);
  if (vars.empty()) return IntPolynomial(BigInt(gcd(f.constant_coeff(), g.constant_coeff())));

  const Var v = vars.front();
  const std::vector<Var> rest(vars.begin() + 1, vars.end());

  const IntPolynomial cf = content_in(f, v, rest);
  const IntPolynomial cg = content_in(g, v, rest);
  const IntPolynomial c = prs(cf, cg, rest);

  IntPolynomial a = divide_exact(f, cf);
  IntPolynomial b = divide_exact(g, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);

  IntPolynomial result;
  while (true) {
    if (b.degree(v) == 0) {
      result = IntPolynomial(1);
      break;
    }
    IntPolynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      result = b;
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v, rest);
  }
  return normalize_sign(primitive_in(result, v, rest) * c);
}

}  // namespace

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.leading_coeff() < 0) c = -c;
  if (c == 1) return p;
  return divide_ground(p, c);
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  for (Var v : kAllVars) {
    if (b.degree(v) > a.degree(v)) return std::nullopt;
  }
  if (b.is_monomial()) {
    const auto& [mb, cb] = b.terms().front();
    std::vector<IntPolynomial::Term> out;
    out.reserve(a.size());
    for (const auto& [ma, ca] : a.terms()) {
      if (!mb.divides(ma) || !mpz_divisible_p(ca.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
      BigInt qc;
      mpz_divexact(qc.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.emplace_back(ma / mb, std::move(qc));
    }
    return IntPolynomial::from_terms(std::move(out));
  }

  const auto& [lead_m, lead_c] = b.terms().front();
  std::map<Monomial, BigInt, std::greater<>> rem;
  for (const auto& [m, c] : a.terms()) rem.emplace(m, c);
  std::vector<IntPolynomial::Term> quotient;
  BigInt qc, prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead_m.divides(top->first)) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    const Monomial qm = top->first / lead_m;
    rem.erase(top);
    for (auto it = b.terms().begin() + 1; it != b.terms().end(); ++it) {
      prod = qc * it->second;
      auto [pos, inserted] = rem.try_emplace(qm * it->first);
      pos->second -= prod;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.emplace_back(qm, qc);
  }
  return IntPolynomial::from_terms(std::move(quotient));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return std::move(*q);
}

std::optional<IntPolynomial> gcd_heuristic(const IntPolynomial& a, const IntPolynomial& b) {
  const std::vector<Var> vars(kAllVars.begin(), kAllVars.end());
  auto r = heu(a, b, vars);
  if (!r) return std::nullopt;
  return normalize_sign(std::move(r->h));
}

IntPolynomial gcd_prs(const IntPolynomial& a, const IntPolynomial& b) {
  const std::vector<Var> vars(kAllVars.begin(), kAllVars.end());
  return prs(a, b, vars);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const BigInt ground = gcd(content(a), content(b));
  if (a.is_constant() || b.is_constant()) return IntPolynomial(ground);
  const Monomial mono = Monomial::gcd(monomial_content(a), monomial_content(b));
  if (a.is_monomial() || b.is_monomial()) return IntPolynomial::monomial(mono, ground);

  IntPolynomial ra = divide_monomial(a, monomial_content(a));
  IntPolynomial rb = divide_monomial(b, monomial_content(b));
  IntPolynomial core;
  if (ra.is_constant() || rb.is_constant()) {
    core = IntPolynomial(1);
  } else if (ra == rb || ra == -rb) {
    core = primitive_part(ra);
  } else if (auto h = gcd_heuristic(ra, rb)) {
    core = primitive_part(*h);
  } else {
    core = primitive_part(gcd_prs(ra, rb));
  }
  return normalize_sign(core.times_term(mono, ground));
}

std::pair<IntPolynomial, BigInt> clear_denominators(const Polynomial& p) {
  BigInt den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<IntPolynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    BigInt scaled = c.get_num() * (den / c.get_den());
    out.emplace_back(m, std::move(scaled));
  }
  return {IntPolynomial::from_terms(std::move(out)), den};
}

Polynomial to_rational(const IntPolynomial& p) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.emplace_back(m, BigRational(c));
  return Polynomial::from_terms(std::move(out));
}

}  // namespace qts
