// Factorization over Q: squarefree split, then Zassenhaus on each part
// (factor mod a small prime, Hensel-lift, recombine).

#include <algorithm>

#include "conicrank/errors.hpp"
#include "conicrank/qpoly.hpp"
#include "modp.hpp"

namespace conicrank {

namespace {

using ZPoly = std::vector<Integer>;  // lowest degree first

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = mod_nonneg(c, m);
  ztrim(r);
  return r;
}

ZPoly from_modp(const modp::Poly& f) {
  ZPoly r;
  for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

UniPoly to_unipoly(const ZPoly& f) {
  std::vector<Rational> v;
  for (const auto& c : f) v.emplace_back(c);
  return UniPoly(Var::x, std::move(v));
}

struct Lifted {
  std::vector<ZPoly> factors;  // monic, coefficients in [0, modulus)
  Integer modulus;
};

// Linear Hensel lifting of f = lc * prod(u_i) mod p to modulus > bound.
Lifted hensel_lift(const ZPoly& f, const modp::Field& F, const std::vector<modp::Poly>& u,
                   const Integer& bound) {
  const auto p = F.prime();
  const Integer pz(static_cast<unsigned long>(p));

  // Partial-fraction cofactors: s_i = (prod_{j != i} u_j)^{-1} mod u_i.
  std::vector<modp::Poly> s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    modp::Poly rest{1};
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (j != i) rest = F.mul(rest, u[j]);
    }
    s.push_back(F.inverse_mod(rest, u[i]));
  }

  Integer modulus = pz;
  while (modulus <= bound) modulus *= pz;

  // Monic target lc^{-1} f modulo the final modulus.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  ZPoly target;
  for (const auto& c : f) target.push_back(mod_nonneg(c * lc_inv, modulus));

  std::vector<ZPoly> U;
  for (const auto& ui : u) U.push_back(from_modp(ui));
  for (Integer pk = pz; pk < modulus; pk *= pz) {
    const Integer next = pk * pz;
    ZPoly prod{1};
    for (const auto& Ui : U) prod = zmul(prod, Ui, next);
    std::vector<mpz_class> err(target.size(), 0);
    for (std::size_t i = 0; i < target.size(); ++i) {
      Integer diff = mod_nonneg(target[i] - (i < prod.size() ? prod[i] : Integer(0)), next);
      err[i] = diff / pk;
    }
    const modp::Poly e = F.from_integers(err);
    if (e.empty()) continue;
    for (std::size_t i = 0; i < U.size(); ++i) {
      const modp::Poly delta = F.mod(F.mul(e, s[i]), u[i]);
      if (U[i].size() < delta.size()) U[i].resize(delta.size(), 0);
      for (std::size_t k = 0; k < delta.size(); ++k) {
        U[i][k] += pk * static_cast<unsigned long>(delta[k]);
      }
    }
  }
  return {std::move(U), std::move(modulus)};
}

// Chooses the prime among a few good candidates that yields the fewest
// modular factors.
std::pair<std::uint64_t, std::vector<modp::Poly>> best_modular_factorization(const ZPoly& f) {
  std::uint64_t best_p = 0;
  std::vector<modp::Poly> best;
  int good = 0;
  for (auto p : modp::small_primes(200)) {
    if (f.back() % static_cast<unsigned long>(p) == 0) continue;
    modp::Field F(p);
    modp::Poly fp = F.from_integers(f);
    if (!F.is_squarefree(fp)) continue;
    auto factors = F.factor_squarefree(fp);
    if (best_p == 0 || factors.size() < best.size()) {
      best_p = p;
      best = std::move(factors);
    }
    if (++good == 5 || best.size() == 1) break;
  }
  if (best_p == 0) throw ConsistencyError("FactorizationFailure", "no good prime found");
  return {best_p, std::move(best)};
}

// Irreducible factors of a squarefree, monic (over Q) polynomial.
std::vector<UniPoly> factor_squarefree(const UniPoly& g) {
  if (g.degree() <= 1) return {g.with_var(Var::x)};
  ZPoly f = primitive_integer_part(g).second;
  auto [p, modular] = best_modular_factorization(f);
  if (modular.size() == 1) return {g.with_var(Var::x)};

  const int n = static_cast<int>(f.size()) - 1;
  Integer norm1 = 0;
  for (const auto& c : f) norm1 += abs(c);
  Integer bound = 2 * abs(f.back()) * norm1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));

  modp::Field F(p);
  Lifted lifted = hensel_lift(f, F, modular, bound);
  const Integer& M = lifted.modulus;
  const Integer half = M / 2;

  std::vector<ZPoly> remaining = std::move(lifted.factors);
  UniPoly rest = to_unipoly(f);
  std::vector<UniPoly> found;

  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool progress = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      const Integer lc = primitive_integer_part(rest).second.back();
      ZPoly cand{lc};
      for (auto i : pick) cand = zmul(cand, remaining[i], M);
      for (auto& c : cand) {
        if (c > half) c -= M;
      }
      ztrim(cand);
      UniPoly h = to_unipoly(primitive_integer_part(to_unipoly(cand)).second);
      auto [quo, rem] = divrem(rest, h);
      if (rem.is_zero()) {
        found.push_back(h.monic());
        rest = to_unipoly(primitive_integer_part(quo).second);
        for (std::size_t k = pick.size(); k-- > 0;) remaining.erase(remaining.begin() + static_cast<long>(pick[k]));
        progress = true;
        break;
      }
      // next subset in lexicographic order
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == remaining.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!progress) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest.monic());
  return found;
}

}  // namespace

FactoredPoly factor(const UniPoly& p) {
  if (p.is_zero()) throw ContractViolation("factorization of the zero polynomial");
  FactoredPoly out{p.lead(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (auto& h : factor_squarefree(part)) out.factors.emplace_back(h.with_var(p.var()), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace conicrank
