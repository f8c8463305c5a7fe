#include "modp.hpp"

#include <algorithm>
#include <random>

#include "conicrank/errors.hpp"

namespace conicrank::modp {

std::uint64_t Field::reduce(const mpz_class& v) const {
  mpz_class r = v % static_cast<unsigned long>(p_);
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  a %= p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero modulo p");
  return pow(a, p_ - 2);
}

Poly Field::from_integers(const std::vector<mpz_class>& coeffs) const {
  Poly f;
  f.reserve(coeffs.size());
  for (const auto& c : coeffs) f.push_back(reduce(c));
  trim(f);
  return f;
}

void Field::trim(Poly& f) const {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly Field::add(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  trim(r);
  return r;
}

Poly Field::sub(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly Field::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
  }
  trim(r);
  return r;
}

Poly Field::scale(const Poly& a, std::uint64_t c) const {
  Poly r(a);
  for (auto& v : r) v = mul(v, c);
  trim(r);
  return r;
}

void Field::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) const {
  if (b.empty()) throw DomainError("division by the zero polynomial modulo p");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  const std::uint64_t inv_lead = inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    std::uint64_t c = mul(r[i], inv_lead);
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly Field::mod(const Poly& a, const Poly& b) const {
  Poly q, r;
  divrem(a, b, q, r);
  return r;
}

Poly Field::div(const Poly& a, const Poly& b) const {
  Poly q, r;
  divrem(a, b, q, r);
  return q;
}

Poly Field::monic(const Poly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

Poly Field::gcd(Poly a, Poly b) const {
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly Field::inverse_mod(const Poly& a, const Poly& m) const {
  Poly r0 = m, r1 = mod(a, m);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divrem(r0, r1, q, r);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw DomainError("polynomial not invertible modulo p");
  return mod(scale(s0, inv(r0[0])), m);
}

Poly Field::derivative(const Poly& a) const {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p_));
  trim(d);
  return d;
}

Poly Field::powmod(const Poly& base, const mpz_class& e, const Poly& m) const {
  Poly result{1};
  result = mod(result, m);
  Poly b = mod(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b), m);
  }
  return result;
}

std::uint64_t Field::eval(const Poly& f, std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x), f[i]);
  return acc;
}

bool Field::is_squarefree(const Poly& f) const {
  Poly d = derivative(f);
  if (d.empty()) return degree(f) <= 0;
  return degree(gcd(f, d)) == 0;
}

std::vector<std::pair<Poly, int>> Field::distinct_degree(const Poly& f) const {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  const Poly x{0, 1};
  Poly h = mod(x, rest);
  const mpz_class pz(static_cast<unsigned long>(p_));
  for (int i = 1; degree(rest) >= 2 * i; ++i) {
    h = powmod(h, pz, rest);
    Poly g = gcd(sub(h, x), rest);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      rest = div(rest, g);
      h = mod(h, rest);
    }
  }
  if (degree(rest) > 0) out.emplace_back(monic(rest), degree(rest));
  return out;
}

void Field::equal_degree(const Poly& f, int d, std::uint64_t& seed, std::vector<Poly>& out) const {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::mt19937_64 rng(seed++);
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = rng() % p_;
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(a, f);
    if (degree(g) <= 0) {
      Poly b = sub(powmod(a, e, f), Poly{1});
      g = gcd(b, f);
    }
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, seed, out);
      equal_degree(div(f, g), d, seed, out);
      return;
    }
  }
}

std::vector<Poly> Field::factor_squarefree(const Poly& f) const {
  std::vector<Poly> out;
  std::uint64_t seed = 0x5eed;
  for (const auto& [g, d] : distinct_degree(monic(f))) equal_degree(g, d, seed, out);
  return out;
}

std::vector<std::uint64_t> Field::roots(const Poly& f) const {
  std::vector<std::uint64_t> out;
  if (f.empty()) return out;
  const Poly x{0, 1};
  Poly fm = monic(f);
  Poly xp = powmod(x, mpz_class(static_cast<unsigned long>(p_)), fm);
  Poly lin = gcd(sub(xp, x), fm);
  if (degree(lin) <= 0) return out;
  std::vector<Poly> linear;
  std::uint64_t seed = 0x700d;
  equal_degree(lin, 1, seed, linear);
  for (const auto& l : linear) out.push_back((p_ - l[0]) % p_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> small_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 3; primes.size() < count; n += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

}  // namespace conicrank::modp
