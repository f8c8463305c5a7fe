#pragma once

// Polynomials over F_p for word-sized odd primes p < 2^31. Internal to the
// library: used by the Zassenhaus factorizer and by the modular square-test
// prefilter.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace conicrank::modp {

using Poly = std::vector<std::uint64_t>;  // lowest degree first, trimmed

class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t prime() const { return p_; }

  std::uint64_t reduce(const mpz_class& v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// Legendre symbol: 1, p-1 (for -1) or 0.
  std::uint64_t legendre(std::uint64_t a) const { return pow(a, (p_ - 1) / 2); }

  Poly from_integers(const std::vector<mpz_class>& coeffs) const;
  void trim(Poly& f) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, std::uint64_t c) const;
  void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) const;
  Poly mod(const Poly& a, const Poly& b) const;
  Poly div(const Poly& a, const Poly& b) const;
  Poly monic(const Poly& a) const;
  Poly gcd(Poly a, Poly b) const;
  /// s with s*a == g (mod b) where g = gcd(a, b); used with coprime inputs.
  Poly inverse_mod(const Poly& a, const Poly& m) const;
  Poly derivative(const Poly& a) const;
  Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) const;
  std::uint64_t eval(const Poly& f, std::uint64_t x) const;

  bool is_squarefree(const Poly& f) const;
  /// Monic irreducible factors of a monic squarefree f (deterministic).
  std::vector<Poly> factor_squarefree(const Poly& f) const;
  /// Distinct roots of f in F_p.
  std::vector<std::uint64_t> roots(const Poly& f) const;

 private:
  std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) const;
  void equal_degree(const Poly& f, int d, std::uint64_t& seed, std::vector<Poly>& out) const;
  std::uint64_t p_;
};

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

/// Odd primes in increasing order starting at 3.
std::vector<std::uint64_t> small_primes(std::size_t count);

}  // namespace conicrank::modp
