#pragma once

// Bad fibers of the elliptic fibration over P^1_T: places, valuations of
// (c4, c6, Delta), Kodaira types from the characteristic-zero table, and
// the Shioda-Tate rank.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "conicrank/curve.hpp"
#include "conicrank/qpoly.hpp"

namespace conicrank {

/// Valuation of the zero polynomial.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// A monic irreducible polynomial in T, or the point at infinity.
struct Place {
  std::optional<UniPoly> factor;  // empty at infinity

  static Place infinity() { return {}; }
  static Place finite(UniPoly q) { return {std::move(q)}; }
  bool is_infinity() const { return !factor.has_value(); }
  int degree() const { return factor ? factor->degree() : 1; }
  std::string to_string() const { return factor ? factor->to_string() : "inf"; }
  friend bool operator==(const Place& a, const Place& b) { return a.factor == b.factor; }
};

struct LocalData {
  Place place;
  int v_c4 = 0;
  int v_c6 = 0;
  int v_delta = 0;
  int minimalization_steps = 0;
};

enum class KodairaKind { I_n, II, III, IV, I_n_star, IV_star, III_star, II_star };

struct KodairaFiber {
  Place place;
  KodairaKind kind = KodairaKind::I_n;
  int n = 0;      // index of I_n and I_n*
  int m = 0;      // geometric component count
  int euler = 0;  // equals v_delta
  LocalData local;

  /// "I3", "II", "I0*", "IV*", ...
  std::string name() const;
};

std::string valuation_string(int v);

/// Irreducible factors of Delta_std, then infinity when deg Delta_std <= 11.
std::vector<Place> bad_places(const WeierstrassData& w);

/// Multiplicity of q in f (kInfiniteValuation for f = 0).
int valuation(const UniPoly& f, const UniPoly& q);

LocalData local_valuations(const WeierstrassData& w, const Place& p);

/// Throws ConsistencyError("UnclassifiableTriple") when no row applies.
KodairaFiber classify_kodaira(const LocalData& d);

/// All bad fibers in place order (finite places as factored, then infinity).
std::vector<KodairaFiber> kodaira_fibers(const WeierstrassData& w);

/// 8 - sum deg(v) (m_v - 1); throws ConsistencyError("NegativeRank").
int shioda_tate_rank(const std::vector<KodairaFiber>& fibers);

/// sum deg(v) e_v == 12.
bool euler_check(const std::vector<KodairaFiber>& fibers);
int euler_sum(const std::vector<KodairaFiber>& fibers);

}  // namespace conicrank
