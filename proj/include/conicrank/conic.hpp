#pragma once

// Singular fibers of the conic bundle over P^1_x, read off B^2 - 4AC.

#include <optional>
#include <string>
#include <vector>

#include "conicrank/curve.hpp"
#include "conicrank/numfield.hpp"

namespace conicrank {

enum class ConicKind { A, D };

struct ConicFiber {
  std::optional<UniPoly> location;  // monic irreducible in x; empty at infinity
  ConicKind kind = ConicKind::A;
  int n = 0;
  int degree = 1;
  // Finite fibers only: the residue field Q[x]/(location) and A, C there.
  std::optional<NumberField> field;
  std::optional<NFElement> a_residue;
  std::optional<NFElement> c_residue;

  bool is_infinity() const { return !location.has_value(); }
  /// "A3", "D5", ...
  std::string name() const;
  std::string location_string() const { return location ? location->to_string() : "inf"; }
};

/// One fiber per irreducible factor of B^2 - 4AC, then the fiber at infinity.
std::vector<ConicFiber> classify_conic_fibers(const ConicForm& cf);

struct DeltaEpsilon {
  int delta = 0;    // A-kind fibers, counted geometrically
  int epsilon = 0;  // D-kind fibers, infinity included
};

DeltaEpsilon delta_epsilon(const std::vector<ConicFiber>& fibers);

/// sum deg * (n - 1) over all fibers.
int component_sum(const std::vector<ConicFiber>& fibers);
bool component_sum_check(const std::vector<ConicFiber>& fibers);

const ConicFiber& infinity_fiber(const std::vector<ConicFiber>& fibers);

}  // namespace conicrank
