#pragma once

// Defect, Galois-orbit count delta_k, rank bounds over Q(T), and the family
// rules that pin the rank down exactly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conicrank/conic.hpp"
#include "conicrank/curve.hpp"
#include "conicrank/kodaira.hpp"
#include "conicrank/numfield.hpp"
#include "conicrank/points.hpp"

namespace conicrank {

/// delta - r; throws ConsistencyError("NegativeDefect") when negative.
int defect_direct(int delta, int r);

/// A zero of the homogenized a3 on P^1_T. `multiplicity` is 2 for a double
/// zero; `degree` geometric points share the place.
struct SharedPlace {
  Place place;
  int multiplicity = 1;
};

/// Zeros of a3 viewed as a binary quadratic form. Throws
/// ConsistencyError("SharedFiberInconsistency") when simple zeros meet a
/// fiber at infinity other than D3, or a double zero meets D3.
std::vector<SharedPlace> shared_fiber_places(const CurveInput& c, const ConicFiber& g_inf);

struct SharedFiber {
  Place place;
  std::optional<KodairaFiber> fiber;  // empty when the elliptic fiber is smooth
  std::string name() const { return fiber ? fiber->name() : "I0"; }
};

/// Defect read off the fiber at infinity of the conic bundle and the shared
/// elliptic fibers. Throws ConsistencyError("TableMismatch") when the
/// configuration matches no row.
int defect_table(const ConicFiber& g_inf, const std::vector<SharedFiber>& shared);

struct DefectReport {
  int df_direct = 0;
  std::optional<int> df_table;
  bool consistent = true;
  std::vector<SharedFiber> shared;
};

enum class SquareStatus { ASquare, ANonsquare, AZeroCSquare, AZeroCNonsquare, DExcluded };
std::string to_string(SquareStatus s);

struct OrbitRecord {
  UniPoly factor{Var::x};
  ConicKind kind = ConicKind::A;
  SquareStatus status = SquareStatus::DExcluded;
  std::optional<NFElement> witness;
  std::optional<NonSquareCertificate> certificate;
  bool counted = false;
};

/// One record per finite conic fiber; delta_k counts the square ones.
std::pair<int, std::vector<OrbitRecord>> delta_k(const std::vector<ConicFiber>& fibers);

/// (max(0, delta_k - Df), delta_k).
std::pair<int, int> rank_bounds(int delta_k, int df);

enum class Family { DefectZero, ConstantA, AZeroCubicB, BoundsOnly };
std::string to_string(Family f);

struct FamilyResult {
  Family family = Family::BoundsOnly;
  std::optional<int> rank_exact;
  std::optional<Rational> mu;
  std::vector<std::string> tags;
};

/// First matching rule wins: Df = 0; A constant; A = 0 with cubic B.
/// Also attaches diagnostic tags for recognised shapes.
FamilyResult detect_family(const CurveInput& c, const WeierstrassData& w, int df, int delta_k);

struct Verification {
  std::string name;
  std::string status;  // "pass", "fail", "holds", "fails", "not_applicable"
  std::string detail;
};

struct RankReport {
  explicit RankReport(CurveInput c) : curve(std::move(c)) {}

  CurveInput curve;
  WeierstrassData weierstrass;
  FactoredPoly delta_conic_factored;
  FactoredPoly delta_std_factored;
  std::vector<ConicFiber> conic_fibers;
  std::vector<KodairaFiber> kodaira_fibers;
  int delta = 0;
  int epsilon = 0;
  int rank_geometric = 0;
  DefectReport defect;
  int delta_k = 0;
  std::vector<OrbitRecord> orbits;
  std::pair<int, int> bounds{0, 0};
  FamilyResult family;
  std::vector<Verification> verifications;
  std::vector<std::string> notes;
};

/// Full pipeline. Identities that must hold on every valid curve (component
/// sum, Euler sum, delta >= r, table agreement) raise ConsistencyError.
RankReport analyze(const CurveInput& c, bool verify_points = false);

}  // namespace conicrank
