#include "conicrank/conic.hpp"

#include "conicrank/errors.hpp"

namespace conicrank {

std::string ConicFiber::name() const { return (kind == ConicKind::A ? "A" : "D") + std::to_string(n); }

std::vector<ConicFiber> classify_conic_fibers(const ConicForm& cf) {
  const UniPoly disc = delta_conic(cf);
  if (disc.is_zero()) throw ValidationError("Delta_conic = B^2 - 4AC is identically zero");
  std::vector<ConicFiber> out;
  for (const auto& [g, e] : factor(disc).factors) {
    ConicFiber f;
    f.location = g;
    f.degree = g.degree();
    f.n = e + 1;
    NumberField K(g);
    f.field = K;
    f.a_residue = K.reduce(cf.A);
    f.c_residue = K.reduce(cf.C);
    if (f.a_residue->is_zero() && f.c_residue->is_zero()) {
      f.kind = ConicKind::D;
      if (!K.reduce(cf.B).is_zero()) {
        throw ConsistencyError("ConicFiberKind", "A and C vanish at " + g.to_string() + " but B does not");
      }
      if (f.n < 3) {
        throw ConsistencyError("ConicFiberKind", "D-kind fiber at " + g.to_string() + " with n < 3");
      }
    }
    out.push_back(std::move(f));
  }
  ConicFiber inf;
  inf.kind = ConicKind::D;
  inf.n = 9 - disc.degree();
  out.push_back(std::move(inf));
  return out;
}

DeltaEpsilon delta_epsilon(const std::vector<ConicFiber>& fibers) {
  DeltaEpsilon de;
  for (const auto& f : fibers) (f.kind == ConicKind::A ? de.delta : de.epsilon) += f.degree;
  return de;
}

int component_sum(const std::vector<ConicFiber>& fibers) {
  int s = 0;
  for (const auto& f : fibers) s += f.degree * (f.n - 1);
  return s;
}

bool component_sum_check(const std::vector<ConicFiber>& fibers) { return component_sum(fibers) == 8; }

const ConicFiber& infinity_fiber(const std::vector<ConicFiber>& fibers) {
  for (const auto& f : fibers) {
    if (f.is_infinity()) return f;
  }
  throw ContractViolation("fiber list has no fiber at infinity");
}

}  // namespace conicrank
