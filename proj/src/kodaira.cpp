#include "conicrank/kodaira.hpp"

#include "conicrank/errors.hpp"

namespace conicrank {

namespace {

int at_infinity(const UniPoly& f, int weight) {
  return f.is_zero() ? kInfiniteValuation : weight - f.degree();
}

int lower(int v, int by) { return v == kInfiniteValuation ? v : v - by; }

}  // namespace

std::string valuation_string(int v) { return v == kInfiniteValuation ? "inf" : std::to_string(v); }

std::string KodairaFiber::name() const {
  switch (kind) {
    case KodairaKind::I_n: return "I" + std::to_string(n);
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::I_n_star: return "I" + std::to_string(n) + "*";
    case KodairaKind::IV_star: return "IV*";
    case KodairaKind::III_star: return "III*";
    case KodairaKind::II_star: return "II*";
  }
  return "?";
}

int valuation(const UniPoly& f, const UniPoly& q) {
  if (f.is_zero()) return kInfiniteValuation;
  int v = 0;
  UniPoly rest = f;
  for (;;) {
    auto [quo, rem] = divrem(rest, q);
    if (!rem.is_zero()) return v;
    rest = std::move(quo);
    ++v;
  }
}

std::vector<Place> bad_places(const WeierstrassData& w) {
  std::vector<Place> places;
  for (const auto& [q, e] : factor(w.delta_std).factors) places.push_back(Place::finite(q));
  if (12 - w.delta_std.degree() >= 1) places.push_back(Place::infinity());
  return places;
}

LocalData local_valuations(const WeierstrassData& w, const Place& p) {
  LocalData d{p};
  if (p.is_infinity()) {
    d.v_c4 = at_infinity(w.c4, 4);
    d.v_c6 = at_infinity(w.c6, 6);
    d.v_delta = at_infinity(w.delta_std, 12);
  } else {
    d.v_c4 = valuation(w.c4, *p.factor);
    d.v_c6 = valuation(w.c6, *p.factor);
    d.v_delta = valuation(w.delta_std, *p.factor);
  }
  while (d.v_c4 >= 4 && d.v_c6 >= 6 && d.v_delta >= 12) {
    if (++d.minimalization_steps > 2) {
      throw ConsistencyError("NonMinimalModel", "more than two minimalization steps at " + p.to_string());
    }
    d.v_c4 = lower(d.v_c4, 4);
    d.v_c6 = lower(d.v_c6, 6);
    d.v_delta = lower(d.v_delta, 12);
  }
  return d;
}

KodairaFiber classify_kodaira(const LocalData& d) {
  if (d.v_delta < 1 || d.v_delta == kInfiniteValuation) {
    throw ContractViolation("classification needs 1 <= v(Delta) < inf at " + d.place.to_string());
  }
  KodairaFiber f{d.place, KodairaKind::I_n, 0, 0, 0, d};
  const int a = d.v_c4, b = d.v_c6, c = d.v_delta;
  if (a == 0 && b == 0) {
    f.kind = KodairaKind::I_n;
    f.n = c;
    f.m = c;
    f.euler = c;
  } else if (b == 1) {
    f.kind = KodairaKind::II;
    f.m = 1;
    f.euler = 2;
  } else if (a == 1) {
    f.kind = KodairaKind::III;
    f.m = 2;
    f.euler = 3;
  } else if (b == 2) {
    f.kind = KodairaKind::IV;
    f.m = 3;
    f.euler = 4;
  } else if (c == 6 && a >= 2 && b >= 3) {
    f.kind = KodairaKind::I_n_star;
    f.n = 0;
    f.m = 5;
    f.euler = 6;
  } else if (a == 2 && b == 3 && c > 6) {
    f.kind = KodairaKind::I_n_star;
    f.n = c - 6;
    f.m = f.n + 5;
    f.euler = f.n + 6;
  } else if (b == 4) {
    f.kind = KodairaKind::IV_star;
    f.m = 7;
    f.euler = 8;
  } else if (a == 3) {
    f.kind = KodairaKind::III_star;
    f.m = 8;
    f.euler = 9;
  } else if (b == 5) {
    f.kind = KodairaKind::II_star;
    f.m = 9;
    f.euler = 10;
  } else {
    throw ConsistencyError("UnclassifiableTriple", "(" + valuation_string(a) + ", " + valuation_string(b) +
                                                       ", " + valuation_string(c) + ") at " +
                                                       d.place.to_string());
  }
  if (f.euler != c) {
    throw ConsistencyError("UnclassifiableTriple", f.name() + " at " + d.place.to_string() +
                                                       " has Euler number " + std::to_string(f.euler) +
                                                       " but v(Delta) = " + std::to_string(c));
  }
  return f;
}

std::vector<KodairaFiber> kodaira_fibers(const WeierstrassData& w) {
  std::vector<KodairaFiber> out;
  for (const auto& p : bad_places(w)) out.push_back(classify_kodaira(local_valuations(w, p)));
  return out;
}

int shioda_tate_rank(const std::vector<KodairaFiber>& fibers) {
  int r = 8;
  for (const auto& f : fibers) r -= f.place.degree() * (f.m - 1);
  if (r < 0) throw ConsistencyError("NegativeRank", "Shioda-Tate gives r = " + std::to_string(r));
  return r;
}

int euler_sum(const std::vector<KodairaFiber>& fibers) {
  int s = 0;
  for (const auto& f : fibers) s += f.place.degree() * f.euler;
  return s;
}

bool euler_check(const std::vector<KodairaFiber>& fibers) { return euler_sum(fibers) == 12; }

}  // namespace conicrank
