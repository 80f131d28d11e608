// m-primary monomial ideals as combinatorial objects: a minimal antichain of
// integer exponent vectors. Multiplicities go through the Newton region;
// colength counts lattice points directly and serves as the independent
// growth oracle for the n!*covolume normalization.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nmult/region.hpp"

namespace nmult {

namespace detail {

// Keeps the componentwise-minimal elements. Candidates are scanned in
// ascending total degree, so a survivor list lookup suffices.
inline std::vector<ZVec> minimal_antichain(std::vector<ZVec> gens) {
  std::sort(gens.begin(), gens.end(), [](const ZVec& a, const ZVec& b) {
    Int da = 0, db = 0;
    for (const Int& x : a) da += x;
    for (const Int& x : b) db += x;
    if (da != db) return da < db;
    return lex_less(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ZVec> out;
  for (auto& g : gens) {
    bool dominated = false;
    for (const auto& r : out)
      if (dominates(g, r)) { dominated = true; break; }
    if (!dominated) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
  return out;
}

}  // namespace detail

class MonomialIdeal {
 public:
  static MonomialIdeal from_generators(int dim, std::vector<ZVec> gens) {
    validate(dim, gens);
    return MonomialIdeal(dim, detail::minimal_antichain(std::move(gens)));
  }

  // Caller guarantees the set is already a componentwise antichain.
  static MonomialIdeal from_minimal_generators(int dim, std::vector<ZVec> gens) {
    validate(dim, gens);
    std::sort(gens.begin(), gens.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return MonomialIdeal(dim, std::move(gens));
  }

  int dim() const { return dim_; }
  const std::vector<ZVec>& generators() const { return gens_; }

  bool operator==(const MonomialIdeal& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  bool is_unit() const {
    return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(),
                                            [](const Int& x) { return x == 0; });
  }

 private:
  MonomialIdeal(int dim, std::vector<ZVec> gens) : dim_(dim), gens_(std::move(gens)) {}

  static void validate(int dim, const std::vector<ZVec>& gens) {
    if (dim < 1) throw value_error("ideal dimension must be >= 1");
    if (gens.empty()) throw value_error("zero ideal: generator set must be nonempty");
    for (const auto& g : gens) {
      if ((int)g.size() != dim) throw value_error("generator dimension mismatch");
      for (const Int& x : g)
        if (x < 0) throw value_error("generator with negative exponent");
    }
  }

  int dim_;
  std::vector<ZVec> gens_;
};

inline MonomialIdeal minimalize(int dim, std::vector<ZVec> gens) {
  return MonomialIdeal::from_generators(dim, std::move(gens));
}

inline MonomialIdeal unit_ideal(int dim) {
  return MonomialIdeal::from_minimal_generators(dim, {ZVec(dim, Int(0))});
}

inline MonomialIdeal maximal_ideal(int dim) {
  std::vector<ZVec> gens;
  for (int i = 0; i < dim; ++i) {
    ZVec e(dim, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::from_minimal_generators(dim, std::move(gens));
}

inline bool contains_monomial(const MonomialIdeal& a, const ZVec& u) {
  if ((int)u.size() != a.dim()) throw value_error("contains_monomial: dimension mismatch");
  for (const Int& x : u)
    if (x < 0) throw value_error("contains_monomial: negative exponent");
  for (const auto& g : a.generators())
    if (dominates(u, g)) return true;
  return false;
}

// b subset of a, checked generatorwise.
inline bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw value_error("ideal_contains: dimension mismatch");
  for (const auto& g : b.generators())
    if (!contains_monomial(a, g)) return false;
  return true;
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw value_error("product: dimension mismatch");
  std::vector<ZVec> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
      ZVec s(a.dim());
      for (int i = 0; i < a.dim(); ++i) s[i] = g[i] + h[i];
      sums.push_back(std::move(s));
    }
  }
  return MonomialIdeal::from_generators(a.dim(), std::move(sums));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw value_error("sum: dimension mismatch");
  std::vector<ZVec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.dim(), std::move(gens));
}

// Repeated squaring on generator sets, minimalizing at every step.
inline MonomialIdeal power(const MonomialIdeal& a, long k) {
  if (k < 1) throw value_error("power: exponent must be >= 1");
  MonomialIdeal base = a;
  std::optional<MonomialIdeal> acc;
  while (k > 0) {
    if (k & 1) acc = acc ? product(*acc, base) : base;
    k >>= 1;
    if (k > 0) base = product(base, base);
  }
  return *acc;
}

// Pure-power degree per coordinate; empty when some axis has none.
inline std::optional<std::vector<Int>> pure_power_degrees(const MonomialIdeal& a) {
  std::vector<std::optional<Int>> deg(a.dim());
  for (const auto& g : a.generators()) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < a.dim(); ++i) {
      if (g[i] != 0) {
        if (support >= 0) { pure = false; break; }
        support = i;
      }
    }
    if (!pure) continue;
    if (support < 0) {  // unit ideal
      std::vector<Int> zero(a.dim(), Int(0));
      return zero;
    }
    if (!deg[support] || g[support] < *deg[support]) deg[support] = g[support];
  }
  std::vector<Int> out(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (!deg[i]) return std::nullopt;
    out[i] = *deg[i];
  }
  return out;
}

inline bool is_m_primary(const MonomialIdeal& a) { return pure_power_degrees(a).has_value(); }

inline NewtonRegion newton_region(const MonomialIdeal& a) {
  std::vector<QVec> q;
  q.reserve(a.generators().size());
  for (const auto& g : a.generators()) q.push_back(to_qvec(g));
  return region_from_minimal_generators(a.dim(), q);
}

namespace detail {

// Lattice points outside the staircase, sliced along the last coordinate;
// the slice ideal only changes at generator exponents.
inline Int colength_rec(const std::vector<ZVec>& gens, int n) {
  if (n == 1) {
    Int best = gens.front()[0];
    for (const auto& g : gens)
      if (g[0] < best) best = g[0];
    return best;
  }
  Int dn = 0;  // pure power in the last coordinate bounds the slices
  bool found = false;
  for (const auto& g : gens) {
    bool pure = true;
    for (int i = 0; i + 1 < n; ++i)
      if (g[i] != 0) { pure = false; break; }
    if (pure && (!found || g[n - 1] < dn)) { dn = g[n - 1]; found = true; }
  }
  std::vector<Int> cuts;
  cuts.push_back(0);
  for (const auto& g : gens)
    if (g[n - 1] > 0 && g[n - 1] < dn) cuts.push_back(g[n - 1]);
  cuts.push_back(dn);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Int total = 0;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const Int& t = cuts[s];
    std::vector<ZVec> slice;
    for (const auto& g : gens) {
      if (g[n - 1] <= t) slice.push_back(ZVec(g.begin(), g.begin() + (n - 1)));
    }
    slice = minimal_antichain(std::move(slice));
    if (slice.empty()) continue;
    total += (cuts[s + 1] - t) * colength_rec(slice, n - 1);
  }
  return total;
}

}  // namespace detail

inline Int colength(const MonomialIdeal& a) {
  if (!is_m_primary(a)) throw value_error("infinite colength: ideal is not m-primary");
  if (a.is_unit()) return 0;
  return detail::colength_rec(a.generators(), a.dim());
}

inline Int samuel_multiplicity(const MonomialIdeal& a) {
  if (!is_m_primary(a)) throw value_error("samuel_multiplicity: ideal is not m-primary");
  Rat e = Rat(factorial(a.dim())) * covolume(newton_region(a));
  if (!is_integer(e))
    throw kernel_error("samuel_multiplicity: n!*covolume is not an integer");
  return rat_num(e);
}

// The defining colength-growth sequence n!*colength(a^k)/k^n for k=1..kmax.
inline std::vector<Rat> samuel_oracle(const MonomialIdeal& a, int kmax) {
  if (!is_m_primary(a)) throw value_error("samuel_oracle: ideal is not m-primary");
  if (kmax < 2) throw value_error("samuel_oracle: kmax must be >= 2");
  std::vector<Rat> out;
  MonomialIdeal acc = a;
  Int nf = factorial(a.dim());
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) acc = product(acc, a);
    Rat kn = 1;
    for (int i = 0; i < a.dim(); ++i) kn *= k;
    out.push_back(Rat(nf * colength(acc)) / kn);
  }
  return out;
}

inline Int mixed_multiplicity(const std::vector<MonomialIdeal>& as) {
  if (as.empty()) throw value_error("mixed_multiplicity: no arguments");
  int n = as.front().dim();
  if ((int)as.size() != n)
    throw value_error("mixed_multiplicity: needs exactly n ideals in dimension n");
  std::vector<NewtonRegion> regions;
  for (const auto& a : as) {
    if (a.dim() != n) throw value_error("mixed_multiplicity: dimension mismatch");
    if (!is_m_primary(a)) throw value_error("mixed_multiplicity: ideal is not m-primary");
    regions.push_back(newton_region(a));
  }
  Rat e = Rat(factorial(n)) * mixed_covolume(regions);
  if (!is_integer(e) || e < 0)
    throw kernel_error("mixed_multiplicity: polarization did not give a nonnegative integer");
  return rat_num(e);
}

// Generators of the closure: minimal lattice points of the Newton region.
inline MonomialIdeal integral_closure(const MonomialIdeal& a) {
  auto region = newton_region(a);
  std::optional<std::vector<Int>> box;
  if (auto d = pure_power_degrees(a)) {
    box = *d;
  } else {
    // Not m-primary: lattice points beyond the largest generator coordinate
    // in direction i are dominated by points inside the box.
    std::vector<Int> b(a.dim(), Int(0));
    for (const auto& g : a.generators())
      for (int i = 0; i < a.dim(); ++i)
        if (g[i] > b[i]) b[i] = g[i];
    box = b;
  }
  std::vector<ZVec> pts;
  ZVec u(a.dim(), Int(0));
  while (true) {
    bool inside = true;
    QVec uq = to_qvec(u);
    for (const auto& f : region.facets())
      if (dot(f.normal, uq) < f.offset) { inside = false; break; }
    if (inside) pts.push_back(u);
    int k = a.dim() - 1;
    while (k >= 0 && u[k] == (*box)[k]) { u[k] = 0; --k; }
    if (k < 0) break;
    ++u[k];
  }
  return MonomialIdeal::from_generators(a.dim(), std::move(pts));
}

// Order of vanishing: minimal total degree of a generator.
inline Int ord(const MonomialIdeal& a) {
  Int best = -1;
  for (const auto& g : a.generators()) {
    Int t = 0;
    for (const Int& x : g) t += x;
    if (best < 0 || t < best) best = t;
  }
  return best;
}

}  // namespace nmult
