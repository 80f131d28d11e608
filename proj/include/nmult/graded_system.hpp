// Graded systems of monomial ideals: rules k -> a_k with the superadditivity
// contract a_m * a_k inside a_{m+k}. Limits along divisibility chains give
// the asymptotic Newton region, multiplicity and order. The library never
// extrapolates a non-stabilizing chain silently; a user-asserted limit region
// is verified by containment, not trusted.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nmult/ideal.hpp"

namespace nmult {

using Chain = std::vector<int>;

inline Chain make_chain(int base, int ratio, int length) {
  if (base < 1 || ratio < 1 || length < 1) throw value_error("invalid chain spec");
  Chain c;
  long k = base;
  for (int i = 0; i < length; ++i) {
    c.push_back((int)k);
    k *= ratio;
    if (k > 100000000L) throw value_error("chain grows too large");
  }
  return c;
}

inline void validate_chain(const Chain& chain) {
  if (chain.empty()) throw value_error("empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] < 1) throw value_error("chain entries must be positive");
    if (i > 0 && (chain[i] <= chain[i - 1] || chain[i] % chain[i - 1] != 0))
      throw value_error("chain must be an ascending divisibility chain");
  }
}

inline Chain default_chain() { return make_chain(1, 2, 7); }  // 1,2,4,...,64

struct AffineFactor {
  MonomialIdeal ideal;
  Rat slope;      // exponent at k is max(0, floor(slope*k + intercept))
  Rat intercept;
};

struct SuperadditivityResult {
  bool ok = true;
  int m = 0, k = 0;   // first violating pair when !ok
  ZVec witness;       // a generator of a_m * a_k missing from a_{m+k}
  explicit operator bool() const { return ok; }
};

class GradedSystem {
 public:
  enum class Kind { Power, Affine, Table, Kw1 };

  static GradedSystem power(MonomialIdeal base) {
    GradedSystem s(base.dim(), Kind::Power);
    s.base_ = std::move(base);
    return s;
  }

  static GradedSystem affine(int dim, std::vector<AffineFactor> factors) {
    if (factors.empty()) throw value_error("affine family needs at least one factor");
    for (const auto& f : factors) {
      if (f.ideal.dim() != dim) throw value_error("affine factor dimension mismatch");
      if (f.slope < 0) throw value_error("affine slope must be nonnegative");
    }
    GradedSystem s(dim, Kind::Affine);
    s.factors_ = std::move(factors);
    return s;
  }

  static GradedSystem table(int dim, std::map<int, MonomialIdeal> ideals);

  // a_k = m^k * (x^k, y) in dimension 2, shipped with the asserted simplex
  // limit (verified at use, like any known_limit).
  static GradedSystem kw1();

  // The comparison system a_k = m^k in dimension 2.
  static GradedSystem m_powers() { return power(maximal_ideal(2)); }

  GradedSystem with_known_limit(NewtonRegion r) const {
    if (r.dim() != dim_) throw value_error("known_limit dimension mismatch");
    GradedSystem s = *this;
    s.known_limit_ = std::move(r);
    return s;
  }
  GradedSystem without_known_limit() const {
    GradedSystem s = *this;
    s.known_limit_.reset();
    return s;
  }

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  const std::optional<NewtonRegion>& known_limit() const { return known_limit_; }
  const std::optional<MonomialIdeal>& power_base() const { return base_; }
  const std::vector<AffineFactor>& affine_factors() const { return factors_; }
  const std::map<int, MonomialIdeal>& table_ideals() const { return table_; }
  int max_table_index() const { return table_.empty() ? 0 : table_.rbegin()->first; }

  MonomialIdeal ideal_at(int k) const {
    if (k < 1) throw value_error("system index must be >= 1");
    switch (kind_) {
      case Kind::Power:
        return base_power(k);
      case Kind::Affine: {
        std::optional<MonomialIdeal> acc;
        for (const auto& f : factors_) {
          Int e = floor_rat(f.slope * k + f.intercept);
          if (e <= 0) continue;
          MonomialIdeal p = nmult::power(f.ideal, (long)e);
          acc = acc ? product(*acc, p) : p;
        }
        // All exponents vanished: the degenerate index yields the unit ideal.
        return acc ? *acc : unit_ideal(dim_);
      }
      case Kind::Table: {
        auto it = table_.find(k);
        if (it == table_.end()) throw value_error("table index out of range");
        return it->second;
      }
      case Kind::Kw1: {
        std::vector<ZVec> xy = {{Int(k), Int(0)}, {Int(0), Int(1)}};
        return product(nmult::power(maximal_ideal(2), k),
                       MonomialIdeal::from_minimal_generators(2, std::move(xy)));
      }
    }
    throw kernel_error("unreachable system kind");
  }

  // Newton region of a_k. Powers use P(a^k) = k*P(a), which keeps large
  // indices cheap; every other kind expands the ideal.
  NewtonRegion region_at(int k) const {
    if (kind_ == Kind::Power) return scale(newton_region(*base_), Rat(k));
    return newton_region(ideal_at(k));
  }

  // Smallest index from which every probed a_k is m-primary; empty when none
  // of the probed indices work.
  std::optional<int> primary_from(int probe_to = 16) const {
    if (kind_ == Kind::Power) return is_m_primary(*base_) ? std::optional<int>(1) : std::nullopt;
    if (kind_ == Kind::Kw1) return 1;
    int hi = kind_ == Kind::Table ? max_table_index() : probe_to;
    std::optional<int> k0;
    for (int k = 1; k <= hi; ++k) {
      if (is_m_primary(ideal_at(k))) {
        if (!k0) k0 = k;
      } else {
        k0.reset();
      }
    }
    return k0;
  }

 private:
  GradedSystem(int dim, Kind kind) : dim_(dim), kind_(kind) {}

  MonomialIdeal base_power(int k) const { return nmult::power(*base_, k); }

  int dim_;
  Kind kind_;
  std::optional<MonomialIdeal> base_;
  std::vector<AffineFactor> factors_;
  std::map<int, MonomialIdeal> table_;
  std::optional<NewtonRegion> known_limit_;
};

inline SuperadditivityResult validate_superadditive(const GradedSystem& s, int kmax) {
  if (kmax < 2) throw value_error("validate_superadditive: kmax must be >= 2");
  std::map<int, MonomialIdeal> memo;
  auto at = [&](int k) -> const MonomialIdeal& {
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, s.ideal_at(k)).first;
    return it->second;
  };
  for (int m = 1; m <= kmax / 2; ++m) {
    for (int k = m; m + k <= kmax; ++k) {
      MonomialIdeal prod = product(at(m), at(k));
      const MonomialIdeal& target = at(m + k);
      for (const auto& g : prod.generators()) {
        if (!contains_monomial(target, g)) {
          SuperadditivityResult r;
          r.ok = false;
          r.m = m;
          r.k = k;
          r.witness = g;
          return r;
        }
      }
    }
  }
  return SuperadditivityResult{};
}

inline GradedSystem GradedSystem::table(int dim, std::map<int, MonomialIdeal> ideals) {
  if (ideals.empty()) throw value_error("table system needs at least one ideal");
  int expect = 1;
  for (const auto& [k, ideal] : ideals) {
    if (k != expect++) throw value_error("table indices must be 1..K without gaps");
    if (ideal.dim() != dim) throw value_error("table ideal dimension mismatch");
  }
  GradedSystem s(dim, Kind::Table);
  s.table_ = std::move(ideals);
  auto check = validate_superadditive(s, s.max_table_index());
  if (!check)
    throw value_error("table system violates superadditivity at (" + std::to_string(check.m) +
                      "," + std::to_string(check.k) + ")");
  return s;
}

inline GradedSystem GradedSystem::kw1() {
  GradedSystem s(2, Kind::Kw1);
  return s.with_known_limit(simplex_region(2));
}

struct LimitRegionReport {
  NewtonRegion region;
  bool stabilized = false;
  bool asserted = false;  // region taken from a consistent known_limit
  std::vector<std::pair<int, Rat>> chain;  // (k, covolume of (1/k) P(a_k))
};

inline LimitRegionReport limit_region(const GradedSystem& s, const Chain& chain) {
  validate_chain(chain);
  std::optional<NewtonRegion> prev;
  std::optional<NewtonRegion> last;
  std::vector<std::pair<int, Rat>> covols;
  bool stabilized = false;
  for (int k : chain) {
    NewtonRegion r = scale(s.region_at(k), Rat(1, k));
    if (last && !region_contains(r, *last))
      throw kernel_error("limit_region: chain regions are not nested at k=" + std::to_string(k));
    if (s.known_limit() && !region_contains(*s.known_limit(), r))
      throw value_error("inconsistent asserted limit: (1/k)P(a_k) escapes known_limit at k=" +
                        std::to_string(k));
    covols.emplace_back(k, covolume(r));
    prev = last;
    last = std::move(r);
  }
  if (chain.size() >= 2 && prev && *prev == *last) stabilized = true;
  if (s.known_limit()) {
    if (stabilized && *last != *s.known_limit())
      throw value_error("inconsistent asserted limit: chain stabilized at a different region");
    return LimitRegionReport{*s.known_limit(), stabilized, true, std::move(covols)};
  }
  return LimitRegionReport{*last, stabilized, false, std::move(covols)};
}

struct AsymptoticMultiplicity {
  Rat estimate;
  std::vector<std::pair<int, Rat>> table;  // (k, e(a_k)/k^n)
  bool exact = false;
};

inline AsymptoticMultiplicity asymptotic_multiplicity(const GradedSystem& s, const Chain& chain) {
  LimitRegionReport lr = limit_region(s, chain);
  Int nf = factorial(s.dim());
  AsymptoticMultiplicity out;
  for (const auto& [k, c] : lr.chain) out.table.emplace_back(k, Rat(nf) * c);
  if (lr.stabilized || lr.asserted) {
    out.estimate = Rat(nf) * covolume(lr.region);
    out.exact = true;
  } else {
    out.estimate = out.table.back().second;
    out.exact = false;
  }
  return out;
}

inline Rat asymptotic_ord(const GradedSystem& s, const Chain& chain) {
  LimitRegionReport lr = limit_region(s, chain);
  QVec ones(s.dim(), Rat(1));
  if (lr.stabilized || lr.asserted) return support_value(lr.region, ones);
  int k = chain.back();
  return Rat(ord(s.ideal_at(k)), k);
}

inline bool is_stable(const GradedSystem& s, const Chain& chain) {
  // Chain ideals are nonzero by representation; stability reduces to a
  // positive asymptotic order.
  return asymptotic_ord(s, chain) > 0;
}

}  // namespace nmult
