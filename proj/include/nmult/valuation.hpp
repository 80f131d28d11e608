// Monomial valuations v_w and the b-divisor data they see. On monomial input
// a valuation value is a support-function evaluation, so two graded systems
// are v-equivalent exactly when their limiting Newton regions coincide.
#pragma once

#include <map>
#include <vector>

#include "nmult/multiplier.hpp"

namespace nmult {

struct ValuationWeight {
  ZVec w;  // positive, primitive

  static ValuationWeight of(ZVec w) {
    if (w.empty()) throw value_error("valuation weight must be nonempty");
    for (const Int& x : w)
      if (x < 1) throw value_error("valuation weight coordinates must be >= 1");
    ZVec copy = w;
    make_primitive(copy);
    if (copy != w) throw value_error("valuation weight must be primitive");
    return ValuationWeight{std::move(w)};
  }
  bool operator<(const ValuationWeight& o) const { return lex_less(w, o.w); }
  bool operator==(const ValuationWeight& o) const { return w == o.w; }
};

// All primitive positive integer vectors with coordinate sum <= bound.
inline std::vector<ValuationWeight> default_weight_sample(int dim, int sum_bound = 5) {
  if (dim < 1) throw value_error("weight sample: dimension must be >= 1");
  std::vector<ValuationWeight> out;
  ZVec w(dim, Int(1));
  auto total = [&]() {
    Int t = 0;
    for (const Int& x : w) t += x;
    return t;
  };
  while (true) {
    if (total() <= sum_bound) {
      ZVec copy = w;
      make_primitive(copy);
      if (copy == w) out.push_back(ValuationWeight{w});
    }
    int k = dim - 1;
    while (k >= 0 && w[k] == sum_bound) { w[k] = 1; --k; }
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

inline Rat ord_w(const MonomialIdeal& a, const ValuationWeight& w) {
  if ((int)w.w.size() != a.dim()) throw value_error("ord_w: dimension mismatch");
  return support_value(newton_region(a), w.w);
}

inline Rat asymptotic_ord_w(const GradedSystem& s, const ValuationWeight& w, const Chain& chain) {
  if ((int)w.w.size() != s.dim()) throw value_error("asymptotic_ord_w: dimension mismatch");
  LimitRegionReport lr = limit_region(s, chain);
  if (lr.stabilized || lr.asserted) return support_value(lr.region, w.w);
  int k = chain.back();
  return support_value(scale(s.region_at(k), Rat(1, k)), w.w);
}

// Precision of chain estimates at the final index, used by the sampled
// equivalence checks below.
inline Rat chain_tolerance(const ValuationWeight& w, int dim, const Chain& chain) {
  Int wmax = 0;
  for (const Int& x : w.w)
    if (x > wmax) wmax = x;
  return Rat(2 * dim * wmax, chain.back());
}

struct VEquivalenceReport {
  bool verdict = false;
  bool exact = false;  // decided by structural equality of limit regions
  std::vector<std::pair<ValuationWeight, std::pair<Rat, Rat>>> samples;
};

inline VEquivalenceReport v_equivalent(const GradedSystem& s1, const GradedSystem& s2,
                                       const std::vector<ValuationWeight>& weights,
                                       const Chain& chain) {
  if (s1.dim() != s2.dim()) throw value_error("v_equivalent: dimension mismatch");
  VEquivalenceReport out;
  LimitRegionReport l1 = limit_region(s1, chain);
  LimitRegionReport l2 = limit_region(s2, chain);
  bool exact1 = l1.stabilized || l1.asserted;
  bool exact2 = l2.stabilized || l2.asserted;
  for (const auto& w : weights) {
    Rat a = asymptotic_ord_w(s1, w, chain);
    Rat b = asymptotic_ord_w(s2, w, chain);
    out.samples.push_back({w, {a, b}});
  }
  if (exact1 && exact2) {
    out.exact = true;
    out.verdict = l1.region == l2.region;
    return out;
  }
  out.exact = false;
  out.verdict = true;
  for (const auto& [w, ab] : out.samples) {
    Rat diff = ab.first - ab.second;
    if (diff < 0) diff = -diff;
    if (diff > chain_tolerance(w, s1.dim(), chain)) out.verdict = false;
  }
  return out;
}

struct VEquivAbReport {
  bool verdict = false;
  bool exact = true;  // false when some multiplier ideal was a lower bound only
  // per weight: (a-side value, b-side value ord_w(b_k)/k at the last index)
  std::vector<std::pair<ValuationWeight, std::pair<Rat, Rat>>> samples;
};

// Tests the relation Z(a_bullet) = Z(b_bullet) on sampled monomial
// valuations: ord_w(b_k)/k climbs to the a-side value from below.
inline VEquivAbReport v_equiv_ab(const GradedSystem& s, const std::vector<ValuationWeight>& weights,
                                 const Chain& chain) {
  if (!is_stable(s, chain)) throw value_error("v_equiv_ab: system is not stable");
  VEquivAbReport out;
  out.verdict = true;
  int k = chain.back();
  auto b = asymptotic_multiplier_adaptive(s, Rat(k), chain);
  if (!b.stabilized) out.exact = false;
  for (const auto& w : weights) {
    Rat a_side = asymptotic_ord_w(s, w, chain);
    Rat b_side = ord_w(b.ideal, w) / k;
    out.samples.push_back({w, {a_side, b_side}});
    if (b.stabilized) {
      // Coefficientwise monotonicity puts the b-side below the limit.
      if (b_side > a_side || a_side - b_side > chain_tolerance(w, s.dim(), chain))
        out.verdict = false;
    } else {
      if (b_side > a_side) out.verdict = false;
    }
  }
  return out;
}

// Intersection number of the limit b-divisors, -(n! * mixed covolume).
inline Rat intersection_number(const std::vector<GradedSystem>& systems, const Chain& chain) {
  if (systems.empty()) throw value_error("intersection_number: no systems");
  int n = systems.front().dim();
  if ((int)systems.size() != n)
    throw value_error("intersection_number: needs exactly n systems in dimension n");
  std::vector<NewtonRegion> regions;
  for (const auto& s : systems) {
    if (s.dim() != n) throw value_error("intersection_number: dimension mismatch");
    LimitRegionReport lr = limit_region(s, chain);
    if (!(lr.stabilized || lr.asserted))
      throw value_error(
          "intersection_number: limit region unavailable; supply known_limit or a longer chain");
    regions.push_back(lr.region);
  }
  return -(Rat(factorial(n)) * mixed_covolume(regions));
}

struct BDivisorSample {
  std::vector<ValuationWeight> weights;
  std::map<ValuationWeight, Rat> coefficients;  // -ord_w, always <= 0
};

inline BDivisorSample b_divisor_sample(const MonomialIdeal& a,
                                       const std::vector<ValuationWeight>& weights) {
  BDivisorSample out;
  out.weights = weights;
  for (const auto& w : weights) out.coefficients[w] = -ord_w(a, w);
  return out;
}

inline BDivisorSample b_divisor_sample(const GradedSystem& s,
                                       const std::vector<ValuationWeight>& weights,
                                       const Chain& chain) {
  BDivisorSample out;
  out.weights = weights;
  for (const auto& w : weights) out.coefficients[w] = -asymptotic_ord_w(s, w, chain);
  return out;
}

}  // namespace nmult
