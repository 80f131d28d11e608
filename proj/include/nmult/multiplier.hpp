// Multiplier ideals of monomial data. The membership criterion is the
// interior test: x^u lies in the multiplier ideal of a region R exactly when
// u + (1,...,1) is strictly inside every lower-hull facet of R. Asymptotic
// multiplier ideals are the maximal members along a divisibility chain, with
// optional certification against an asserted limit region.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nmult/graded_system.hpp"

namespace nmult {

// The ideal (x^u : u + (1,...,1) strictly inside R), minimal generators.
// Scans columns over the first n-1 coordinates and solves the last
// coordinate per facet; a candidate is a minimal generator exactly when no
// neighbouring column reaches the same height.
inline MonomialIdeal interior_shift_ideal(const NewtonRegion& r) {
  const int n = r.dim();
  auto reach = axis_reaches_or_throw(r);
  if (r.facets().empty()) return unit_ideal(n);

  std::vector<Int> box(n);
  for (int i = 0; i < n; ++i) box[i] = ceil_rat(reach[i]);

  if (n == 1) {
    Int t = 0;
    for (const auto& f : r.facets()) {
      // need normal*(u+1) > offset
      Rat bound = f.offset / Rat(f.normal[0]) - 1;
      Int need = strict_above(bound);
      if (need > t) t = need;
    }
    return MonomialIdeal::from_minimal_generators(1, {{t}});
  }

  // heights[column] = minimal feasible last coordinate, or empty.
  std::map<ZVec, std::optional<Int>> heights;
  ZVec col(n - 1, Int(0));
  while (true) {
    Int t = 0;
    bool dead = false;
    for (const auto& f : r.facets()) {
      Rat partial = Rat(f.normal[n - 1]);  // the +1 shift of the last coordinate
      for (int i = 0; i < n - 1; ++i) partial += Rat(f.normal[i] * (col[i] + 1));
      if (f.normal[n - 1] == 0) {
        if (partial <= f.offset) { dead = true; break; }
      } else {
        Int need = strict_above((f.offset - partial) / Rat(f.normal[n - 1]));
        if (need > t) t = need;
      }
    }
    if (!dead && t <= box[n - 1]) heights[col] = t;
    else heights[col] = std::nullopt;

    int k = n - 2;
    while (k >= 0 && col[k] == box[k]) { col[k] = 0; --k; }
    if (k < 0) break;
    ++col[k];
  }

  std::vector<ZVec> gens;
  for (const auto& [c, t] : heights) {
    if (!t) continue;
    bool dominated = false;
    for (int i = 0; i < n - 1 && !dominated; ++i) {
      if (c[i] == 0) continue;
      ZVec parent = c;
      --parent[i];
      const auto& pt = heights.at(parent);
      if (pt && *pt <= *t) dominated = true;
    }
    if (dominated) continue;
    ZVec g = c;
    g.push_back(*t);
    gens.push_back(std::move(g));
  }
  if (gens.empty()) throw kernel_error("interior_shift_ideal: co-bounded region with empty ideal");
  return MonomialIdeal::from_minimal_generators(n, std::move(gens));
}

inline MonomialIdeal howald_multiplier(const MonomialIdeal& a, const Rat& c) {
  if (c <= 0) throw value_error("howald_multiplier: coefficient must be positive");
  if (!is_m_primary(a)) throw value_error("howald_multiplier: ideal is not m-primary");
  return interior_shift_ideal(scale(newton_region(a), c));
}

inline MonomialIdeal demailly_approximant(const NewtonRegion& p, int m) {
  if (m < 1) throw value_error("demailly_approximant: m must be >= 1");
  if (!is_co_bounded(p)) throw value_error("demailly_approximant: region is not co-bounded");
  return interior_shift_ideal(scale(p, Rat(m)));
}

struct AsymptoticMultiplierIdeal {
  MonomialIdeal ideal;
  bool stabilized = false;
  bool region_certified = false;  // equals the candidate from the asserted limit
  int last_index = 0;             // last chain index evaluated
};

// Maximal member of { J((c/q) a_q) } along the chain. With a consistent
// known_limit the candidate ideal from the limit region certifies
// stabilization as soon as the chain reaches it.
inline AsymptoticMultiplierIdeal asymptotic_multiplier(const GradedSystem& s, const Rat& c,
                                                       const Chain& chain) {
  if (c <= 0) throw value_error("asymptotic_multiplier: coefficient must be positive");
  validate_chain(chain);
  std::optional<MonomialIdeal> candidate;
  if (s.known_limit()) {
    for (int k : chain)
      if (!region_contains(*s.known_limit(), scale(s.region_at(k), Rat(1, k))))
        throw value_error("inconsistent asserted limit at k=" + std::to_string(k));
    candidate = interior_shift_ideal(scale(*s.known_limit(), c));
  }
  std::optional<MonomialIdeal> prev, last;
  int last_q = 0;
  for (int q : chain) {
    MonomialIdeal jq = interior_shift_ideal(scale(s.region_at(q), c / q));
    if (last && !ideal_contains(jq, *last))
      throw kernel_error("asymptotic_multiplier: chain is not monotone at q=" + std::to_string(q));
    if (candidate && !ideal_contains(*candidate, jq))
      throw kernel_error("asymptotic_multiplier: chain escapes the certified candidate");
    last_q = q;
    if (candidate && jq == *candidate)
      return AsymptoticMultiplierIdeal{std::move(jq), true, true, q};
    prev = std::move(last);
    last = std::move(jq);
  }
  bool stabilized = prev && *prev == *last;
  return AsymptoticMultiplierIdeal{std::move(*last), stabilized, false, last_q};
}

// Extends the chain by doubling until the multiplier ideal stabilizes or the
// index cap is hit.
inline AsymptoticMultiplierIdeal asymptotic_multiplier_adaptive(const GradedSystem& s, const Rat& c,
                                                                Chain chain, int cap = 1 << 12) {
  while (true) {
    auto b = asymptotic_multiplier(s, c, chain);
    if (b.stabilized || chain.back() * 2 > cap) return b;
    chain.push_back(chain.back() * 2);
  }
}

struct MultiplicityRow {
  int k;
  Rat ea;   // e(a_k)/k^n
  Rat eb;   // e(b_k)/k^n
  Rat gap;  // ea - eb
};

struct ElsReport {
  std::vector<MultiplicityRow> rows;
  std::optional<Rat> exact_limit;  // n! * covolume of the limit region
  bool exact = false;
  bool sandwich_ok = false;  // eb <= limit <= ea on every row
  Rat gap_last;
  bool b_stabilized = true;  // every b_k stabilized along its chain
};

inline ElsReport els_check(const GradedSystem& s, const Chain& chain) {
  if (!is_stable(s, chain)) throw value_error("els_check: system is not stable");
  const int n = s.dim();
  Int nf = factorial(n);
  auto am = asymptotic_multiplicity(s, chain);
  ElsReport out;
  if (am.exact) {
    out.exact_limit = am.estimate;
    out.exact = true;
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    int k = chain[i];
    Rat kn = 1;
    for (int j = 0; j < n; ++j) kn *= k;
    auto b = asymptotic_multiplier_adaptive(s, Rat(k), chain);
    if (!b.stabilized) out.b_stabilized = false;
    if (!ideal_contains(b.ideal, s.ideal_at(k)))
      throw kernel_error("els_check: a_k is not inside its multiplier ideal at k=" +
                         std::to_string(k));
    Rat ea = am.table[i].second;
    Rat eb = Rat(samuel_multiplicity(b.ideal)) / kn;
    if (eb > ea) throw kernel_error("els_check: eb exceeds ea at k=" + std::to_string(k));
    out.rows.push_back(MultiplicityRow{k, ea, eb, ea - eb});
  }
  out.gap_last = out.rows.back().gap;
  if (out.exact_limit) {
    out.sandwich_ok = true;
    for (const auto& r : out.rows)
      if (r.eb > *out.exact_limit || *out.exact_limit > r.ea) out.sandwich_ok = false;
  }
  return out;
}

struct KWFailure {
  Rat C, D;
  std::vector<std::pair<int, ZVec>> witnesses;  // (m, violating monomial)
};

struct KWReport {
  Rat C, D;
  int m_min = 0, m_max = 0;
  bool verified = false;
  bool ceil_index = false;
  bool b_lower_bound_only = false;  // some multiplier ideal did not stabilize
  std::vector<std::pair<int, ZVec>> witnesses;  // for the reported (C, D) when not verified
  std::vector<KWFailure> rejected;              // earlier grid points that failed
};

// Grid search for a constant C with b_{Cm+D} inside a_m across the range.
// Candidates ascend; the first verified (C, D) wins. Fractional indices use
// the exact rational coefficient unless ceil_index is set.
inline KWReport kw_constant(const GradedSystem& s, const std::vector<Rat>& c_candidates,
                            const Rat& d_max, int m_min, int m_max, bool ceil_index = false,
                            const Rat& d_step = Rat(1)) {
  if (c_candidates.empty()) throw value_error("kw_constant: empty candidate grid");
  if (m_min < 1 || m_max < m_min) throw value_error("kw_constant: bad m range");
  if (d_step <= 0) throw value_error("kw_constant: d step must be positive");
  Chain base = default_chain();
  KWReport report;
  report.m_min = m_min;
  report.m_max = m_max;
  report.ceil_index = ceil_index;
  for (const Rat& c : c_candidates) {
    if (c <= 0) throw value_error("kw_constant: candidates must be positive");
    for (Rat d = 0; d <= d_max; d += d_step) {
      std::vector<std::pair<int, ZVec>> witnesses;
      bool lower_bound_only = false;
      for (int m = m_min; m <= m_max; ++m) {
        Rat idx = c * m + d;
        if (ceil_index) idx = Rat(ceil_rat(idx));
        auto b = asymptotic_multiplier_adaptive(s, idx, base);
        if (!b.stabilized) lower_bound_only = true;
        MonomialIdeal am = s.ideal_at(m);
        std::vector<ZVec> pure, mixed;
        for (const auto& g : b.ideal.generators()) {
          if (contains_monomial(am, g)) continue;
          int support = 0;
          for (const Int& x : g)
            if (x != 0) ++support;
          (support <= 1 ? pure : mixed).push_back(g);
        }
        for (const auto& g : pure) witnesses.emplace_back(m, g);
        for (const auto& g : mixed) {
          if (witnesses.size() >= 8) break;
          witnesses.emplace_back(m, g);
        }
        if (!witnesses.empty()) break;
      }
      if (witnesses.empty() && !lower_bound_only) {
        report.C = c;
        report.D = d;
        report.verified = true;
        return report;
      }
      report.rejected.push_back(KWFailure{c, d, witnesses});
      if (lower_bound_only) report.b_lower_bound_only = true;
    }
  }
  if (report.rejected.empty()) throw value_error("kw_constant: empty D grid");
  // Nothing verified: report the last (largest-C) failure.
  report.C = report.rejected.back().C;
  report.D = report.rejected.back().D;
  report.witnesses = report.rejected.back().witnesses;
  report.verified = false;
  return report;
}

enum class TamenessVerdict { TameWithC, InconclusiveGrowing };

struct TamenessReport {
  std::vector<std::pair<int, Rat>> per_m;  // (m, C_m)
  Rat C;                                   // max over the range
  TamenessVerdict verdict = TamenessVerdict::TameWithC;
};

// Smallest C_m with (1/m) P(J(m phi)) inside (1 - C_m/m) P, per index. The
// unconditional containment P inside (1/m) P(J(m phi)) is asserted as a
// kernel invariant.
inline TamenessReport tameness_check(const NewtonRegion& p, int m_max) {
  if (!is_co_bounded(p)) throw value_error("tameness_check: region is not co-bounded");
  if (m_max < 1) throw value_error("tameness_check: empty m range");
  TamenessReport out;
  for (int m = 1; m <= m_max; ++m) {
    NewtonRegion rm = scale(newton_region(demailly_approximant(p, m)), Rat(1, m));
    if (!region_contains(rm, p))
      throw kernel_error("tameness_check: approximant region lost the weight at m=" +
                         std::to_string(m));
    // Largest shrink factor s with scale(p, s) containing rm; every facet
    // offset of a co-bounded region is positive.
    std::optional<Rat> s_max;
    for (const auto& v : rm.vertices()) {
      for (const auto& f : p.facets()) {
        Rat ratio = dot(f.normal, v) / f.offset;
        if (!s_max || ratio < *s_max) s_max = ratio;
      }
    }
    Rat cm = s_max ? Rat(m) * (Rat(1) - *s_max) : Rat(0);
    if (cm < 0) cm = 0;
    out.per_m.emplace_back(m, cm);
  }
  out.C = out.per_m.front().second;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < out.per_m.size(); ++i) {
    if (out.per_m[i].second > out.C) {
      out.C = out.per_m[i].second;
      argmax = i;
    }
  }
  bool growing_tail = out.per_m.size() >= 2 && argmax == out.per_m.size() - 1 &&
                      out.per_m[argmax].second > out.per_m[argmax - 1].second;
  out.verdict = growing_tail ? TamenessVerdict::InconclusiveGrowing : TamenessVerdict::TameWithC;
  return out;
}

}  // namespace nmult
