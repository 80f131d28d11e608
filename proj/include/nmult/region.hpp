// Newton regions: rational polyhedra of the form conv(V) + R_{>=0}^n inside
// the nonnegative orthant. A region is stored canonically (lex-sorted
// vertices, primitive integer facet normals), so structural equality decides
// set equality. Facets list only the lower-hull half-spaces <w,u> >= c; the
// ambient orthant constraints u_i >= 0 are implicit and never listed.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nmult/dd.hpp"
#include "nmult/polytope.hpp"
#include "nmult/rational.hpp"

namespace nmult {

struct Facet {
  ZVec normal;  // componentwise >= 0, not all zero, primitive
  Rat offset;   // half-space <normal, u> >= offset
  bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

class NewtonRegion {
 public:
  NewtonRegion(int dim, std::vector<QVec> vertices, std::vector<Facet> facets)
      : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  int dim() const { return dim_; }
  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool operator==(const NewtonRegion& o) const {
    return dim_ == o.dim_ && vertices_ == o.vertices_ && facets_ == o.facets_;
  }
  bool operator!=(const NewtonRegion& o) const { return !(*this == o); }

 private:
  int dim_;
  std::vector<QVec> vertices_;
  std::vector<Facet> facets_;
};

// Trusts the caller that `mins` is a componentwise antichain without
// duplicates. This is the hot entry: multiplier-ideal hulls can have
// thousands of minimal generators.
inline NewtonRegion region_from_minimal_generators(int dim, const std::vector<QVec>& mins) {
  if (dim < 1) throw value_error("region dimension must be >= 1");
  if (mins.empty()) throw value_error("empty ideal: a region needs at least one generator");

  // Facets of conv(mins)+orthant via the polar cone of the homogenization:
  // rays of { y : <(g,1), y> >= 0, <(e_i,0), y> >= 0 }.
  std::vector<ZVec> rows;
  rows.reserve(mins.size() + dim);
  for (const auto& g : mins) {
    Int lcm = 1;
    for (const Rat& q : g) lcm = lcm / gcd_int(lcm, rat_den(q)) * rat_den(q);
    ZVec row(dim + 1);
    for (int i = 0; i < dim; ++i) row[i] = rat_num(g[i] * lcm);
    row[dim] = lcm;
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < dim; ++i) {
    ZVec row(dim + 1, Int(0));
    row[i] = 1;
    rows.push_back(std::move(row));
  }

  std::vector<Facet> facets;
  for (const ZVec& ray : cone_extreme_rays(rows, dim + 1)) {
    ZVec w(ray.begin(), ray.begin() + dim);
    bool wzero = true;
    int support = 0;
    for (const Int& x : w) {
      if (x != 0) { wzero = false; ++support; }
    }
    if (wzero) continue;                      // recession facet of the cone
    if (support == 1 && ray[dim] == 0) continue;  // ambient orthant facet
    Int content = 0;
    for (const Int& x : w) content = gcd_int(content, x);
    Rat offset = Rat(-ray[dim], content);
    for (Int& x : w) x /= content;
    facets.push_back(Facet{std::move(w), std::move(offset)});
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });

  // Vertices: generators whose tight constraints (facets plus coordinate
  // hyperplanes) have full rank.
  std::vector<QVec> verts;
  for (const auto& g : mins) {
    QMat tight;
    for (const auto& f : facets)
      if (dot(f.normal, g) == f.offset) tight.push_back(to_qvec(f.normal));
    for (int i = 0; i < dim; ++i) {
      if (g[i] == 0) {
        QVec e(dim, Rat(0));
        e[i] = 1;
        tight.push_back(std::move(e));
      }
    }
    if (rank_of(tight) == dim) verts.push_back(g);
  }
  std::sort(verts.begin(), verts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
  if (verts.empty()) throw kernel_error("region with no vertices");
  return NewtonRegion(dim, std::move(verts), std::move(facets));
}

inline NewtonRegion region_from_generators(int dim, const std::vector<QVec>& gens) {
  if (dim < 1) throw value_error("region dimension must be >= 1");
  if (gens.empty()) throw value_error("empty ideal: a region needs at least one generator");
  for (const auto& g : gens) {
    if ((int)g.size() != dim) throw value_error("generator dimension mismatch");
    for (const Rat& x : g)
      if (x < 0) throw value_error("generator with negative coordinate");
  }
  std::vector<QVec> mins;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens)
      if (h != g && dominates(g, h)) { dominated = true; break; }
    if (!dominated && std::find(mins.begin(), mins.end(), g) == mins.end())
      mins.push_back(g);
  }
  return region_from_minimal_generators(dim, mins);
}

inline NewtonRegion region_from_generators(int dim, const std::vector<ZVec>& gens) {
  std::vector<QVec> q;
  q.reserve(gens.size());
  for (const auto& g : gens) q.push_back(to_qvec(g));
  return region_from_generators(dim, std::move(q));
}

// The region of the maximal ideal: conv(e_1, ..., e_n) + orthant.
inline NewtonRegion simplex_region(int dim) {
  std::vector<QVec> gens;
  for (int i = 0; i < dim; ++i) {
    QVec e(dim, Rat(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return region_from_generators(dim, std::move(gens));
}

inline NewtonRegion scale(const NewtonRegion& p, const Rat& t) {
  if (t <= 0) throw value_error("scale factor must be positive");
  std::vector<QVec> verts = p.vertices();
  for (auto& v : verts)
    for (auto& x : v) x *= t;
  std::vector<Facet> facets = p.facets();
  for (auto& f : facets) f.offset *= t;
  return NewtonRegion(p.dim(), std::move(verts), std::move(facets));
}

inline NewtonRegion minkowski_sum(const NewtonRegion& p, const NewtonRegion& q) {
  if (p.dim() != q.dim()) throw value_error("minkowski_sum: dimension mismatch");
  std::vector<QVec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      QVec s(p.dim());
      for (int i = 0; i < p.dim(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return region_from_generators(p.dim(), std::move(sums));
}

// Smallest t with t*e_i in the region; empty when the axis is never reached.
inline std::optional<Rat> axis_reach(const NewtonRegion& p, int i) {
  Rat reach = 0;
  for (const auto& f : p.facets()) {
    if (f.normal[i] == 0) {
      if (f.offset > 0) return std::nullopt;
    } else {
      Rat t = f.offset / Rat(f.normal[i]);
      if (t > reach) reach = t;
    }
  }
  return reach;
}

inline bool is_co_bounded(const NewtonRegion& p) {
  for (int i = 0; i < p.dim(); ++i)
    if (!axis_reach(p, i)) return false;
  return true;
}

inline Rat support_value(const NewtonRegion& p, const QVec& w) {
  if ((int)w.size() != p.dim()) throw value_error("support_value: dimension mismatch");
  bool positive = false;
  for (const Rat& x : w) {
    if (x < 0) throw value_error("support_value: weight must be componentwise nonnegative");
    if (x > 0) positive = true;
  }
  if (!positive) throw value_error("support_value: zero weight");
  // The recession cone is the orthant, so the minimum sits at a vertex.
  Rat best = dot(w, p.vertices().front());
  for (const auto& v : p.vertices()) {
    Rat s = dot(w, v);
    if (s < best) best = s;
  }
  return best;
}

inline Rat support_value(const NewtonRegion& p, const ZVec& w) {
  return support_value(p, to_qvec(w));
}

// Q subset of P, decided vertex-against-facet.
inline bool region_contains(const NewtonRegion& p, const NewtonRegion& q) {
  if (p.dim() != q.dim()) throw value_error("region_contains: dimension mismatch");
  for (const auto& v : q.vertices())
    for (const auto& f : p.facets())
      if (dot(f.normal, v) < f.offset) return false;
  return true;
}

// Strictly inside every lower-hull facet; points on ambient coordinate
// hyperplanes still count as interior here.
inline bool interior_contains(const NewtonRegion& p, const QVec& u) {
  if ((int)u.size() != p.dim()) throw value_error("interior_contains: dimension mismatch");
  for (const auto& f : p.facets())
    if (dot(f.normal, u) <= f.offset) return false;
  return true;
}

inline std::vector<Rat> axis_reaches_or_throw(const NewtonRegion& p) {
  std::vector<Rat> d(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    auto r = axis_reach(p, i);
    if (!r) throw value_error("infinite covolume: region is not co-bounded");
    d[i] = *r;
  }
  return d;
}

// General path: box volume minus the exact volume of region-within-box.
inline Rat covolume_by_triangulation(const NewtonRegion& p) {
  auto d = axis_reaches_or_throw(p);
  Rat volbox = 1;
  for (const Rat& x : d) volbox *= x;
  if (volbox == 0) return Rat(0);
  std::vector<HalfSpace> cons;
  for (const auto& f : p.facets()) cons.push_back(HalfSpace{to_qvec(f.normal), f.offset});
  for (int i = 0; i < p.dim(); ++i) {
    QVec lo(p.dim(), Rat(0)), hi(p.dim(), Rat(0));
    lo[i] = 1;
    hi[i] = -1;
    cons.push_back(HalfSpace{std::move(lo), Rat(0)});
    cons.push_back(HalfSpace{std::move(hi), -d[i]});
  }
  return volbox - volume_of_hrep(cons, p.dim());
}

// Exact volume of orthant \ P. Dimension two goes through the staircase
// trapezoid formula; the triangulation path covers the rest and doubles as a
// cross-check in tests.
inline Rat covolume(const NewtonRegion& p) {
  auto d = axis_reaches_or_throw(p);
  if (p.dim() == 1) return d[0];
  if (p.dim() == 2) {
    const auto& vs = p.vertices();  // lex order: u1 increasing, u2 decreasing
    if (vs.front()[0] != 0 || vs.back()[1] != 0)
      throw kernel_error("staircase covolume: vertices do not touch both axes");
    Rat area = 0;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
      area += (vs[i + 1][0] - vs[i][0]) * (vs[i][1] + vs[i + 1][1]) / 2;
    return area;
  }
  return covolume_by_triangulation(p);
}

// Counts grid points of (1/N)Z^n inside the bounding box but outside P.
inline Rat covolume_grid_oracle(const NewtonRegion& p, long N) {
  if (N < 1) throw value_error("grid oracle: N must be positive");
  auto d = axis_reaches_or_throw(p);
  const int n = p.dim();
  std::vector<Int> J(n);
  for (int i = 0; i < n; ++i) J[i] = floor_rat(d[i] * N);
  if (p.facets().empty()) return Rat(0);

  Int total = 0;
  std::vector<Int> col(n - 1, Int(0));
  while (true) {
    // Points (col, j)/N outside P form a union of prefixes in j; per facet
    // <w,u> < c the violating j are j < (cN - partial)/w_n.
    Int count = 0;
    for (const auto& f : p.facets()) {
      Int partial = 0;
      for (int i = 0; i < n - 1; ++i) partial += f.normal[i] * col[i];
      Rat bound = f.offset * N - partial;
      Int cf;
      if (f.normal[n - 1] == 0) {
        cf = bound > 0 ? J[n - 1] + 1 : Int(0);
      } else {
        cf = count_below(bound / Rat(f.normal[n - 1]));
        if (cf > J[n - 1] + 1) cf = J[n - 1] + 1;
      }
      if (cf > count) count = cf;
    }
    total += count;
    int k = n - 2;
    while (k >= 0 && col[k] == J[k]) { col[k] = 0; --k; }
    if (k < 0) break;
    ++col[k];
  }
  Rat norm = 1;
  for (int i = 0; i < n; ++i) norm *= N;
  return Rat(total) / norm;
}

// Polarization of covolume, normalized so the diagonal gives covolume back.
inline Rat mixed_covolume(const std::vector<NewtonRegion>& ps) {
  if (ps.empty()) throw value_error("mixed_covolume: no arguments");
  const int n = ps.front().dim();
  if ((int)ps.size() != n)
    throw value_error("mixed_covolume: needs exactly n regions in dimension n");
  for (const auto& p : ps) {
    if (p.dim() != n) throw value_error("mixed_covolume: dimension mismatch");
    if (!is_co_bounded(p)) throw value_error("mixed_covolume: region is not co-bounded");
  }
  std::vector<std::optional<NewtonRegion>> sums(1u << n);
  Rat acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int bit = __builtin_ctz(mask);
    if (low == 0)
      sums[mask] = ps[bit];
    else
      sums[mask] = minkowski_sum(*sums[low], ps[bit]);
    int popcount = __builtin_popcount(mask);
    Rat c = covolume(*sums[mask]);
    acc += ((n - popcount) % 2 == 0) ? c : -c;
  }
  return acc / Rat(factorial(n));
}

inline std::string region_text(const NewtonRegion& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (int j = 0; j < p.dim(); ++j) {
      if (j) s += ",";
      s += to_string(p.vertices()[i][j]);
    }
    s += ")";
  }
  s += "}";
  return s;
}

}  // namespace nmult
