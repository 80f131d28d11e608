// Exact volume of a bounded polytope given by half-spaces <a,u> >= c.
// Vertices come from basic solutions; the volume comes from a fan
// triangulation over facets, recursing into each facet by eliminating one
// coordinate. Everything is rational.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nmult/linalg.hpp"
#include "nmult/rational.hpp"

namespace nmult {

struct HalfSpace {
  QVec normal;  // <normal, u> >= offset
  Rat offset;
};

inline std::vector<QVec> vertices_of_hrep(const std::vector<HalfSpace>& cons, int d) {
  std::vector<QVec> out;
  const int m = (int)cons.size();
  if (m < d) return out;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    QMat a(d, QVec(d));
    QVec b(d);
    for (int i = 0; i < d; ++i) {
      a[i] = cons[idx[i]].normal;
      b[i] = cons[idx[i]].offset;
    }
    if (auto x = solve_square(a, b)) {
      bool feasible = true;
      for (const auto& h : cons)
        if (dot(h.normal, *x) < h.offset) { feasible = false; break; }
      if (feasible) out.push_back(std::move(*x));
    }
    // next combination
    int k = d - 1;
    while (k >= 0 && idx[k] == m - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const QVec& x, const QVec& y) { return lex_less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Canonical integer form (normal..., offset) of a half-space, primitive.
inline ZVec halfspace_key(const HalfSpace& h) {
  Int lcm = 1;
  for (const Rat& q : h.normal) lcm = lcm / gcd_int(lcm, rat_den(q)) * rat_den(q);
  lcm = lcm / gcd_int(lcm, rat_den(h.offset)) * rat_den(h.offset);
  ZVec key;
  key.reserve(h.normal.size() + 1);
  for (const Rat& q : h.normal) key.push_back(rat_num(q * lcm));
  key.push_back(rat_num(h.offset * lcm));
  make_primitive(key);
  return key;
}

inline std::vector<HalfSpace> dedupe_halfspaces(const std::vector<HalfSpace>& cons) {
  std::vector<HalfSpace> out;
  std::vector<ZVec> seen;
  for (const auto& h : cons) {
    ZVec key = halfspace_key(h);
    bool zero = true;
    for (const Int& x : key) if (x != 0) { zero = false; break; }
    if (zero) continue;  // trivial 0 >= 0
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(std::move(key));
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace detail

// Simplices (d+1 points each) triangulating the polytope; empty when the
// polytope has dimension < d.
inline std::vector<std::vector<QVec>> triangulate_hrep(const std::vector<HalfSpace>& cons_in, int d) {
  std::vector<std::vector<QVec>> out;
  if (d == 1) {
    std::optional<Rat> lo, hi;
    for (const auto& h : cons_in) {
      const Rat& a = h.normal[0];
      if (a == 0) {
        if (h.offset > 0) return out;  // infeasible
        continue;
      }
      Rat bound = h.offset / a;
      if (a > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (!lo || !hi) throw kernel_error("triangulate_hrep: unbounded segment");
    if (*lo < *hi) out.push_back({QVec{*lo}, QVec{*hi}});
    return out;
  }

  auto cons = detail::dedupe_halfspaces(cons_in);
  auto verts = vertices_of_hrep(cons, d);
  if ((int)verts.size() < d + 1 || affine_rank(verts) < d) return out;
  const QVec& apex = verts.front();  // lex-min

  for (std::size_t ci = 0; ci < cons.size(); ++ci) {
    const auto& f = cons[ci];
    if (dot(f.normal, apex) == f.offset) continue;
    std::vector<QVec> tight;
    for (const auto& v : verts)
      if (dot(f.normal, v) == f.offset) tight.push_back(v);
    if ((int)tight.size() < d || affine_rank(tight) < d - 1) continue;

    int k = 0;
    while (f.normal[k] == 0) ++k;
    const Rat& ak = f.normal[k];

    // Substitute u_k = (offset - sum_{j != k} a_j u_j) / a_k into the rest.
    std::vector<HalfSpace> sub;
    bool facet_empty = false;
    for (std::size_t cj = 0; cj < cons.size(); ++cj) {
      if (cj == ci) continue;
      const auto& g = cons[cj];
      QVec nb;
      nb.reserve(d - 1);
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        nb.push_back(g.normal[j] - g.normal[k] * f.normal[j] / ak);
      }
      Rat ne = g.offset - g.normal[k] * f.offset / ak;
      bool allzero = true;
      for (const Rat& q : nb) if (q != 0) { allzero = false; break; }
      if (allzero) {
        if (ne > 0) { facet_empty = true; break; }
        continue;
      }
      sub.push_back(HalfSpace{std::move(nb), std::move(ne)});
    }
    if (facet_empty) continue;

    for (auto& s : triangulate_hrep(sub, d - 1)) {
      std::vector<QVec> simplex;
      simplex.reserve(d + 1);
      simplex.push_back(apex);
      for (auto& p : s) {
        QVec lifted(d);
        Rat acc = f.offset;
        int t = 0;
        for (int j = 0; j < d; ++j) {
          if (j == k) continue;
          lifted[j] = p[t];
          acc -= f.normal[j] * p[t];
          ++t;
        }
        lifted[k] = acc / ak;
        simplex.push_back(std::move(lifted));
      }
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

inline Rat volume_of_hrep(const std::vector<HalfSpace>& cons, int d) {
  Rat vol = 0;
  for (const auto& s : triangulate_hrep(cons, d)) {
    QMat edges(d, QVec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) edges[i][j] = s[i + 1][j] - s[0][j];
    Rat dv = det(edges);
    if (dv < 0) dv = -dv;
    vol += dv;
  }
  return vol / Rat(factorial(d));
}

}  // namespace nmult
