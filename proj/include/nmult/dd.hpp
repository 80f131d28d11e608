// Double description: extreme rays of a pointed polyhedral cone
//   { y in R^d : <row_i, y> >= 0 }
// from integer inequality rows of full column rank d. This is the exact
// H-to-V workhorse behind every hull computation in the library; cost scales
// with the number of extreme rays, which stays small at desk dimensions even
// when the constraint list is large.
#pragma once

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>
#include <vector>

#include "nmult/linalg.hpp"
#include "nmult/rational.hpp"

namespace nmult {

namespace detail {

struct DDRay {
  ZVec dir;                       // primitive integer direction
  boost::dynamic_bitset<> tight;  // processed rows where <row, dir> == 0
};

}  // namespace detail

inline std::vector<ZVec> cone_extreme_rays(const std::vector<ZVec>& rows_in, int d) {
  // Normalize and dedupe, keeping first-occurrence order.
  std::vector<ZVec> rows;
  rows.reserve(rows_in.size());
  std::set<ZVec> seen;
  for (ZVec r : rows_in) {
    make_primitive(r);
    bool zero = true;
    for (const Int& x : r) if (x != 0) { zero = false; break; }
    if (zero) continue;
    if (seen.insert(r).second) rows.push_back(std::move(r));
  }
  const std::size_t m = rows.size();

  // Greedy independent subset of rows, in input order.
  std::vector<std::size_t> basis;
  {
    QMat acc;
    for (std::size_t i = 0; i < m && (int)basis.size() < d; ++i) {
      acc.push_back(to_qvec(rows[i]));
      if (rank_of(acc) == (int)acc.size())
        basis.push_back(i);
      else
        acc.pop_back();
    }
  }
  if ((int)basis.size() != d)
    throw kernel_error("cone_extreme_rays: constraint rows do not have full rank");

  // Initial simplicial cone: rays are the columns of the inverse basis matrix.
  std::vector<detail::DDRay> rays;
  {
    QMat b(d, QVec(d));
    for (int i = 0; i < d; ++i) b[i] = to_qvec(rows[basis[i]]);
    for (int j = 0; j < d; ++j) {
      QVec e(d, Rat(0));
      e[j] = 1;
      auto col = solve_square(b, e);
      if (!col) throw kernel_error("cone_extreme_rays: singular basis");
      Int lcm = 1;
      for (const Rat& q : *col) lcm = lcm / gcd_int(lcm, rat_den(q)) * rat_den(q);
      ZVec dir(d);
      for (int i = 0; i < d; ++i) dir[i] = rat_num((*col)[i] * lcm);
      make_primitive(dir);
      detail::DDRay ray{std::move(dir), boost::dynamic_bitset<>(m)};
      for (int i = 0; i < d; ++i)
        if (i != j) ray.tight.set(basis[i]);
      rays.push_back(std::move(ray));
    }
  }

  std::vector<bool> in_basis(m, false);
  for (auto i : basis) in_basis[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (in_basis[i]) continue;
    const ZVec& a = rows[i];
    std::vector<int> pos, zero, neg;
    std::vector<Int> vals(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(a, rays[r].dir);
      if (vals[r] > 0) pos.push_back((int)r);
      else if (vals[r] < 0) neg.push_back((int)r);
      else zero.push_back((int)r);
    }
    if (neg.empty()) {
      for (int r : zero) rays[r].tight.set(i);
      continue;
    }
    std::vector<detail::DDRay> created;
    for (int p : pos) {
      for (int n : neg) {
        // Fukuda-Prodon adjacency: no third ray's tight set contains the
        // common tight set of the pair.
        boost::dynamic_bitset<> common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size(); ++q) {
          if ((int)q == p || (int)q == n) continue;
          if (common.is_subset_of(rays[q].tight)) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        ZVec dir(d);
        for (int j = 0; j < d; ++j)
          dir[j] = vals[p] * rays[n].dir[j] - vals[n] * rays[p].dir[j];
        make_primitive(dir);
        common.set(i);
        created.push_back(detail::DDRay{std::move(dir), std::move(common)});
      }
    }
    std::vector<detail::DDRay> next;
    next.reserve(pos.size() + zero.size() + created.size());
    for (int r : pos) next.push_back(std::move(rays[r]));
    for (int r : zero) {
      rays[r].tight.set(i);
      next.push_back(std::move(rays[r]));
    }
    for (auto& r : created) next.push_back(std::move(r));
    rays = std::move(next);
    if (rays.size() > 200000)
      throw kernel_error("cone_extreme_rays: intermediate ray explosion");
  }

  std::vector<ZVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.dir));
  std::sort(out.begin(), out.end(), [](const ZVec& x, const ZVec& y) { return lex_less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nmult
