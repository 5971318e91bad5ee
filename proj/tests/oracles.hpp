#pragma once

#include <set>

#include "hypint/lattice.hpp"
#include "hypint/types.hpp"

namespace oracle {

using hypint::Int;
using hypint::Mat;
using hypint::Rat;
using hypint::Vec;

inline Int fact(std::int64_t n) {
  Int r = 1;
  for (std::int64_t k = 2; k <= n; ++k) r *= static_cast<long>(k);
  return r;
}

inline Rat ratio(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Mat cubic_points() {
  return {{1, 1, 1, 0, 1}, {0, 1, 1, 1, 1}, {3, 0, 0, 0, 1}, {0, 3, 0, 0, 1}, {0, 0, 3, 0, 1}, {0, 0, 0, 3, 1}};
}
inline hypint::LatticeConfig cubic() { return hypint::LatticeConfig(cubic_points(), {0, 1}); }
inline hypint::LatticeConfig smallest() { return hypint::LatticeConfig({{0, 1}, {1, 1}}, {0, 1}); }
inline hypint::LatticeConfig binomial_line() { return hypint::LatticeConfig({{0, 1}, {1, 1}, {2, 1}}, {1}); }

/// Lattice points reachable from 0 by steps +-a_j without leaving [-R, R]^n.
inline std::set<Vec> reachable(const Mat& points, std::int64_t R) {
  const std::size_t n = points.front().size();
  std::set<Vec> seen{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    Vec v = frontier.back();
    frontier.pop_back();
    for (const auto& a : points)
      for (int s : {1, -1}) {
        Vec w = v;
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) {
          w[i] += s * a[i];
          inside = inside && w[i] >= -R && w[i] <= R;
        }
        if (inside && seen.insert(w).second) frontier.push_back(w);
      }
  }
  return seen;
}

}  // namespace oracle
