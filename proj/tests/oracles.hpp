// Test-only oracles, kept independent of the enumeration and determinant
// code they are used to check.
#ifndef HOOKSUM_TESTS_ORACLES_HPP
#define HOOKSUM_TESTS_ORACLES_HPP

#include <map>
#include <set>
#include <vector>

#include "hooksum/matrixtree.hpp"
#include "hooksum/polynomial.hpp"
#include "hooksum/trees.hpp"

namespace hooksum::oracles {

// Every rooted tree on A by brute force: each non-root vertex tries every
// possible father; keep the father maps whose iteration reaches the root.
inline std::set<RootedTree> brute_force_trees(const LabelSet& a) {
  const auto& ls = a.labels();
  const int root = a.min();
  std::vector<int> nonroot(ls.begin() + 1, ls.end());
  std::set<RootedTree> out;

  std::vector<std::size_t> pick(nonroot.size(), 0);
  while (true) {
    std::map<int, int> father;
    for (std::size_t k = 0; k < nonroot.size(); ++k) {
      // candidate fathers of nonroot[k]: indices 0..n-2 cover every other
      // label, with the last label standing in for the vertex itself
      std::size_t idx = pick[k];
      father[nonroot[k]] = ls[idx] == nonroot[k] ? ls.back() : ls[idx];
    }
    // acyclicity: walk up from each vertex
    bool ok = true;
    for (int v : nonroot) {
      int u = v;
      std::size_t steps = 0;
      while (u != root && ok) {
        auto it = father.find(u);
        if (it == father.end() || ++steps >= ls.size()) ok = false;
        else u = it->second;
      }
      if (!ok) break;
    }
    if (ok) out.emplace(a, father);

    std::size_t k = pick.size();
    while (k > 0) {
      if (++pick[k - 1] < ls.size() - 1) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

// Determinant by cofactor expansion along the first column; the independent
// route checked against Bareiss elimination.
inline Polynomial det_naive(const PolyMatrix& m) {
  if (m.dim() == 0) return Polynomial(1);
  if (m.dim() == 1) return m.at(0, 0);
  Polynomial det;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    PolyMatrix sub(m.dim() - 1);
    for (std::size_t i = 0, si = 0; i < m.dim(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 1; j < m.dim(); ++j) sub.at(si, j - 1) = m.at(i, j);
      ++si;
    }
    Polynomial c = m.at(r, 0) * det_naive(sub);
    if (r % 2 == 0) det += c;
    else det -= c;
  }
  return det;
}

}  // namespace hooksum::oracles

#endif  // HOOKSUM_TESTS_ORACLES_HPP
