#include <doctest.h>

#include "hooksum/weights.hpp"

using namespace hooksum;

namespace {

RootedTree make(std::vector<int> labels, std::map<int, int> father) {
  return RootedTree(LabelSet(std::move(labels)), std::move(father));
}

// All decorations of an increasing tree allowed by the hook condition
// alone: phi(v) in hook(v) with phi(v) >= v for every non-root vertex.
template <typename Fn>
void for_each_hook_map(const RootedTree& t, Fn&& fn) {
  std::vector<int> verts;
  std::vector<std::vector<int>> allowed;
  for (const auto& [v, f] : t.father_map()) {
    verts.push_back(v);
    std::vector<int> vals;
    for (int u : hook(t, v))
      if (u >= v) vals.push_back(u);
    allowed.push_back(vals);
  }
  std::vector<std::size_t> pick(verts.size(), 0);
  while (true) {
    std::map<int, int> phi;
    for (std::size_t k = 0; k < verts.size(); ++k) phi[verts[k]] = allowed[k][pick[k]];
    fn(phi);
    std::size_t k = pick.size();
    while (k > 0) {
      if (++pick[k - 1] < allowed[k - 1].size()) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
}

}  // namespace

TEST_CASE("hook weight on small trees") {
  CHECK(hook_weight(make({1, 2}, {{2, 1}})) == xv(1) * yv(2, 2));

  RootedTree path = make({1, 2, 3}, {{2, 1}, {3, 2}});
  CHECK(hook_weight(path) == xv(1) * (yv(2, 2) + yv(2, 3)) * xv(2) * yv(3, 3));

  RootedTree star = make({1, 2, 3}, {{2, 1}, {3, 1}});
  CHECK(hook_weight(star) == xv(1) * yv(2, 2) * xv(1) * yv(3, 3));

  CHECK(hook_weight(make({4}, {})) == Polynomial(1));
  CHECK_THROWS_AS(hook_weight(make({1, 2, 3}, {{3, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("root hook factor") {
  CHECK(root_hook_factor(LabelSet({1, 2, 3})) == yv(1, 1) + yv(1, 2) + yv(1, 3));
  CHECK(root_hook_factor(LabelSet({1})) == yv(1, 1));
  CHECK(root_hook_factor(LabelSet({2, 5})) == yv(2, 2) + yv(2, 5));
  CHECK(root_hook_factor(make({2, 5}, {{5, 2}})) == yv(2, 2) + yv(2, 5));
}

TEST_CASE("cayley weight") {
  RootedTree path = make({1, 2, 3}, {{2, 1}, {3, 2}});
  CHECK(cayley_weight(path) == xv(1) * yv(2, 2) * xv(2) * yv(3, 3));

  RootedTree twisted = make({1, 2, 3}, {{3, 1}, {2, 3}});
  CHECK(cayley_weight(twisted) == xv(1) * yv(3, 3) * xv(2) * yv(2, 3));

  CHECK(cayley_weight(make({1, 2}, {{2, 1}})) == xv(1) * yv(2, 2));
}

TEST_CASE("decorated weight") {
  RootedTree path = make({1, 2, 3}, {{2, 1}, {3, 2}});
  CHECK(decorated_weight(path, {{2, 3}, {3, 3}}) ==
        xv(1) * yv(2, 3) * xv(2) * yv(3, 3));
  // identity decoration reduces to the cayley weight
  CHECK(decorated_weight(path, {{2, 2}, {3, 3}}) == cayley_weight(path));

  RootedTree twisted = make({1, 2, 3}, {{3, 1}, {2, 3}});
  CHECK(decorated_weight(twisted, {{3, 3}}) == xv(1) * yv(3, 3) * xv(2) * yv(2, 3));
  CHECK(decorated_weight(twisted, {{3, 3}}) == cayley_weight(twisted));
}

TEST_CASE("identity decoration matches cayley weight on every tree") {
  for (auto labels : {std::vector<int>{1, 2, 3, 4}, {2, 4, 7, 9}}) {
    CayleyEnumeration en{LabelSet(labels)};
    while (auto t = en.next()) {
      std::map<int, int> phi;
      for (const auto& [v, f] : t->father_map())
        if (f < v) phi[v] = v;
      CHECK(decorated_weight(*t, phi) == cayley_weight(*t));
    }
  }
}

TEST_CASE("hook weight expands into decorated weights") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    IncreasingEnumeration en{LabelSet(labels)};
    while (auto t = en.next()) {
      Polynomial expanded;
      for_each_hook_map(*t, [&](const std::map<int, int>& phi) {
        expanded += decorated_weight(*t, phi);
      });
      CHECK(expanded == hook_weight(*t));
    }
  }
}

TEST_CASE("weights are monomials of the right degree") {
  LabelSet a({1, 3, 4, 6});
  CayleyEnumeration en(a);
  while (auto t = en.next()) {
    Polynomial w = cayley_weight(*t);
    CHECK(w.is_monic_monomial());
    CHECK(w.total_degree() == 2 * (static_cast<int>(a.size()) - 1));
    std::map<int, int> phi;
    for (const auto& [v, f] : t->father_map())
      if (f < v) phi[v] = v;
    CHECK(decorated_weight(*t, phi).is_monic_monomial());
    if (is_increasing_tree(*t)) {
      Polynomial hw = hook_weight(*t);
      CHECK(hw.total_degree() == 2 * (static_cast<int>(a.size()) - 1));
    }
  }
}
