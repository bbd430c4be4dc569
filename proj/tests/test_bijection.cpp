#include <doctest.h>

#include <map>
#include <set>

#include "hooksum/bijection.hpp"

using namespace hooksum;

namespace {

RootedTree make(std::vector<int> labels, std::map<int, int> father) {
  return RootedTree(LabelSet(std::move(labels)), std::move(father));
}

std::vector<DecoratedTree> drain(LabelSet a,
                                 std::optional<DecorationIndex> only = std::nullopt) {
  std::vector<DecoratedTree> out;
  DecoratedEnumeration en(std::move(a), only);
  while (auto d = en.next()) out.push_back(*d);
  return out;
}

const RootedTree kPath123 = make({1, 2, 3}, {{2, 1}, {3, 2}});
const RootedTree kTwisted = make({1, 2, 3}, {{3, 1}, {2, 3}});

}  // namespace

TEST_CASE("validate: worked three-vertex examples") {
  CHECK(validate(kPath123, {{2, 3}, {3, 3}}) == DecorationIndex{0, 1});
  CHECK(validate(kPath123, {{2, 2}, {3, 3}}) == DecorationIndex{0, 0});
  CHECK(validate(kTwisted, {{3, 3}}) == DecorationIndex{1, 0});
}

TEST_CASE("validate: distinct error per condition") {
  auto expect_error = [](const RootedTree& t, const std::map<int, int>& phi,
                         int condition, int vertex) {
    try {
      validate(t, phi);
      FAIL_CHECK("expected DecorationError");
    } catch (const DecorationError& e) {
      CHECK(e.condition == condition);
      CHECK(e.vertex == vertex);
    }
  };

  // domain mismatch: 3 is increasing but missing from phi
  expect_error(kPath123, {{2, 2}}, 0, 3);
  // phi(2)=1 escapes the hook/order condition
  expect_error(kPath123, {{2, 1}, {3, 3}}, 1, 2);

  // 1->3->2 plus 3->4: increasing 3 and 4, decreasing 2. Displacing 4
  // breaks the order against the decreasing vertex.
  RootedTree w = make({1, 2, 3, 4}, {{3, 1}, {2, 3}, {4, 3}});
  CHECK(validate(w, {{3, 3}, {4, 4}}) == DecorationIndex{1, 0});
  expect_error(w, {{3, 4}, {4, 4}}, 3, 3);

  // 1->3, 3->2 (decreasing), 2->4, 4->5: the root path of 4 passes the
  // decreasing vertex 2, so displacing 4 trips the clean-path condition.
  RootedTree z = make({1, 2, 3, 4, 5}, {{3, 1}, {2, 3}, {4, 2}, {5, 4}});
  expect_error(z, {{3, 3}, {4, 5}, {5, 5}}, 2, 4);
}

TEST_CASE("validate accepts mixed indices") {
  // 1->2->4->3: increasing 2 and 4, decreasing 3.
  RootedTree t = make({1, 2, 3, 4}, {{2, 1}, {4, 2}, {3, 4}});
  CHECK(validate(t, {{2, 2}, {4, 4}}) == DecorationIndex{1, 0});
  // phi(2)=3 is displaced, 2 < 3 = min decreasing, root path of 2 is clean.
  CHECK(validate(t, {{2, 3}, {4, 4}}) == DecorationIndex{1, 1});
}

TEST_CASE("unsort_step: the worked trace") {
  DecoratedTree d{kPath123, {{2, 3}, {3, 3}}};
  DecoratedTree u = unsort_step(d);
  CHECK(u.tree == kTwisted);
  CHECK(u.phi == std::map<int, int>{{3, 3}});
  CHECK(validate(u) == DecorationIndex{1, 0});
  CHECK(u.weight() == d.weight());
  CHECK(d.weight() == xv(1) * yv(2, 3) * xv(2) * yv(3, 3));

  // and back
  DecoratedTree r = resort_step(u);
  CHECK(r == d);
}

TEST_CASE("unsort_step rejects when nothing is displaced") {
  DecoratedTree d{kPath123, {{2, 2}, {3, 3}}};
  CHECK_THROWS_AS(unsort_step(d), std::domain_error);
  DecoratedTree twisted{kTwisted, {{3, 3}}};
  CHECK_THROWS_AS(unsort_step(twisted), std::domain_error);
}

TEST_CASE("resort_step rejects when nothing is decreasing") {
  DecoratedTree d{kPath123, {{2, 3}, {3, 3}}};
  CHECK_THROWS_AS(resort_step(d), std::domain_error);
}

TEST_CASE("unsort_full") {
  DecoratedTree sorted{kPath123, {{2, 2}, {3, 3}}};
  CHECK(unsort_full(sorted) == sorted);

  DecoratedTree d{kPath123, {{2, 3}, {3, 3}}};
  DecoratedTree u = unsort_full(d);
  CHECK(u.tree == kTwisted);
  CHECK(validate(u).displaced == 0);
  CHECK(unsort_chain(d).size() == 2);
}

TEST_CASE("enumeration: L_{0,0} is the set of increasing trees") {
  auto members = drain(LabelSet({1, 2, 3}), DecorationIndex{0, 0});
  CHECK(members.size() == 2);
  for (const auto& d : members) {
    CHECK(is_increasing_tree(d.tree));
    for (const auto& [v, img] : d.phi) CHECK(v == img);
  }
}

TEST_CASE("enumeration: the undecorated slice carries every cayley tree") {
  LabelSet a({1, 2, 3, 4});
  std::set<RootedTree> undecorated;
  long count = 0;
  DecoratedEnumeration en(a);
  while (auto d = en.next()) {
    if (validate(*d).displaced == 0) {
      undecorated.insert(d->tree);
      ++count;
    }
  }
  CHECK(count == 16);  // one identity decoration per tree
  CHECK(undecorated.size() == 16);
}

TEST_CASE("enumeration: displaced slice count equals the hook-map expansion") {
  // Over increasing trees, admissibility conditions beyond the hook rule
  // are vacuous, so |L_{0,*}| is the total number of hook maps.
  LabelSet a({1, 2, 3, 4});
  long displaced_members = 0;
  DecoratedEnumeration en(a);
  while (auto d = en.next())
    if (validate(*d).decreasing == 0) ++displaced_members;

  long hook_maps = 0;
  IncreasingEnumeration ien(a);
  while (auto t = ien.next()) {
    long prod = 1;
    for (const auto& [v, f] : t->father_map())
      prod *= static_cast<long>(hook(*t, v).size());
    hook_maps += prod;
  }
  CHECK(displaced_members == hook_maps);
}

TEST_CASE("round trips, weight preservation, and transport for |A| <= 5") {
  for (auto labels : {std::vector<int>{1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {2, 3, 5, 8},
                      {1, 2, 3, 4, 5}}) {
    LabelSet a(labels);
    std::map<std::pair<int, int>, long> sizes;
    DecoratedEnumeration en(a);
    while (auto d = en.next()) {
      DecorationIndex idx = validate(*d);
      sizes[{idx.decreasing, idx.displaced}]++;
      if (idx.displaced > 0) {
        DecoratedTree u = unsort_step(*d);
        CHECK(validate(u) == DecorationIndex{idx.decreasing + 1, idx.displaced - 1});
        CHECK(u.weight() == d->weight());
        CHECK(resort_step(u) == *d);
      }
      if (idx.decreasing > 0) {
        DecoratedTree s = resort_step(*d);
        CHECK(unsort_step(s) == *d);
      }
    }
    for (const auto& [idx, n] : sizes) {
      if (idx.second >= 1) {
        auto it = sizes.find({idx.first + 1, idx.second - 1});
        REQUIRE(it != sizes.end());
        CHECK(it->second == n);
      }
    }
  }
}

TEST_CASE("full bijection check passes on small sets") {
  CHECK(bijection_check(LabelSet({1, 2, 3, 4})).pass);
  CHECK(bijection_check(LabelSet({2, 5, 7})).pass);
  CHECK(bijection_check(LabelSet({6})).pass);
}
