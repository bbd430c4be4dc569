#include "hooksum/bijection.hpp"

#include <algorithm>
#include <cassert>

namespace hooksum {

namespace {

std::vector<int> increasing_vertices(const RootedTree& t) {
  std::vector<int> out;
  for (const auto& [v, f] : t.father_map())
    if (f < v) out.push_back(v);
  return out;  // father_map iterates in label order
}

std::vector<int> decreasing_vertices(const RootedTree& t) {
  std::vector<int> out;
  for (const auto& [v, f] : t.father_map())
    if (f > v) out.push_back(v);
  return out;
}

// Root path v -> ... -> root, endpoints included.
std::vector<int> root_path(const RootedTree& t, int v) {
  std::vector<int> path{v};
  while (v != t.root()) {
    v = t.father(v);
    path.push_back(v);
  }
  return path;
}

}  // namespace

DecorationCheck check_decoration(const RootedTree& t, const std::map<int, int>& phi) {
  DecorationCheck r;
  const auto incr = increasing_vertices(t);
  const auto decr = decreasing_vertices(t);

  // Domain of phi must be exactly the increasing vertices.
  for (const auto& [v, img] : phi) {
    if (!std::binary_search(incr.begin(), incr.end(), v)) {
      r.condition = 0;
      r.vertex = v;
      return r;
    }
  }
  for (int v : incr) {
    if (!phi.count(v)) {
      r.condition = 0;
      r.vertex = v;
      return r;
    }
  }

  // (1) phi(v) lies in the hook of v, at or above v's label.
  for (int v : incr) {
    int img = phi.at(v);
    auto h = hook(t, v);
    if (img < v || !std::binary_search(h.begin(), h.end(), img)) {
      r.condition = 1;
      r.vertex = v;
      return r;
    }
  }

  // (2) a displaced vertex sits on an all-increasing root path.
  for (int v : incr) {
    if (phi.at(v) == v) continue;
    for (int u : root_path(t, v)) {
      if (u == t.root()) break;
      if (t.father(u) > u) {
        r.condition = 2;
        r.vertex = v;
        return r;
      }
    }
  }

  // (3) every displaced vertex is smaller than every decreasing vertex.
  if (!decr.empty()) {
    const int min_decr = decr.front();
    for (int v : incr) {
      if (phi.at(v) != v && v >= min_decr) {
        r.condition = 3;
        r.vertex = v;
        return r;
      }
    }
  }

  r.ok = true;
  r.index.decreasing = static_cast<int>(decr.size());
  for (int v : incr)
    if (phi.at(v) != v) r.index.displaced++;
  return r;
}

DecorationIndex validate(const RootedTree& t, const std::map<int, int>& phi) {
  DecorationCheck c = check_decoration(t, phi);
  if (c.ok) return c.index;
  static const char* what[] = {
      "phi domain is not the set of increasing vertices",
      "phi(v) must lie in the hook of v with phi(v) >= v",
      "a displaced vertex must have an all-increasing root path",
      "a displaced vertex must be smaller than every decreasing vertex",
  };
  throw DecorationError(c.condition, c.vertex,
                        std::string(what[c.condition]) + " (vertex " +
                            std::to_string(c.vertex) + ")");
}

DecorationIndex validate(const DecoratedTree& d) { return validate(d.tree, d.phi); }

DecoratedTree unsort_step(const DecoratedTree& d) {
  DecorationIndex idx = validate(d);
  if (idx.displaced == 0)
    throw std::domain_error("unsort_step: no displaced vertex to unsort");

  // v: the displaced increasing vertex with the greatest label. Labels are
  // distinct, so the choice is unique.
  int v = -1;
  for (const auto& [u, img] : d.phi)
    if (img != u) v = std::max(v, u);
  assert(v >= 0);

  const int a = d.tree.father(v);
  const int target = d.phi.at(v);

  // b: the child of v whose hook contains phi(v); when phi(v) is itself a
  // child of v, b = phi(v).
  int b = -1;
  for (const auto& [c, f] : d.tree.father_map()) {
    if (f != v) continue;
    auto h = hook(d.tree, c);
    if (std::binary_search(h.begin(), h.end(), target)) {
      assert(b < 0);
      b = c;
    }
  }
  assert(b >= 0);

  // Cut edges (a,v) and (v,b); add (a,b) and (phi(v),v).
  std::map<int, int> father = d.tree.father_map();
  father[b] = a;
  father[v] = target;
  RootedTree t2(d.tree.labels(), std::move(father));

  // v turned decreasing and leaves the domain of phi; everyone else keeps
  // their image.
  std::map<int, int> phi2 = d.phi;
  phi2.erase(v);
  DecoratedTree out{std::move(t2), std::move(phi2)};

#ifndef NDEBUG
  DecorationIndex got = validate(out);
  assert(got.decreasing == idx.decreasing + 1);
  assert(got.displaced == idx.displaced - 1);
#endif
  return out;
}

DecoratedTree resort_step(const DecoratedTree& d) {
  DecorationIndex idx = validate(d);
  if (idx.decreasing == 0)
    throw std::domain_error("resort_step: no decreasing vertex to resort");

  // v: the decreasing vertex with the smallest label.
  const int v = decreasing_vertices(d.tree).front();
  const auto path = root_path(d.tree, v);

  // (a, b): the unique adjacent pair on the root path with a < v < b and an
  // all-increasing path from the root down to a.
  int a = -1, b = -1;
  int matches = 0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const int lower = path[k], upper = path[k + 1];
    if (!(upper < v && v < lower)) continue;
    bool clean = true;
    for (std::size_t m = k + 1; m + 1 < path.size(); ++m) {
      if (path[m + 1] < path[m]) continue;  // path[m] increasing seen from below
      clean = false;
      break;
    }
    if (clean) {
      a = upper;
      b = lower;
      ++matches;
    }
  }
  assert(matches == 1);
  if (a < 0) throw std::logic_error("resort_step: no admissible splice point");

  const int old_father = d.tree.father(v);
  std::map<int, int> father = d.tree.father_map();
  father[v] = a;
  father[b] = v;
  RootedTree t2(d.tree.labels(), std::move(father));

  std::map<int, int> phi2 = d.phi;
  phi2[v] = old_father;
  DecoratedTree out{std::move(t2), std::move(phi2)};

#ifndef NDEBUG
  DecorationIndex got = validate(out);
  assert(got.decreasing == idx.decreasing - 1);
  assert(got.displaced == idx.displaced + 1);
#endif
  return out;
}

DecoratedTree unsort_full(const DecoratedTree& d) {
  DecoratedTree cur = d;
  while (validate(cur).displaced > 0) cur = unsort_step(cur);
  return cur;
}

std::vector<DecoratedTree> unsort_chain(const DecoratedTree& d) {
  std::vector<DecoratedTree> chain{d};
  while (validate(chain.back()).displaced > 0)
    chain.push_back(unsort_step(chain.back()));
  return chain;
}

CheckResult bijection_check(const LabelSet& a) {
  CheckResult r;
  auto fail = [&r](std::string why) {
    r.pass = false;
    r.failure = std::move(why);
    return r;
  };

  std::map<std::pair<int, int>, long> sizes;
  std::map<std::pair<int, int>, Polynomial> weight_by_index;
  Polynomial sorted_total, unsorted_total;

  DecoratedEnumeration en(a);
  while (auto d = en.next()) {
    DecorationIndex idx = validate(*d);
    Polynomial w = d->weight();
    sizes[{idx.decreasing, idx.displaced}]++;
    weight_by_index[{idx.decreasing, idx.displaced}] += w;
    if (idx.decreasing == 0) sorted_total += w;
    if (idx.displaced == 0) unsorted_total += w;

    if (idx.displaced > 0) {
      DecoratedTree u = unsort_step(*d);
      DecorationIndex uidx = validate(u);
      if (uidx.decreasing != idx.decreasing + 1 || uidx.displaced != idx.displaced - 1)
        return fail("unsort_step did not shift the index by (+1,-1)");
      if (u.weight() != w) return fail("unsort_step changed the weight");
      if (!(resort_step(u) == *d)) return fail("resort(unsort) is not the identity");
    }
    if (idx.decreasing > 0) {
      DecoratedTree s = resort_step(*d);
      if (s.weight() != w) return fail("resort_step changed the weight");
      if (!(unsort_step(s) == *d)) return fail("unsort(resort) is not the identity");
    }
  }

  for (const auto& [idx, count] : sizes) {
    auto [i, j] = idx;
    if (j >= 1) {
      auto it = sizes.find({i + 1, j - 1});
      if (it == sizes.end() || it->second != count)
        return fail("cardinality transport fails between indices (" +
                    std::to_string(i) + "," + std::to_string(j) + ") and (" +
                    std::to_string(i + 1) + "," + std::to_string(j - 1) + ")");
      if (!(weight_by_index[{i, j}] == weight_by_index[{i + 1, j - 1}]))
        return fail("weight transport fails between adjacent indices");
    }
  }

  Polynomial cayley_sum;
  CayleyEnumeration cen(a);
  while (auto t = cen.next()) cayley_sum += cayley_weight(*t);
  if (!(sorted_total == cayley_sum)) {
    r.pass = false;
    r.failure = "decorated increasing-tree total differs from the Cayley total";
    r.exhibits.emplace_back("decorated_total", std::move(sorted_total));
    r.exhibits.emplace_back("cayley_total", std::move(cayley_sum));
    return r;
  }
  if (!(unsorted_total == cayley_sum))
    return fail("the undecorated slice does not sum to the Cayley total");
  return r;
}

DecoratedEnumeration::DecoratedEnumeration(LabelSet labels,
                                           std::optional<DecorationIndex> only)
    : trees_(std::move(labels)), only_(only) {}

bool DecoratedEnumeration::load_tree() {
  while (true) {
    current_ = trees_.next();
    if (!current_) return false;
    incr_ = increasing_vertices(*current_);
    allowed_.clear();
    allowed_.reserve(incr_.size());
    for (int v : incr_) {
      std::vector<int> vals;
      for (int u : hook(*current_, v))
        if (u >= v) vals.push_back(u);
      allowed_.push_back(std::move(vals));
    }
    pick_.assign(incr_.size(), 0);
    return true;
  }
}

std::optional<DecoratedTree> DecoratedEnumeration::next() {
  if (exhausted_) return std::nullopt;
  if (!current_ && !load_tree()) {
    exhausted_ = true;
    return std::nullopt;
  }
  while (true) {
    // Assemble the candidate phi for the current odometer state.
    std::map<int, int> phi;
    for (std::size_t k = 0; k < incr_.size(); ++k)
      phi[incr_[k]] = allowed_[k][pick_[k]];

    DecorationCheck c = check_decoration(*current_, phi);
    bool take = c.ok && (!only_ || c.index == *only_);
    std::optional<DecoratedTree> out;
    if (take) out = DecoratedTree{*current_, std::move(phi)};

    // Advance: bump the phi odometer, falling through to the next tree.
    std::size_t k = pick_.size();
    while (k > 0) {
      if (++pick_[k - 1] < allowed_[k - 1].size()) break;
      pick_[k - 1] = 0;
      --k;
    }
    if (k == 0 && !load_tree()) {
      exhausted_ = true;
      if (take) return out;
      return std::nullopt;
    }
    if (take) return out;
  }
}

}  // namespace hooksum
