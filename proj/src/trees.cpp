#include "hooksum/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace hooksum {

LabelSet::LabelSet(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("label set must be non-empty");
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] < 0)
      throw std::invalid_argument("labels must be non-negative");
    if (k > 0 && labels_[k] == labels_[k - 1])
      throw std::invalid_argument("duplicate label " + std::to_string(labels_[k]));
  }
}

bool LabelSet::contains(int v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

LabelSet LabelSet::with_zero() const {
  if (contains(0)) return *this;
  std::vector<int> ext;
  ext.reserve(labels_.size() + 1);
  ext.push_back(0);
  ext.insert(ext.end(), labels_.begin(), labels_.end());
  return LabelSet(std::move(ext));
}

RootedTree::RootedTree(LabelSet labels, std::map<int, int> father)
    : labels_(std::move(labels)), father_(std::move(father)) {
  const int root = labels_.min();
  if (father_.size() != labels_.size() - 1)
    throw std::invalid_argument("father map must cover exactly the non-root labels");
  for (const auto& [child, f] : father_) {
    if (child == root) throw std::invalid_argument("root cannot have a father");
    if (!labels_.contains(child) || !labels_.contains(f))
      throw std::invalid_argument("father map mentions a label outside the set");
  }
  // Every vertex must reach the root in < |A| steps.
  for (const auto& [child, f] : father_) {
    int v = child;
    std::size_t steps = 0;
    while (v != root) {
      auto it = father_.find(v);
      if (it == father_.end() || ++steps >= labels_.size())
        throw std::invalid_argument("father map contains a cycle");
      v = it->second;
    }
  }
}

int RootedTree::father(int v) const {
  auto it = father_.find(v);
  if (it == father_.end())
    throw std::invalid_argument("vertex " + std::to_string(v) + " has no father");
  return it->second;
}

std::map<int, std::vector<int>> RootedTree::children() const {
  std::map<int, std::vector<int>> ch;
  for (int v : labels_.labels()) ch[v];
  for (const auto& [child, f] : father_) ch[f].push_back(child);
  return ch;
}

std::vector<int> hook(const RootedTree& t, int v) {
  if (!t.labels().contains(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in label set");
  auto ch = t.children();
  std::vector<int> out, stack{v};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int c : ch[u]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexClass classify(const RootedTree& t, int v) {
  if (!t.labels().contains(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in label set");
  if (v == t.root()) return VertexClass::Root;
  return t.father(v) < v ? VertexClass::Increasing : VertexClass::Decreasing;
}

bool is_increasing_tree(const RootedTree& t) {
  for (const auto& [child, f] : t.father_map())
    if (f > child) return false;
  return true;
}

int depth(const RootedTree& t, int v) {
  int d = 0;
  while (v != t.root()) {
    v = t.father(v);
    ++d;
  }
  return d;
}

std::vector<int> prufer_encode(const RootedTree& t) {
  const auto& labels = t.labels().labels();
  const std::size_t n = labels.size();
  if (n < 2) throw std::invalid_argument("Prufer code needs at least two labels");
  std::map<int, std::set<int>> adj;
  for (int v : labels) adj[v];
  for (const auto& [child, f] : t.father_map()) {
    adj[child].insert(f);
    adj[f].insert(child);
  }
  std::set<int> leaves;
  for (const auto& [v, nb] : adj)
    if (nb.size() == 1) leaves.insert(v);
  std::vector<int> seq;
  seq.reserve(n - 2);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    int u = *adj[leaf].begin();
    seq.push_back(u);
    adj[u].erase(leaf);
    adj.erase(leaf);
    if (adj[u].size() == 1) leaves.insert(u);
  }
  return seq;
}

RootedTree prufer_decode(const LabelSet& a, const std::vector<int>& seq) {
  const auto& labels = a.labels();
  const std::size_t n = labels.size();
  if (n < 2) throw std::invalid_argument("Prufer decode needs at least two labels");
  if (seq.size() != n - 2)
    throw std::invalid_argument("Prufer sequence must have length |A|-2");

  std::map<int, int> deg;
  for (int v : labels) deg[v] = 1;
  for (int s : seq) {
    if (!a.contains(s)) throw std::invalid_argument("Prufer digit outside label set");
    deg[s]++;
  }
  std::set<int> leaves;
  for (const auto& [v, d] : deg)
    if (d == 1) leaves.insert(v);

  std::map<int, std::vector<int>> adj;
  auto link = [&adj](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    link(leaf, s);
    if (--deg[s] == 1) leaves.insert(s);
  }
  int u = *leaves.begin(), v = *leaves.rbegin();
  link(u, v);

  // Orient away from the root.
  std::map<int, int> father;
  std::vector<int> stack{a.min()};
  std::set<int> seen{a.min()};
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (int nb : adj[w]) {
      if (seen.insert(nb).second) {
        father[nb] = w;
        stack.push_back(nb);
      }
    }
  }
  return RootedTree(a, std::move(father));
}

CayleyEnumeration::CayleyEnumeration(LabelSet labels) : labels_(std::move(labels)) {
  if (labels_.size() >= 2) digits_.assign(labels_.size() - 2, 0);
}

std::optional<RootedTree> CayleyEnumeration::next() {
  if (done_) return std::nullopt;
  if (labels_.size() == 1) {
    done_ = true;
    return RootedTree(labels_, {});
  }
  std::vector<int> seq(digits_.size());
  for (std::size_t k = 0; k < digits_.size(); ++k)
    seq[k] = labels_.labels()[static_cast<std::size_t>(digits_[k])];
  RootedTree t = prufer_decode(labels_, seq);

  // Advance the odometer (lexicographic over label positions).
  const int base = static_cast<int>(labels_.size());
  std::size_t k = digits_.size();
  while (k > 0) {
    if (++digits_[k - 1] < base) break;
    digits_[k - 1] = 0;
    --k;
  }
  if (k == 0) done_ = true;
  return t;
}

IncreasingEnumeration::IncreasingEnumeration(LabelSet labels)
    : labels_(std::move(labels)) {
  if (labels_.size() >= 2) choice_.assign(labels_.size() - 1, 0);
}

std::optional<RootedTree> IncreasingEnumeration::next() {
  if (done_) return std::nullopt;
  const auto& ls = labels_.labels();
  std::map<int, int> father;
  for (std::size_t k = 1; k < ls.size(); ++k)
    father[ls[k]] = ls[static_cast<std::size_t>(choice_[k - 1])];
  RootedTree t(labels_, std::move(father));

  if (choice_.empty()) {
    done_ = true;
    return t;
  }
  // Mixed-radix odometer: the father of the k-th smallest label ranges
  // over the k-1 earlier vertices.
  std::size_t k = choice_.size();
  while (k > 0) {
    if (++choice_[k - 1] < static_cast<int>(k)) break;
    choice_[k - 1] = 0;
    --k;
  }
  if (k == 0) done_ = true;
  return t;
}

BigInt count_cayley(const LabelSet& a) {
  CayleyEnumeration en(a);
  BigInt n = 0;
  while (en.next()) ++n;
  return n;
}

BigInt count_increasing(const LabelSet& a) {
  IncreasingEnumeration en(a);
  BigInt n = 0;
  while (en.next()) ++n;
  return n;
}

}  // namespace hooksum
