// Labelled rooted trees over arbitrary finite label sets, vertex
// classification, hooks, and exhaustive enumerators for Cayley trees and
// increasing trees.
//
// A tree on the label set A is always rooted at min(A) and stored as a
// father map. Trees are immutable values with a canonical ordering, so
// enumerations can be compared as sets.
#ifndef HOOKSUM_TREES_HPP
#define HOOKSUM_TREES_HPP

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "hooksum/bigint.hpp"

namespace hooksum {

// Finite set of distinct non-negative integer labels, kept sorted.
// Label 0 only ever enters through the convolution identities; the CLI
// accepts strictly positive labels.
class LabelSet {
 public:
  explicit LabelSet(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  int min() const { return labels_.front(); }
  int max() const { return labels_.back(); }
  bool contains(int v) const;

  LabelSet with_zero() const;  // this set united with {0}

  friend auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<int> labels_;
};

class RootedTree {
 public:
  // Validates that father is defined exactly on A \ {min(A)} and that
  // iterating it from any vertex reaches the root.
  RootedTree(LabelSet labels, std::map<int, int> father);

  const LabelSet& labels() const { return labels_; }
  int root() const { return labels_.min(); }
  const std::map<int, int>& father_map() const { return father_; }
  int father(int v) const;  // throws for the root or unknown labels

  // child -> sorted children lists, including childless vertices.
  std::map<int, std::vector<int>> children() const;

  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;

 private:
  LabelSet labels_;
  std::map<int, int> father_;
};

enum class VertexClass { Root, Increasing, Decreasing };

// Vertices of the subtree rooted at v, v included, sorted.
std::vector<int> hook(const RootedTree& t, int v);

VertexClass classify(const RootedTree& t, int v);
bool is_increasing_tree(const RootedTree& t);
int depth(const RootedTree& t, int v);  // root has depth 0

// Classical Prufer code over the sorted label list; sequences of length
// |A|-2 over A are in bijection with Cayley trees on A.
std::vector<int> prufer_encode(const RootedTree& t);            // |A| >= 2
RootedTree prufer_decode(const LabelSet& a, const std::vector<int>& seq);

// Streams every Cayley tree on A exactly once (Prufer sequences in
// lexicographic order, rooted at min(A)).
class CayleyEnumeration {
 public:
  explicit CayleyEnumeration(LabelSet labels);
  std::optional<RootedTree> next();

 private:
  LabelSet labels_;
  std::vector<int> digits_;  // positions into labels_
  bool done_ = false;
};

// Streams every increasing tree on A exactly once, built by attaching the
// k-th smallest label to one of the k-1 earlier vertices.
class IncreasingEnumeration {
 public:
  explicit IncreasingEnumeration(LabelSet labels);
  std::optional<RootedTree> next();

 private:
  LabelSet labels_;
  std::vector<int> choice_;  // choice_[k] indexes the father of labels_[k]
  bool done_ = false;
};

// Drain an enumeration and count. count_cayley(A) = |A|^(|A|-2) and
// count_increasing(A) = (|A|-1)! are what the tests pin these against.
BigInt count_cayley(const LabelSet& a);
BigInt count_increasing(const LabelSet& a);

}  // namespace hooksum

#endif  // HOOKSUM_TREES_HPP
