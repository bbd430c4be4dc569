// Decorated trees and the weight-preserving unsorting bijection.
//
// A decoration phi sends each increasing vertex v into its own hook, at a
// label >= v. A decorated pair is admissible when, additionally, displaced
// vertices (phi(v) != v) sit on all-increasing root paths and precede every
// decreasing vertex in label order. The unsort step trades one displaced
// increasing vertex for one decreasing vertex without changing the weight;
// iterating it turns hook-weighted increasing trees into edge-weighted
// Cayley trees.
#ifndef HOOKSUM_BIJECTION_HPP
#define HOOKSUM_BIJECTION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooksum/check.hpp"
#include "hooksum/polynomial.hpp"
#include "hooksum/trees.hpp"
#include "hooksum/weights.hpp"

namespace hooksum {

struct DecorationIndex {
  int decreasing = 0;  // number of decreasing vertices
  int displaced = 0;   // number of increasing vertices with phi(v) != v
  friend bool operator==(const DecorationIndex&, const DecorationIndex&) = default;
};

struct DecoratedTree {
  RootedTree tree;
  std::map<int, int> phi;  // defined on the increasing vertices

  Polynomial weight() const { return decorated_weight(tree, phi); }
  friend auto operator<=>(const DecoratedTree&, const DecoratedTree&) = default;
};

// Thrown when a (tree, phi) pair is rejected. condition 0 means the domain
// of phi is not the increasing-vertex set; 1..3 identify the violated
// admissibility condition; vertex is the offending label.
class DecorationError : public std::runtime_error {
 public:
  DecorationError(int condition, int vertex, const std::string& what)
      : std::runtime_error(what), condition(condition), vertex(vertex) {}
  int condition;
  int vertex;
};

struct DecorationCheck {
  bool ok = false;
  int condition = 0;
  int vertex = 0;
  DecorationIndex index;
};

// Non-throwing validation; used by the enumerator's inner loop.
DecorationCheck check_decoration(const RootedTree& t, const std::map<int, int>& phi);

// Returns the (decreasing, displaced) index or throws DecorationError.
DecorationIndex validate(const RootedTree& t, const std::map<int, int>& phi);
DecorationIndex validate(const DecoratedTree& d);

// One unsorting move: pick the largest displaced increasing vertex v, cut it
// out of the root path and re-hang it below phi(v). Requires displaced >= 1;
// the result has one more decreasing and one fewer displaced vertex and the
// same weight.
DecoratedTree unsort_step(const DecoratedTree& d);

// Exact inverse of unsort_step. Requires decreasing >= 1.
DecoratedTree resort_step(const DecoratedTree& d);

// Applies unsort_step until no vertex is displaced.
DecoratedTree unsort_full(const DecoratedTree& d);

// The full chain from d to its unsorted image, d included.
std::vector<DecoratedTree> unsort_chain(const DecoratedTree& d);

// Exhaustive health check of the bijection on one label set: round trips
// both ways, exact weight preservation, index transport of cardinalities,
// and the totality identity (decorated weight sums equal the Cayley weight
// sum). Meant for small A; the work grows with |A|^|A|.
CheckResult bijection_check(const LabelSet& a);

// Streams the decorated trees on A, optionally restricted to one index:
// every Cayley tree, every phi satisfying the hook condition, filtered by
// admissibility.
class DecoratedEnumeration {
 public:
  explicit DecoratedEnumeration(LabelSet labels,
                                std::optional<DecorationIndex> only = std::nullopt);
  std::optional<DecoratedTree> next();

 private:
  bool load_tree();  // pulls Cayley trees until one admits a decoration

  CayleyEnumeration trees_;
  std::optional<DecorationIndex> only_;
  std::optional<RootedTree> current_;
  std::vector<int> incr_;                  // increasing vertices of current_
  std::vector<std::vector<int>> allowed_;  // admissible phi values per vertex
  std::vector<std::size_t> pick_;          // odometer into allowed_
  bool exhausted_ = false;
};

}  // namespace hooksum

#endif  // HOOKSUM_BIJECTION_HPP
