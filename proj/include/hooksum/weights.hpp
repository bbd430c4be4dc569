// The three weight functions mapping (decorated) trees into the ring.
#ifndef HOOKSUM_WEIGHTS_HPP
#define HOOKSUM_WEIGHTS_HPP

#include <map>

#include "hooksum/polynomial.hpp"
#include "hooksum/trees.hpp"

namespace hooksum {

// Hook weight of an increasing tree: for each non-root vertex i, the factor
// x[father(i)] * sum over j in hook(i) of y[i,j]. Rejects trees with a
// decreasing vertex (their hooks would need y[i,j] with j < i).
Polynomial hook_weight(const RootedTree& t);

// Sum over the whole label set of y[min(A), j]; the hook factor of the root,
// identical for every tree on A.
Polynomial root_hook_factor(const LabelSet& a);
Polynomial root_hook_factor(const RootedTree& t);

// Edge-local weight of an arbitrary Cayley tree: an increasing vertex v
// contributes x[father(v)] * y[v,v], a decreasing one x[v] * y[v,father(v)].
Polynomial cayley_weight(const RootedTree& t);

// Weight of a decorated pair (T, phi): increasing vertices contribute
// x[father(v)] * y[v,phi(v)], decreasing ones x[v] * y[v,father(v)].
// phi is not re-validated here.
Polynomial decorated_weight(const RootedTree& t, const std::map<int, int>& phi);

}  // namespace hooksum

#endif  // HOOKSUM_WEIGHTS_HPP
