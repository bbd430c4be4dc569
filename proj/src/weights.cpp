#include "hooksum/weights.hpp"

#include <stdexcept>

namespace hooksum {

Polynomial hook_weight(const RootedTree& t) {
  if (!is_increasing_tree(t))
    throw std::invalid_argument("hook_weight is defined on increasing trees only");
  Polynomial w(1);
  for (const auto& [v, f] : t.father_map()) {
    Polynomial hook_sum;
    for (int j : hook(t, v)) hook_sum += yv(v, j);
    w *= xv(f) * hook_sum;
  }
  return w;
}

Polynomial root_hook_factor(const LabelSet& a) {
  Polynomial s;
  for (int j : a.labels()) s += yv(a.min(), j);
  return s;
}

Polynomial root_hook_factor(const RootedTree& t) { return root_hook_factor(t.labels()); }

Polynomial cayley_weight(const RootedTree& t) {
  Polynomial w(1);
  for (const auto& [v, f] : t.father_map())
    w *= f < v ? xv(f) * yv(v, v) : xv(v) * yv(v, f);
  return w;
}

Polynomial decorated_weight(const RootedTree& t, const std::map<int, int>& phi) {
  Polynomial w(1);
  for (const auto& [v, f] : t.father_map()) {
    if (f < v) {
      w *= xv(f) * yv(v, phi.at(v));
    } else {
      w *= xv(v) * yv(v, f);
    }
  }
  return w;
}

}  // namespace hooksum
