// Weighted Kirchhoff matrix of the label set and the exact symbolic
// determinant of its principal minor, which equals the Cayley-tree
// generating polynomial by the matrix tree theorem.
#ifndef HOOKSUM_MATRIXTREE_HPP
#define HOOKSUM_MATRIXTREE_HPP

#include <vector>

#include "hooksum/check.hpp"
#include "hooksum/polynomial.hpp"
#include "hooksum/trees.hpp"

namespace hooksum {

class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t dim() const { return n_; }
  Polynomial& at(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

 private:
  std::size_t n_;
  std::vector<Polynomial> cells_;
};

// Rows and columns indexed by the sorted labels of A. Off-diagonal entries
// are -x[a_r]*y[a_r,a_c] above the diagonal and -x[a_c]*y[a_r,a_r] below;
// the diagonal of label l is y[l,l]*sum of x over smaller labels plus
// x[l]*sum of y[l,m] over larger labels. Requires |A| >= 2.
PolyMatrix build_kirchhoff(const LabelSet& a);

// Drops the first row and column (the slot of min(A)). Requires dim >= 2.
PolyMatrix principal_minor(const PolyMatrix& m);

// Exact quotient p/d in the integer polynomial ring; throws std::logic_error
// when the division is not remainder-free. Bareiss guarantees divisibility,
// so a failure here is a hard bug, not an input error.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

// Exact determinant: fraction-free Bareiss elimination with remainder-checked
// pivot divisions, falling back to cofactor expansion if a zero pivot stalls
// the elimination. det of the 0-dimensional matrix is 1.
Polynomial det_exact(const PolyMatrix& m);

// Three-way comparison: Cayley-tree weight sum, det of the Kirchhoff minor,
// and the closed-form product. Reports the first pair that disagrees.
CheckResult matrix_tree_check(const LabelSet& a);

}  // namespace hooksum

#endif  // HOOKSUM_MATRIXTREE_HPP
