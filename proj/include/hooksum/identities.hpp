// Closed-form generating polynomials and the identity checks built on them:
// the hook summation formula, the root-edge decomposition recursions, the
// Strehl convolution with its Abel and Hurwitz specializations, and the
// leaf-extension recursion for contiguous label ranges.
#ifndef HOOKSUM_IDENTITIES_HPP
#define HOOKSUM_IDENTITIES_HPP

#include "hooksum/matrixtree.hpp"
#include "hooksum/polynomial.hpp"
#include "hooksum/trees.hpp"

namespace hooksum {

// Closed-form product: x[m]*y[M,M] times, for every interior label i, the
// factor y[i,i]*(x over labels <= i) + x[i]*(y[i,j] over labels j > i).
// A singleton set gives 1.
Polynomial theta_product(const LabelSet& a);

// The same polynomial as a sum of hook weights over all increasing trees.
Polynomial theta_sum(const LabelSet& a);

// Variant over {1..n} that keeps the root's hook factor:
// theta_n(n) = root_hook_factor({1..n}) * theta_product({1..n}).
Polynomial theta_n(int n);

// Generating polynomial of the Cayley trees with a single root edge, as a
// closed product: the theta factors with x[min(A)] removed from the sums.
// Requires |A| >= 2.
Polynomial root_edge_product(const LabelSet& a);

// The same polynomial obtained analytically: x[m] times the derivative of
// theta_product by x[m], evaluated at x[m] = 0. Requires |A| >= 2.
Polynomial root_edge_derivative(const LabelSet& a);

// Strehl's convolution kernel w_A(z) = z * prod over non-maximal labels i of
// (z + sum of x[j] for j <= i + sum of y[i,j] for j > i).
Polynomial strehl_w(const LabelSet& a, const Polynomial& z);

// Splits A into B (containing the anchor) and C (containing min(A)) and
// verifies theta(A) = sum over splits of x[m(A)] * (y[m(B),j] over j in B)
// * theta(B) * theta(C), with theta computed both as the closed product and
// as the hook-weight sum. Requires a in A \ {min(A)}.
CheckResult split_recursion_check(const LabelSet& a, int anchor);

// Verifies the derivative characterization: root_edge_product ==
// root_edge_derivative, and both equal the single-root-edge tree sums.
CheckResult root_edge_check(const LabelSet& a);

// Convolution identity for theta over A united with {0}: substituting
// x[0] = u + v equals the sum over complementary splits with x[0] = u and
// x[0] = v. u, v are fresh x variables two slots above max(A).
CheckResult strehl_check(const LabelSet& a);

// Abel's binomial identity at integer points, all arithmetic exact:
// (u+v)(u+v+n)^(n-1) = sum over k of C(n,k) u(u+k)^(k-1) v(v+n-k)^(n-k-1),
// boundary factors read as 1.
CheckResult abel_check(int n, const BigInt& u, const BigInt& v);

// Hurwitz's multivariate generalization, verified symbolically from the
// strehl_w family under the specialization y[i,j] -> x[j].
CheckResult hurwitz_check(const LabelSet& a);

// Rebuilds theta_n(n+1) from theta_n(n) through the psi evaluation maps and
// compares exactly.
CheckResult psi_recursion_check(int n);

// The hook summation formula itself: theta_sum == theta_product, plus the
// Cayley-tree route and, for |A| >= 2, the determinant route.
CheckResult hook_sum_check(const LabelSet& a);

// Bridge between the theta and w families without leaving the ring:
// theta over A united {0} with diagonals y[i,i] -> 1 equals
// strehl_w(A, x[0]) with y[i,j] -> x[i]*y[i,j].
CheckResult specialization_chain_check(const LabelSet& a);

}  // namespace hooksum

#endif  // HOOKSUM_IDENTITIES_HPP
