// Sparse multivariate polynomials with exact integer coefficients over the
// two variable families x[i] (i >= 0) and y[i,j] (0 <= i <= j).
//
// Polynomials are immutable values in canonical form: no zero coefficients,
// terms keyed by monomials in graded-lexicographic order. Equality of the
// term maps is polynomial equality, which is what every identity check in
// this project ultimately relies on.
#ifndef HOOKSUM_POLYNOMIAL_HPP
#define HOOKSUM_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hooksum/bigint.hpp"

namespace hooksum {

enum class VarKind : std::uint8_t { X = 0, Y = 1 };

// A single indeterminate. The total order is: all x before all y,
// then lexicographic on (i, j).
struct VarId {
  VarKind kind = VarKind::X;
  int i = 0;
  int j = 0;  // used only for kind Y

  static VarId x(int i);
  static VarId y(int i, int j);  // requires 0 <= i <= j

  std::string str() const;  // "x[i]" or "y[i,j]"

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Product of variable powers; exponents strictly positive, keys sorted by
// VarId. Ordered graded-lexicographically (total degree first).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, int exp = 1);

  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int degree() const;
  int exponent(VarId v) const;

  Monomial operator*(const Monomial& o) const;

  // True when every exponent of d is covered; q receives the quotient.
  bool try_divide(const Monomial& d, Monomial& q) const;

  static int compare(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

  std::size_t hash() const;
  std::string str() const;

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  Polynomial() = default;  // zero
  Polynomial(long c) : Polynomial(BigInt(c)) {}
  explicit Polynomial(BigInt c);
  static Polynomial variable(VarId v);
  static Polynomial term(Monomial m, BigInt c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Single term with coefficient one (how tree weights other than the hook
  // weight always come out).
  bool is_monic_monomial() const;

  int total_degree() const;  // degree of the zero polynomial is -1
  std::vector<VarId> variables() const;
  const Monomial& leading_monomial() const;  // throws on zero
  const BigInt& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Human-readable form, leading term first: "2*x[1]^2*y[1,2] - y[2,2]".
  std::string pretty() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  TermMap terms_;
};

// Convenience constructors used everywhere.
Polynomial xv(int i);
Polynomial yv(int i, int j);

Polynomial pow(const Polynomial& p, unsigned exp);

// Simultaneous substitution: every bound variable is replaced against the
// original polynomial in one pass, so bindings may mention their own
// left-hand sides. Unbound variables are left intact.
Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& bindings);

// The leaf-extension evaluation map: rewrites y[k,i] -> y[k,i] + y[k,j]
// for every k <= i, leaving all other variables alone. Requires i < j.
Polynomial psi_map(const Polynomial& p, int i, int j);

// Formal partial derivative.
Polynomial derivative(const Polynomial& p, VarId v);

// Exact evaluation; every variable of p must be bound or the first unbound
// one (in variable order) is reported.
BigInt eval_integers(const Polynomial& p, const std::map<VarId, BigInt>& bindings);

}  // namespace hooksum

#endif  // HOOKSUM_POLYNOMIAL_HPP
