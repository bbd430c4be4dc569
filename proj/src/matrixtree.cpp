#include "hooksum/matrixtree.hpp"

#include <stdexcept>

#include "hooksum/identities.hpp"
#include "hooksum/weights.hpp"

namespace hooksum {

PolyMatrix build_kirchhoff(const LabelSet& a) {
  const auto& ls = a.labels();
  const std::size_t n = ls.size();
  if (n < 2) throw std::invalid_argument("Kirchhoff matrix needs at least two labels");
  PolyMatrix k(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r < c) {
        k.at(r, c) = -(xv(ls[r]) * yv(ls[r], ls[c]));
      } else if (r > c) {
        k.at(r, c) = -(xv(ls[c]) * yv(ls[r], ls[r]));
      } else {
        Polynomial below, above;
        for (std::size_t m = 0; m < r; ++m) below += xv(ls[m]);
        for (std::size_t m = r + 1; m < n; ++m) above += yv(ls[r], ls[m]);
        k.at(r, r) = yv(ls[r], ls[r]) * below + xv(ls[r]) * above;
      }
    }
  }
  return k;
}

PolyMatrix principal_minor(const PolyMatrix& m) {
  if (m.dim() < 2) throw std::invalid_argument("principal minor needs dimension >= 2");
  PolyMatrix out(m.dim() - 1);
  for (std::size_t r = 1; r < m.dim(); ++r)
    for (std::size_t c = 1; c < m.dim(); ++c) out.at(r - 1, c - 1) = m.at(r, c);
  return out;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::logic_error("exact_divide: division by zero");
  Polynomial quotient;
  Polynomial rem = p;
  while (!rem.is_zero()) {
    Monomial qm;
    if (!rem.leading_monomial().try_divide(d.leading_monomial(), qm) ||
        !divides(d.leading_coefficient(), rem.leading_coefficient()))
      throw std::logic_error("exact_divide: division is not remainder-free");
    BigInt qc = div_exact(rem.leading_coefficient(), d.leading_coefficient());
    Polynomial t = Polynomial::term(qm, qc);
    quotient += t;
    rem -= t * d;
  }
  return quotient;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m.at(0, 0);
  Polynomial det;
  for (std::size_t r = 0; r < n; ++r) {
    if (m.at(r, 0).is_zero()) continue;
    PolyMatrix sub(n - 1);
    for (std::size_t i = 0, si = 0; i < n; ++i) {
      if (i == r) continue;
      for (std::size_t j = 1; j < n; ++j) sub.at(si, j - 1) = m.at(i, j);
      ++si;
    }
    Polynomial contrib = m.at(r, 0) * det_cofactor(sub);
    if (r % 2 == 0)
      det += contrib;
    else
      det -= contrib;
  }
  return det;
}

}  // namespace

Polynomial det_exact(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return Polynomial(1);
  PolyMatrix w = m;
  Polynomial prev_pivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) return det_cofactor(m);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = exact_divide(num, prev_pivot);
      }
      w.at(i, k) = Polynomial();
    }
    prev_pivot = w.at(k, k);
  }
  return w.at(n - 1, n - 1);
}

CheckResult matrix_tree_check(const LabelSet& a) {
  Polynomial tree_sum;
  CayleyEnumeration en(a);
  while (auto t = en.next()) tree_sum += cayley_weight(*t);

  Polynomial det = det_exact(principal_minor(build_kirchhoff(a)));
  Polynomial product = theta_product(a);

  CheckResult r;
  if (tree_sum == det && det == product) return r;
  r.pass = false;
  if (tree_sum != det && det != product && tree_sum != product)
    r.failure = "all three routes disagree";
  else if (tree_sum != det)
    r.failure = "Cayley weight sum differs from the Kirchhoff determinant";
  else if (det != product)
    r.failure = "Kirchhoff determinant differs from the closed-form product";
  else
    r.failure = "Cayley weight sum differs from the closed-form product";
  r.exhibits.emplace_back("cayley_weight_sum", std::move(tree_sum));
  r.exhibits.emplace_back("kirchhoff_determinant", std::move(det));
  r.exhibits.emplace_back("closed_form_product", std::move(product));
  return r;
}

}  // namespace hooksum
