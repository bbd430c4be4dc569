#include "hooksum/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hooksum/weights.hpp"

namespace hooksum {

namespace {

CheckResult mismatch(std::string what, std::string lhs_name, Polynomial lhs,
                     std::string rhs_name, Polynomial rhs) {
  CheckResult r;
  r.pass = false;
  r.failure = std::move(what);
  r.exhibits.emplace_back(std::move(lhs_name), std::move(lhs));
  r.exhibits.emplace_back(std::move(rhs_name), std::move(rhs));
  return r;
}

// Calls fn(B, C) for every split of `rest` into B and C around fixed seeds;
// B and C are plain sorted vectors so they may be empty.
template <typename Fn>
void for_each_split(const std::vector<int>& rest, Fn&& fn) {
  const std::size_t n = rest.size();
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> b, c;
    for (std::size_t k = 0; k < n; ++k)
      (mask >> k & 1 ? b : c).push_back(rest[k]);
    fn(b, c);
  }
}

Polynomial theta_of(const std::vector<int>& labels) {
  return theta_product(LabelSet(labels));
}

}  // namespace

Polynomial theta_product(const LabelSet& a) {
  const auto& ls = a.labels();
  if (ls.size() == 1) return Polynomial(1);
  Polynomial p = xv(a.min()) * yv(a.max(), a.max());
  for (std::size_t k = 1; k + 1 < ls.size(); ++k) {
    const int i = ls[k];
    Polynomial xs, ys;
    for (int j : ls)
      if (j <= i) xs += xv(j);
    for (int j : ls)
      if (j > i) ys += yv(i, j);
    p *= yv(i, i) * xs + xv(i) * ys;
  }
  return p;
}

Polynomial theta_sum(const LabelSet& a) {
  Polynomial s;
  IncreasingEnumeration en(a);
  while (auto t = en.next()) s += hook_weight(*t);
  return s;
}

Polynomial theta_n(int n) {
  if (n < 1) throw std::invalid_argument("theta_n requires n >= 1");
  Polynomial p = yv(n, n);
  for (int i = 1; i < n; ++i) {
    Polynomial xs, ys;
    for (int j = 1; j <= i; ++j) xs += xv(j);
    for (int j = i + 1; j <= n; ++j) ys += yv(i, j);
    p *= yv(i, i) * xs + xv(i) * ys;
  }
  return p;
}

Polynomial root_edge_product(const LabelSet& a) {
  const auto& ls = a.labels();
  if (ls.size() < 2)
    throw std::invalid_argument("root_edge_product requires |A| >= 2");
  Polynomial p = xv(a.min()) * yv(a.max(), a.max());
  for (std::size_t k = 1; k + 1 < ls.size(); ++k) {
    const int i = ls[k];
    Polynomial xs, ys;
    for (int j : ls) {
      if (j == a.min()) continue;
      if (j <= i) xs += xv(j);
      if (j > i) ys += yv(i, j);
    }
    p *= yv(i, i) * xs + xv(i) * ys;
  }
  return p;
}

Polynomial root_edge_derivative(const LabelSet& a) {
  if (a.size() < 2)
    throw std::invalid_argument("root_edge_derivative requires |A| >= 2");
  const VarId xm = VarId::x(a.min());
  Polynomial d = derivative(theta_product(a), xm);
  return xv(a.min()) * substitute(d, {{xm, Polynomial(0)}});
}

Polynomial strehl_w(const LabelSet& a, const Polynomial& z) {
  Polynomial p = z;
  for (int i : a.labels()) {
    if (i == a.max()) continue;
    Polynomial factor = z;
    for (int j : a.labels()) {
      if (j <= i)
        factor += xv(j);
      else
        factor += yv(i, j);
    }
    p *= factor;
  }
  return p;
}

CheckResult split_recursion_check(const LabelSet& a, int anchor) {
  if (a.size() < 2 || anchor == a.min() || !a.contains(anchor))
    throw std::invalid_argument("anchor must be a non-minimal element of A");

  std::vector<int> rest;
  for (int v : a.labels())
    if (v != a.min() && v != anchor) rest.push_back(v);

  auto rhs_with = [&](auto&& theta) {
    Polynomial rhs;
    for_each_split(rest, [&](std::vector<int> b, std::vector<int> c) {
      b.push_back(anchor);
      std::sort(b.begin(), b.end());
      c.push_back(a.min());
      std::sort(c.begin(), c.end());
      Polynomial edge;
      for (int j : b) edge += yv(b.front(), j);
      rhs += xv(a.min()) * edge * theta(LabelSet(b)) * theta(LabelSet(c));
    });
    return rhs;
  };

  Polynomial lhs_prod = theta_product(a);
  Polynomial rhs_prod = rhs_with([](const LabelSet& s) { return theta_product(s); });
  if (lhs_prod != rhs_prod)
    return mismatch("split recursion fails for the closed product",
                    "theta_product", lhs_prod, "split_sum", rhs_prod);

  Polynomial lhs_sum = theta_sum(a);
  Polynomial rhs_sum = rhs_with([](const LabelSet& s) { return theta_sum(s); });
  if (lhs_sum != rhs_sum)
    return mismatch("split recursion fails for the hook-weight sum",
                    "theta_sum", lhs_sum, "split_sum", rhs_sum);
  return {};
}

CheckResult root_edge_check(const LabelSet& a) {
  Polynomial closed = root_edge_product(a);
  Polynomial byderiv = root_edge_derivative(a);
  if (closed != byderiv)
    return mismatch("closed product differs from the derivative route",
                    "root_edge_product", closed, "root_edge_derivative", byderiv);

  // Both tree families restricted to a single root edge.
  Polynomial cayley_sum;
  CayleyEnumeration cen(a);
  while (auto t = cen.next()) {
    int root_children = 0;
    for (const auto& [v, f] : t->father_map())
      if (f == t->root()) ++root_children;
    if (root_children == 1) cayley_sum += cayley_weight(*t);
  }
  if (closed != cayley_sum)
    return mismatch("closed product differs from the single-root-edge Cayley sum",
                    "root_edge_product", closed, "cayley_sum", cayley_sum);

  Polynomial incr_sum;
  IncreasingEnumeration ien(a);
  while (auto t = ien.next()) {
    int root_children = 0;
    for (const auto& [v, f] : t->father_map())
      if (f == t->root()) ++root_children;
    if (root_children == 1) incr_sum += hook_weight(*t);
  }
  if (byderiv != incr_sum)
    return mismatch("derivative route differs from the single-root-edge hook sum",
                    "root_edge_derivative", byderiv, "hook_sum", incr_sum);
  return {};
}

CheckResult strehl_check(const LabelSet& a) {
  if (a.min() < 1)
    throw std::invalid_argument("strehl_check requires strictly positive labels");
  const int u = a.max() + 1, v = a.max() + 2;
  const VarId x0 = VarId::x(0);

  Polynomial lhs = substitute(theta_product(a.with_zero()), {{x0, xv(u) + xv(v)}});

  Polynomial rhs;
  for_each_split(a.labels(), [&](std::vector<int> b, std::vector<int> c) {
    b.push_back(0);
    c.push_back(0);
    Polynomial left = substitute(theta_of(b), {{x0, xv(u)}});
    Polynomial right = substitute(theta_of(c), {{x0, xv(v)}});
    rhs += left * right;
  });

  if (lhs != rhs)
    return mismatch("convolution identity fails (u=x[" + std::to_string(u) +
                        "], v=x[" + std::to_string(v) + "])",
                    "theta_at_u_plus_v", lhs, "split_convolution", rhs);
  return {};
}

CheckResult abel_check(int n, const BigInt& u, const BigInt& v) {
  if (n < 1) throw std::invalid_argument("abel_check requires n >= 1");
  auto factor = [](const BigInt& z, int k) -> BigInt {
    if (k == 0) return 1;
    return z * big_pow(z + k, static_cast<unsigned long>(k - 1));
  };
  BigInt lhs = (u + v) * big_pow(u + v + n, static_cast<unsigned long>(n - 1));
  BigInt rhs = 0;
  for (int k = 0; k <= n; ++k)
    rhs += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
           factor(u, k) * factor(v, n - k);
  if (lhs != rhs) {
    CheckResult r;
    r.pass = false;
    r.failure = "Abel identity fails: lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
    return r;
  }
  return {};
}

CheckResult hurwitz_check(const LabelSet& a) {
  if (a.min() < 1)
    throw std::invalid_argument("hurwitz_check requires strictly positive labels");
  const Polynomial u = xv(a.max() + 1), v = xv(a.max() + 2);

  // The Hurwitz form of the w family: send every off-diagonal y[i,j] to x[j].
  std::map<VarId, Polynomial> to_x;
  for (int i : a.labels())
    for (int j : a.labels())
      if (i < j) to_x.emplace(VarId::y(i, j), xv(j));
  auto w_factor = [&](const std::vector<int>& set, const Polynomial& z) {
    if (set.empty()) return Polynomial(1);
    return substitute(strehl_w(LabelSet(set), z), to_x);
  };

  Polynomial lhs = w_factor(a.labels(), u + v);
  Polynomial rhs;
  for_each_split(a.labels(), [&](const std::vector<int>& b, const std::vector<int>& c) {
    rhs += w_factor(b, u) * w_factor(c, v);
  });

  if (lhs != rhs)
    return mismatch("Hurwitz identity fails (u=x[" + std::to_string(a.max() + 1) +
                        "], v=x[" + std::to_string(a.max() + 2) + "])",
                    "w_at_u_plus_v", lhs, "split_convolution", rhs);
  return {};
}

CheckResult psi_recursion_check(int n) {
  if (n < 1) throw std::invalid_argument("psi_recursion_check requires n >= 1");
  Polynomial rebuilt;
  Polynomial base = theta_n(n);
  for (int i = 1; i <= n; ++i) rebuilt += xv(i) * psi_map(base, i, n + 1);
  rebuilt *= yv(n + 1, n + 1);
  Polynomial direct = theta_n(n + 1);
  if (rebuilt != direct)
    return mismatch("leaf-extension recursion fails at n=" + std::to_string(n),
                    "psi_rebuilt", rebuilt, "theta_n", direct);
  return {};
}

CheckResult hook_sum_check(const LabelSet& a) {
  Polynomial sum = theta_sum(a);
  Polynomial product = theta_product(a);
  if (sum != product)
    return mismatch("hook-weight sum differs from the closed product",
                    "theta_sum", sum, "theta_product", product);

  Polynomial cayley_sum;
  CayleyEnumeration en(a);
  while (auto t = en.next()) cayley_sum += cayley_weight(*t);
  if (cayley_sum != product)
    return mismatch("Cayley weight sum differs from the closed product",
                    "cayley_weight_sum", cayley_sum, "theta_product", product);

  if (a.size() >= 2) {
    CheckResult mt = matrix_tree_check(a);
    if (!mt.pass) return mt;
  }
  return {};
}

CheckResult specialization_chain_check(const LabelSet& a) {
  if (a.min() < 1)
    throw std::invalid_argument("specialization_chain_check requires positive labels");
  LabelSet a0 = a.with_zero();

  std::map<VarId, Polynomial> kill_diagonal;
  for (int i : a0.labels()) kill_diagonal.emplace(VarId::y(i, i), Polynomial(1));
  Polynomial lhs = substitute(theta_product(a0), kill_diagonal);

  std::map<VarId, Polynomial> absorb_x;
  for (int i : a.labels())
    for (int j : a.labels())
      if (i < j) absorb_x.emplace(VarId::y(i, j), xv(i) * yv(i, j));
  Polynomial rhs = substitute(strehl_w(a, xv(0)), absorb_x);

  if (lhs != rhs)
    return mismatch("theta/w specialization bridge fails",
                    "theta_diagonal_free", lhs, "w_absorbed", rhs);
  return {};
}

}  // namespace hooksum
