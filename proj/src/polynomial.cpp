#include "hooksum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hooksum {

VarId VarId::x(int i) {
  if (i < 0) throw std::invalid_argument("x index must be non-negative");
  return VarId{VarKind::X, i, 0};
}

VarId VarId::y(int i, int j) {
  if (i < 0 || j < i)
    throw std::invalid_argument("y[" + std::to_string(i) + "," + std::to_string(j) +
                                "]: indices must satisfy 0 <= i <= j");
  return VarId{VarKind::Y, i, j};
}

std::string VarId::str() const {
  if (kind == VarKind::X) return "x[" + std::to_string(i) + "]";
  return "y[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

Monomial::Monomial(VarId v, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp > 0) factors_.emplace_back(v, exp);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, o.factors_.end());
  return r;
}

bool Monomial::try_divide(const Monomial& d, Monomial& q) const {
  Monomial r;
  auto a = factors_.begin();
  for (const auto& [v, e] : d.factors_) {
    while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
    if (a == factors_.end() || !(a->first == v) || a->second < e) return false;
    if (a->second > e) r.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  q = std::move(r);
  return true;
}

// Graded-lex: total degree first; ties broken by the earliest variable
// carrying the larger exponent.
int Monomial::compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) return 1;   // a has the earlier variable
    if (ib->first < ia->first) return -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia, ++ib;
  }
  // Equal degree and identical common prefix: both must be exhausted.
  if (ia != a.factors_.end()) return 1;
  if (ib != b.factors_.end()) return -1;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& [v, e] : factors_) {
    mix(static_cast<std::size_t>(v.kind));
    mix(static_cast<std::size_t>(v.i));
    mix(static_cast<std::size_t>(v.j));
    mix(static_cast<std::size_t>(e));
  }
  return h;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Polynomial::Polynomial(BigInt c) {
  if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::variable(VarId v) { return term(Monomial(v), 1); }

Polynomial Polynomial::term(Monomial m, BigInt c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Polynomial::is_monic_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second == 1;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const BigInt& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {
struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};
}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Accumulate cross products in a hash map; determinant work multiplies
  // polynomials with ~10^3 terms, where ordered insertion is the bottleneck.
  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(4 * std::max(a.term_count(), b.term_count()));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      BigInt& slot = acc[ma * mb];
      slot += ca * cb;
    }
  }
  Polynomial r;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace(m, std::move(c));
  return r;
}

std::string Polynomial::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += m.str();
    }
  }
  return s;
}

Polynomial xv(int i) { return Polynomial::variable(VarId::x(i)); }
Polynomial yv(int i, int j) { return Polynomial::variable(VarId::y(i, j)); }

Polynomial pow(const Polynomial& p, unsigned exp) {
  Polynomial r(1);
  for (unsigned k = 0; k < exp; ++k) r *= p;
  return r;
}

Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& bindings) {
  Polynomial result;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term_value(c);
    Monomial untouched;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end())
        untouched = untouched * Monomial(v, e);
      else
        term_value *= pow(it->second, static_cast<unsigned>(e));
    }
    result += term_value * Polynomial::term(untouched, 1);
  }
  return result;
}

Polynomial psi_map(const Polynomial& p, int i, int j) {
  if (i < 1 || i >= j)
    throw std::invalid_argument("psi_map requires 1 <= i < j");
  std::map<VarId, Polynomial> bindings;
  for (int k = 0; k <= i; ++k)
    bindings.emplace(VarId::y(k, i), yv(k, i) + yv(k, j));
  return substitute(p, bindings);
}

Polynomial derivative(const Polynomial& p, VarId v) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    if (e == 0) continue;
    Monomial q;
    m.try_divide(Monomial(v), q);
    r += Polynomial::term(q, c * e);
  }
  return r;
}

BigInt eval_integers(const Polynomial& p, const std::map<VarId, BigInt>& bindings) {
  BigInt total = 0;
  for (const auto& [m, c] : p.terms()) {
    BigInt t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end())
        throw std::invalid_argument("eval_integers: unbound variable " + v.str());
      t *= big_pow(it->second, static_cast<unsigned long>(e));
    }
    total += t;
  }
  return total;
}

}  // namespace hooksum
