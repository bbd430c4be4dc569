// Arbitrary-precision integer support for polynomial coefficients and
// exact identity checks. Thin helpers over GMP's C++ interface.
#ifndef HOOKSUM_BIGINT_HPP
#define HOOKSUM_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hooksum {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient n/d. Throws if d does not divide n.
inline BigInt div_exact(const BigInt& n, const BigInt& d) {
  if (!divides(d, n))
    throw std::logic_error("div_exact: " + d.get_str() + " does not divide " +
                           n.get_str());
  if (n == 0) return 0;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hooksum

#endif  // HOOKSUM_BIGINT_HPP
