// Shared outcome type for identity checks: on failure, `failure` names what
// went wrong and `exhibits` carries the disagreeing polynomials.
#ifndef HOOKSUM_CHECK_HPP
#define HOOKSUM_CHECK_HPP

#include <string>
#include <utility>
#include <vector>

#include "hooksum/polynomial.hpp"

namespace hooksum {

struct CheckResult {
  bool pass = true;
  std::string failure;
  std::vector<std::pair<std::string, Polynomial>> exhibits;
};

}  // namespace hooksum

#endif  // HOOKSUM_CHECK_HPP
