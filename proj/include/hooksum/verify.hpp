// JSON report layer shared by the CLI and the Python module. Every runner
// returns a single document {"check", "params", "pass", ...} with the
// disagreeing polynomials serialized on failure. Reports contain nothing
// nondeterministic unless timing is requested explicitly.
#ifndef HOOKSUM_VERIFY_HPP
#define HOOKSUM_VERIFY_HPP

#include <optional>
#include <string>

#include "hooksum/json_io.hpp"

namespace hooksum {

ojson verify_thm11(const LabelSet& a);
ojson verify_recursion(const LabelSet& a, std::optional<int> anchor);
ojson verify_strehl(const LabelSet& a);
ojson verify_abel(int n, const BigInt& u, const BigInt& v);
ojson verify_hurwitz(const LabelSet& a);
ojson verify_psi(int n);
ojson verify_matrixtree(const LabelSet& a);
ojson verify_bijection(const LabelSet& a);

// The whole battery over label sets drawn from {1..labels_max}, in a fixed
// order. Byte-identical output across runs by construction.
ojson verify_all(int labels_max);

}  // namespace hooksum

#endif  // HOOKSUM_VERIFY_HPP
