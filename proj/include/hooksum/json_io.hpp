// Canonical JSON forms used by the CLI and the Python module.
//
// Polynomial: a sorted list of terms, leading monomial first, each term
//   {"coeff": "<decimal string>", "vars": [[["x",i]|["y",i,j], exp], ...]}.
//   Coefficients travel as decimal strings so arbitrary precision survives.
// Tree: {"labels": [...], "father": {"<child>": father, ...}} with father
//   keys in numeric order. Decorated trees add "phi" in the same shape.
#ifndef HOOKSUM_JSON_IO_HPP
#define HOOKSUM_JSON_IO_HPP

#include <json.hpp>

#include "hooksum/bijection.hpp"
#include "hooksum/polynomial.hpp"
#include "hooksum/trees.hpp"

namespace hooksum {

using ojson = nlohmann::ordered_json;

ojson poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

ojson tree_to_json(const RootedTree& t);
RootedTree tree_from_json(const nlohmann::json& j);

ojson phi_to_json(const std::map<int, int>& phi);
std::map<int, int> phi_from_json(const nlohmann::json& j);

ojson decorated_to_json(const DecoratedTree& d);
DecoratedTree decorated_from_json(const nlohmann::json& j);

}  // namespace hooksum

#endif  // HOOKSUM_JSON_IO_HPP
