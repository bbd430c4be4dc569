#include "hooksum/json_io.hpp"

#include <stdexcept>
#include <string>

namespace hooksum {

using nlohmann::json;

ojson poly_to_json(const Polynomial& p) {
  ojson terms = ojson::array();
  const auto& map = p.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    ojson vars = ojson::array();
    for (const auto& [v, e] : it->first.factors()) {
      ojson head = v.kind == VarKind::X ? ojson::array({"x", v.i})
                                        : ojson::array({"y", v.i, v.j});
      vars.push_back(ojson::array({head, e}));
    }
    ojson term;
    term["coeff"] = it->second.get_str();
    term["vars"] = std::move(vars);
    terms.push_back(std::move(term));
  }
  return terms;
}

Polynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Polynomial p;
  for (const auto& term : j) {
    BigInt coeff(term.at("coeff").get<std::string>());
    Monomial m;
    for (const auto& factor : term.at("vars")) {
      const auto& head = factor.at(0);
      const int exp = factor.at(1).get<int>();
      if (exp <= 0) throw std::invalid_argument("exponents must be positive");
      VarId v = head.at(0).get<std::string>() == "x"
                    ? VarId::x(head.at(1).get<int>())
                    : VarId::y(head.at(1).get<int>(), head.at(2).get<int>());
      if (m.exponent(v) != 0) throw std::invalid_argument("duplicate variable in term");
      m = m * Monomial(v, exp);
    }
    p += Polynomial::term(std::move(m), std::move(coeff));
  }
  return p;
}

ojson tree_to_json(const RootedTree& t) {
  ojson j;
  j["labels"] = t.labels().labels();
  ojson father = ojson::object();
  for (const auto& [child, f] : t.father_map())
    father[std::to_string(child)] = f;
  j["father"] = std::move(father);
  return j;
}

RootedTree tree_from_json(const json& j) {
  LabelSet labels(j.at("labels").get<std::vector<int>>());
  std::map<int, int> father;
  for (const auto& [key, value] : j.at("father").items())
    father[std::stoi(key)] = value.get<int>();
  return RootedTree(std::move(labels), std::move(father));
}

ojson phi_to_json(const std::map<int, int>& phi) {
  ojson j = ojson::object();
  for (const auto& [v, img] : phi) j[std::to_string(v)] = img;
  return j;
}

std::map<int, int> phi_from_json(const json& j) {
  std::map<int, int> phi;
  for (const auto& [key, value] : j.items()) phi[std::stoi(key)] = value.get<int>();
  return phi;
}

ojson decorated_to_json(const DecoratedTree& d) {
  ojson j = tree_to_json(d.tree);
  j["phi"] = phi_to_json(d.phi);
  return j;
}

DecoratedTree decorated_from_json(const json& j) {
  return DecoratedTree{tree_from_json(j), phi_from_json(j.at("phi"))};
}

}  // namespace hooksum
