// Python bindings for the hook-sum engine. Polynomials cross the boundary
// as an opaque Poly class; trees as plain dicts {"labels": [...],
// "father": {child: father}}; reports as JSON strings that the package
// wrapper parses.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "hooksum/bijection.hpp"
#include "hooksum/identities.hpp"
#include "hooksum/json_io.hpp"
#include "hooksum/matrixtree.hpp"
#include "hooksum/verify.hpp"

namespace py = pybind11;
using namespace hooksum;

namespace {

RootedTree tree_from_py(const py::dict& d) {
  auto labels = d["labels"].cast<std::vector<int>>();
  std::map<int, int> father;
  for (auto item : d["father"].cast<py::dict>()) {
    int child = py::isinstance<py::str>(item.first)
                    ? std::stoi(item.first.cast<std::string>())
                    : item.first.cast<int>();
    father[child] = item.second.cast<int>();
  }
  return RootedTree(LabelSet(std::move(labels)), std::move(father));
}

py::dict tree_to_py(const RootedTree& t) {
  py::dict d;
  d["labels"] = t.labels().labels();
  py::dict father;
  for (const auto& [child, f] : t.father_map()) father[py::int_(child)] = f;
  d["father"] = father;
  return d;
}

std::map<int, int> phi_from_py(const py::dict& d) {
  std::map<int, int> phi;
  for (auto item : d) {
    int v = py::isinstance<py::str>(item.first)
                ? std::stoi(item.first.cast<std::string>())
                : item.first.cast<int>();
    phi[v] = item.second.cast<int>();
  }
  return phi;
}

py::dict phi_to_py(const std::map<int, int>& phi) {
  py::dict d;
  for (const auto& [v, img] : phi) d[py::int_(v)] = img;
  return d;
}

VarId var_from_py(const py::tuple& t) {
  auto kind = t[0].cast<std::string>();
  if (kind == "x") return VarId::x(t[1].cast<int>());
  if (kind == "y") return VarId::y(t[1].cast<int>(), t[2].cast<int>());
  throw std::invalid_argument("variable tuples look like ('x', i) or ('y', i, j)");
}

py::object big_to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

std::string verify_json(const std::string& which,
                        std::optional<std::vector<int>> labels,
                        std::optional<int> n, std::optional<std::string> u,
                        std::optional<std::string> v, std::optional<int> anchor,
                        std::optional<int> labels_max) {
  auto need_labels = [&]() {
    if (!labels) throw std::invalid_argument("this check needs labels=[...]");
    return LabelSet(*labels);
  };
  ojson rep;
  if (which == "thm11") {
    rep = verify_thm11(need_labels());
  } else if (which == "recursion") {
    rep = verify_recursion(need_labels(), anchor);
  } else if (which == "strehl") {
    rep = verify_strehl(need_labels());
  } else if (which == "abel") {
    if (!n || !u || !v) throw std::invalid_argument("abel needs n, u, v");
    rep = verify_abel(*n, BigInt(*u), BigInt(*v));
  } else if (which == "hurwitz") {
    rep = verify_hurwitz(need_labels());
  } else if (which == "psi") {
    if (!n) throw std::invalid_argument("psi needs n");
    rep = verify_psi(*n);
  } else if (which == "matrixtree") {
    rep = verify_matrixtree(need_labels());
  } else if (which == "bijection") {
    rep = verify_bijection(need_labels());
  } else if (which == "all") {
    rep = verify_all(labels_max.value_or(5));
  } else {
    throw std::invalid_argument("unknown check '" + which + "'");
  }
  return rep.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact hook-sum engine for increasing and Cayley trees";

  py::register_exception<DecorationError>(m, "DecorationError", PyExc_ValueError);

  py::class_<Polynomial>(m, "Poly")
      .def(py::init([](const std::string& c) { return Polynomial(BigInt(c)); }))
      .def(py::init([](long c) { return Polynomial(c); }))
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__str__", &Polynomial::pretty)
      .def("__repr__", [](const Polynomial& p) { return "Poly(" + p.pretty() + ")"; })
      .def("is_zero", &Polynomial::is_zero)
      .def("term_count", &Polynomial::term_count)
      .def("total_degree", &Polynomial::total_degree)
      .def("to_json", [](const Polynomial& p) { return poly_to_json(p).dump(); });

  m.def("x", [](int i) { return xv(i); });
  m.def("y", [](int i, int j) { return yv(i, j); });
  m.def("poly_from_json", [](const std::string& s) {
    return poly_from_json(nlohmann::json::parse(s));
  });
  m.def("substitute", [](const Polynomial& p, const py::dict& bindings) {
    std::map<VarId, Polynomial> b;
    for (auto item : bindings)
      b.emplace(var_from_py(item.first.cast<py::tuple>()),
                item.second.cast<Polynomial>());
    return substitute(p, b);
  });
  m.def("psi_map", [](const Polynomial& p, int i, int j) { return psi_map(p, i, j); });
  m.def("derivative", [](const Polynomial& p, const py::tuple& v) {
    return derivative(p, var_from_py(v));
  });
  m.def("eval_int", [](const Polynomial& p, const py::dict& bindings) {
    std::map<VarId, BigInt> b;
    for (auto item : bindings)
      b.emplace(var_from_py(item.first.cast<py::tuple>()),
                BigInt(py::str(item.second).cast<std::string>()));
    return big_to_py(eval_integers(p, b));
  });

  m.def("count_cayley",
        [](const std::vector<int>& l) { return big_to_py(count_cayley(LabelSet(l))); });
  m.def("count_increasing", [](const std::vector<int>& l) {
    return big_to_py(count_increasing(LabelSet(l)));
  });
  m.def("enumerate_cayley", [](const std::vector<int>& l) {
    py::list out;
    CayleyEnumeration en{LabelSet(l)};
    while (auto t = en.next()) out.append(tree_to_py(*t));
    return out;
  });
  m.def("enumerate_increasing", [](const std::vector<int>& l) {
    py::list out;
    IncreasingEnumeration en{LabelSet(l)};
    while (auto t = en.next()) out.append(tree_to_py(*t));
    return out;
  });

  m.def("theta", [](const std::vector<int>& l, const std::string& form) {
    LabelSet a{l};
    if (form == "product") return theta_product(a);
    if (form == "sum") return theta_sum(a);
    throw std::invalid_argument("form must be 'product' or 'sum'");
  }, py::arg("labels"), py::arg("form") = "product");
  m.def("theta_n", &theta_n);
  m.def("root_hook_factor",
        [](const std::vector<int>& l) { return root_hook_factor(LabelSet(l)); });

  m.def("hook_weight", [](const py::dict& t) { return hook_weight(tree_from_py(t)); });
  m.def("cayley_weight",
        [](const py::dict& t) { return cayley_weight(tree_from_py(t)); });
  m.def("decorated_weight", [](const py::dict& t, const py::dict& phi) {
    return decorated_weight(tree_from_py(t), phi_from_py(phi));
  });

  m.def("validate", [](const py::dict& t, const py::dict& phi) {
    DecorationIndex idx = validate(tree_from_py(t), phi_from_py(phi));
    return py::make_tuple(idx.decreasing, idx.displaced);
  });
  auto step_out = [](const DecoratedTree& d) {
    return py::make_tuple(tree_to_py(d.tree), phi_to_py(d.phi));
  };
  m.def("unsort_step", [step_out](const py::dict& t, const py::dict& phi) {
    return step_out(unsort_step({tree_from_py(t), phi_from_py(phi)}));
  });
  m.def("resort_step", [step_out](const py::dict& t, const py::dict& phi) {
    return step_out(resort_step({tree_from_py(t), phi_from_py(phi)}));
  });
  m.def("unsort_full", [step_out](const py::dict& t, const py::dict& phi) {
    return step_out(unsort_full({tree_from_py(t), phi_from_py(phi)}));
  });
  m.def("trace_unsort_json", [](const py::dict& t, const py::dict& phi) {
    auto chain = unsort_chain({tree_from_py(t), phi_from_py(phi)});
    ojson steps = ojson::array();
    for (std::size_t k = 0; k < chain.size(); ++k) {
      DecorationIndex idx = validate(chain[k]);
      ojson step;
      step["step"] = k;
      step["tree"] = tree_to_json(chain[k].tree);
      step["phi"] = phi_to_json(chain[k].phi);
      step["index"] = ojson{{"i", idx.decreasing}, {"j", idx.displaced}};
      step["weight"] = poly_to_json(chain[k].weight());
      steps.push_back(std::move(step));
    }
    return steps.dump();
  });

  m.def("kirchhoff", [](const std::vector<int>& l) {
    PolyMatrix k = build_kirchhoff(LabelSet(l));
    py::list rows;
    for (std::size_t r = 0; r < k.dim(); ++r) {
      py::list row;
      for (std::size_t c = 0; c < k.dim(); ++c) row.append(k.at(r, c));
      rows.append(row);
    }
    return rows;
  });
  m.def("det_kirchhoff", [](const std::vector<int>& l) {
    return det_exact(principal_minor(build_kirchhoff(LabelSet(l))));
  });

  m.def("verify_json", &verify_json, py::arg("which"),
        py::arg("labels") = std::nullopt, py::arg("n") = std::nullopt,
        py::arg("u") = std::nullopt, py::arg("v") = std::nullopt,
        py::arg("a") = std::nullopt, py::arg("labels_max") = std::nullopt);
}
