// Command-line front end: enumeration, generating polynomials, identity
// verification, and bijection tracing, all with deterministic JSON output.
//
// Exit codes: 0 success, 1 identity/validation failure, 2 usage error.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hooksum/bijection.hpp"
#include "hooksum/identities.hpp"
#include "hooksum/json_io.hpp"
#include "hooksum/matrixtree.hpp"
#include "hooksum/verify.hpp"

namespace {

using hooksum::LabelSet;
using hooksum::ojson;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CLI label sets are strictly positive; 0 is reserved for the convolution
// identities, which introduce it themselves.
LabelSet parse_labels(const std::string& csv) {
  std::vector<int> labels;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (v <= 0) throw UsageError("labels must be positive: " + item);
      labels.push_back(v);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("malformed label '" + item + "'");
    }
  }
  try {
    return LabelSet(labels);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int default_max_size() {
  if (const char* env = std::getenv("HOOKSUM_MAX_SIZE")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("HOOKSUM_MAX_SIZE is not an integer");
    }
  }
  return 7;
}

ojson parse_json_arg(const std::string& arg) {
  std::string text = arg;
  // Inline JSON starts with '{'; anything else is a file path.
  if (!arg.empty() && arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return ojson::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad JSON: ") + e.what());
  }
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count() / 1.0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hook-sum engine for increasing and Cayley trees"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream trees as JSON lines");
  enumerate->fallthrough();
  std::string enum_kind, enum_labels;
  bool enum_count = false, enum_force = false;
  int enum_max_size = -1;
  enumerate->add_option("kind", enum_kind, "cayley or increasing")->required();
  enumerate->add_option("--labels", enum_labels, "comma-separated label set")->required();
  enumerate->add_flag("--count", enum_count, "print only the number of trees");
  enumerate->add_option("--max-size", enum_max_size,
                        "largest |A| enumerated without --force (default 7, "
                        "or HOOKSUM_MAX_SIZE)");
  enumerate->add_flag("--force", enum_force, "ignore the size guard");

  // theta
  auto* theta = app.add_subcommand("theta", "print a generating polynomial");
  theta->fallthrough();
  std::string theta_labels, theta_form = "product";
  bool theta_pretty = false;
  theta->add_option("--labels", theta_labels)->required();
  theta->add_option("--form", theta_form, "sum, product, or thm3");
  theta->add_flag("--pretty", theta_pretty, "human-readable instead of JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity check");
  verify->fallthrough();
  std::string verify_which, verify_labels;
  int verify_n = 0, verify_labels_max = 5;
  std::string verify_u, verify_v;
  int verify_anchor_val = 0;
  bool verify_timing = false;
  verify->add_option("which", verify_which,
                     "thm11|recursion|strehl|abel|hurwitz|psi|matrixtree|bijection|all")
      ->required();
  verify->add_option("--labels", verify_labels);
  verify->add_option("--n", verify_n);
  verify->add_option("--u", verify_u);
  verify->add_option("--v", verify_v);
  verify->add_option("--a", verify_anchor_val, "anchor label for the recursion check");
  verify->add_option("--labels-max", verify_labels_max, "size bound for 'all'");
  verify->add_flag("--timing", verify_timing, "include elapsed_ms in the report");

  // trace-unsort
  auto* trace = app.add_subcommand("trace-unsort",
                                   "unsort a decorated tree step by step");
  trace->fallthrough();
  std::string trace_tree, trace_phi;
  trace->add_option("--tree", trace_tree, "tree JSON (inline or a file path)")
      ->required();
  trace->add_option("--phi", trace_phi, "decoration JSON, e.g. {\"2\":3}");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "print the Kirchhoff matrix");
  matrix->fallthrough();
  std::string matrix_labels;
  bool matrix_minor = false, matrix_det = false, matrix_pretty = false;
  matrix->add_option("--labels", matrix_labels)->required();
  matrix->add_flag("--minor", matrix_minor, "drop the row/column of min(A)");
  matrix->add_flag("--det", matrix_det, "print det of the principal minor");
  matrix->add_flag("--pretty", matrix_pretty);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output out(out_path);

    if (*enumerate) {
      if (enum_kind != "cayley" && enum_kind != "increasing")
        throw UsageError("kind must be 'cayley' or 'increasing'");
      LabelSet a = parse_labels(enum_labels);
      int guard = enum_max_size >= 0 ? enum_max_size : default_max_size();
      if (!enum_force && static_cast<int>(a.size()) > guard)
        throw UsageError("label set larger than the size guard (" +
                         std::to_string(guard) + "); pass --force to enumerate");
      if (enum_kind == "cayley") {
        if (enum_count) {
          out.stream() << hooksum::count_cayley(a).get_str() << "\n";
        } else {
          hooksum::CayleyEnumeration en(a);
          while (auto t = en.next()) out.stream() << hooksum::tree_to_json(*t).dump() << "\n";
        }
      } else {
        if (enum_count) {
          out.stream() << hooksum::count_increasing(a).get_str() << "\n";
        } else {
          hooksum::IncreasingEnumeration en(a);
          while (auto t = en.next()) out.stream() << hooksum::tree_to_json(*t).dump() << "\n";
        }
      }
      return kExitPass;
    }

    if (*theta) {
      LabelSet a = parse_labels(theta_labels);
      hooksum::Polynomial p;
      if (theta_form == "product") {
        p = hooksum::theta_product(a);
      } else if (theta_form == "sum") {
        p = hooksum::theta_sum(a);
      } else if (theta_form == "thm3") {
        const int n = static_cast<int>(a.size());
        if (a.min() != 1 || a.max() != n)
          throw UsageError("--form thm3 needs the contiguous labels 1..n");
        p = hooksum::theta_n(n);
      } else {
        throw UsageError("--form must be sum, product, or thm3");
      }
      if (theta_pretty)
        out.stream() << p.pretty() << "\n";
      else
        out.stream() << hooksum::poly_to_json(p).dump() << "\n";
      return kExitPass;
    }

    if (*verify) {
      auto started = std::chrono::steady_clock::now();
      auto need_labels = [&]() {
        if (verify_labels.empty()) throw UsageError("--labels is required");
        return parse_labels(verify_labels);
      };
      ojson rep;
      std::optional<int> verify_anchor;
      if (verify->count("--a")) verify_anchor = verify_anchor_val;
      if (verify_which == "thm11") {
        rep = hooksum::verify_thm11(need_labels());
      } else if (verify_which == "recursion") {
        rep = hooksum::verify_recursion(need_labels(), verify_anchor);
      } else if (verify_which == "strehl") {
        rep = hooksum::verify_strehl(need_labels());
      } else if (verify_which == "abel") {
        if (verify_n < 1) throw UsageError("--n must be >= 1");
        if (verify_u.empty() || verify_v.empty())
          throw UsageError("abel needs --u and --v");
        rep = hooksum::verify_abel(verify_n, hooksum::BigInt(verify_u),
                                   hooksum::BigInt(verify_v));
      } else if (verify_which == "hurwitz") {
        rep = hooksum::verify_hurwitz(need_labels());
      } else if (verify_which == "psi") {
        if (verify_n < 1) throw UsageError("--n must be >= 1");
        rep = hooksum::verify_psi(verify_n);
      } else if (verify_which == "matrixtree") {
        rep = hooksum::verify_matrixtree(need_labels());
      } else if (verify_which == "bijection") {
        rep = hooksum::verify_bijection(need_labels());
      } else if (verify_which == "all") {
        if (verify_labels_max < 1) throw UsageError("--labels-max must be >= 1");
        rep = hooksum::verify_all(verify_labels_max);
      } else {
        throw UsageError("unknown check '" + verify_which + "'");
      }
      if (verify_timing) rep["elapsed_ms"] = elapsed_ms_since(started);
      out.stream() << rep.dump(2) << "\n";
      return rep["pass"].get<bool>() ? kExitPass : kExitFail;
    }

    if (*trace) {
      ojson tree_doc = parse_json_arg(trace_tree);
      ojson phi_doc;
      if (!trace_phi.empty())
        phi_doc = parse_json_arg(trace_phi);
      else if (tree_doc.contains("phi"))
        phi_doc = tree_doc["phi"];
      else
        throw UsageError("no decoration: pass --phi or embed \"phi\" in --tree");

      hooksum::DecoratedTree d{hooksum::tree_from_json(tree_doc),
                               hooksum::phi_from_json(phi_doc)};
      std::vector<hooksum::DecoratedTree> chain;
      try {
        chain = hooksum::unsort_chain(d);
      } catch (const hooksum::DecorationError& e) {
        ojson err;
        err["error"] = "validation";
        err["condition"] = e.condition;
        err["vertex"] = e.vertex;
        err["message"] = e.what();
        out.stream() << err.dump(2) << "\n";
        return kExitFail;
      }
      ojson steps = ojson::array();
      for (std::size_t k = 0; k < chain.size(); ++k) {
        hooksum::DecorationIndex idx = hooksum::validate(chain[k]);
        ojson step;
        step["step"] = k;
        step["tree"] = hooksum::tree_to_json(chain[k].tree);
        step["phi"] = hooksum::phi_to_json(chain[k].phi);
        step["index"] = ojson{{"i", idx.decreasing}, {"j", idx.displaced}};
        step["weight"] = hooksum::poly_to_json(chain[k].weight());
        steps.push_back(std::move(step));
      }
      out.stream() << steps.dump(2) << "\n";
      return kExitPass;
    }

    if (*matrix) {
      LabelSet a = parse_labels(matrix_labels);
      if (a.size() < 2) throw UsageError("matrix needs at least two labels");
      hooksum::PolyMatrix k = hooksum::build_kirchhoff(a);
      if (matrix_det) {
        hooksum::Polynomial d = hooksum::det_exact(hooksum::principal_minor(k));
        if (matrix_pretty)
          out.stream() << d.pretty() << "\n";
        else
          out.stream() << hooksum::poly_to_json(d).dump() << "\n";
        return kExitPass;
      }
      if (matrix_minor) k = hooksum::principal_minor(k);
      ojson rows = ojson::array();
      for (std::size_t r = 0; r < k.dim(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < k.dim(); ++c) {
          if (matrix_pretty)
            row.push_back(k.at(r, c).pretty());
          else
            row.push_back(hooksum::poly_to_json(k.at(r, c)));
        }
        rows.push_back(std::move(row));
      }
      out.stream() << rows.dump() << "\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hooksum::DecorationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
