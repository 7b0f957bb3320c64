#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ncilab/analysis.hpp"
#include "ncilab/matching.hpp"
#include "ncilab/selftest.hpp"

using namespace ncilab;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInconsistent = 2, kBudget = 3 };

struct Options {
  std::string input;
  bool json = false;
  bool hypergraph = false;
  bool weighted = false;
  std::size_t max_vars = 0;
  std::uint64_t max_subsets = 0;
};

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// "-" reads stdin, "@path" reads a file, anything else is literal.
std::string read_argument(const std::string& arg) {
  if (arg == "-") return slurp(std::cin);
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw Error(ErrorKind::Schema, "cannot read " + arg.substr(1));
    return slurp(file);
  }
  return arg;
}

AnalysisInput load(const Options& o) {
  if (o.hypergraph && o.weighted) throw Error(ErrorKind::Schema, "--hypergraph and --weighted are exclusive");
  const std::string text = read_argument(o.input);
  if (!o.hypergraph && !o.weighted) return input_from_ideal(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
  return o.hypergraph ? input_from_hypergraph(j) : input_from_weighted(j);
}

Budget budget_of(const Options& o) {
  Budget b = Budget::from_environment();
  if (o.max_vars != 0) b.max_vars = o.max_vars;
  if (o.max_subsets != 0) b.max_subsets = o.max_subsets;
  return b;
}

std::string text_of(const Json& j) { return j.is_null() ? "-" : j.get<std::string>(); }

void print_verdict(const Json& v) {
  std::cout << "status: " << v["status"].get<std::string>() << "\n";
  for (const auto& [route, status] : v["routes"].items()) {
    std::cout << "  " << route << ": " << text_of(status) << "\n";
  }
  const Json& w = v["witness"];
  if (w.is_null()) return;
  std::cout << "witness (" << w["kind"].get<std::string>() << "):";
  for (const auto& x : w["vertices"]) std::cout << " " << x.get<std::string>();
  for (const auto& e : w["edges"]) {
    std::cout << " {";
    bool first = true;
    for (const auto& x : e) {
      std::cout << (first ? "" : ",") << x.get<std::string>();
      first = false;
    }
    std::cout << "}";
  }
  if (!w["detail"].get<std::string>().empty()) std::cout << " [" << w["detail"].get<std::string>() << "]";
  std::cout << "\n";
}

void print_table(const std::string& title, const Json& t) {
  std::cout << title << "\n" << render_table(betti_table_from_json(t));
}

int print_decomposition(const Json& d) {
  std::cout << "skeleton S = (" << d["skeleton_ideal"].get<std::string>() << ")\n";
  print_table("beta(S):", d["skeleton"]);
  int b = 0;
  for (const auto& s : d["steps"]) {
    ++b;
    const std::string kb = "K" + std::to_string(b);
    std::cout << "\nstep " << b << ": h" << b << " = " << s["hyperedge"].get<std::string>() << "\n";
    std::cout << "  " << kb << " = (" << s["remaining"].get<std::string>() << ")\n";
    std::cout << "  " << kb << " ∩ (h" << b << ") = h" << b << "(" << s["cofactor"].get<std::string>()
              << ")\n";
    print_table("from beta(" + kb + "):", s["remaining_table"]);
    print_table("from beta(h" + std::to_string(b) + "):", s["principal"]);
    print_table("from the shift of beta(" + kb + " ∩ (h" + std::to_string(b) + ")):",
                s["shifted_intersection"]);
    print_table("sum:", s["total"]);
  }
  std::cout << "\n";
  print_table("beta(I) assembled:", d["assembled"]);
  const bool ok = d["oracle_agrees"].get<bool>();
  std::cout << "homology oracle: " << (ok ? "agrees" : "DISAGREES") << "\n";
  return ok ? kOk : kInconsistent;
}

void print_bounds(const Json& b) {
  std::cout << "pdim(R/I) = " << b["pdim"] << "\nreg(R/I) = " << b["reg"] << "\n";
  for (const auto& s : b["splittings"]) {
    std::cout << "splitting at " << s["hyperedge"].get<std::string>() << ": pdim I = " << s["pdim_ideal"]
              << ", pdim K = " << s["pdim_k"] << ", pdim K∩(h) = " << s["pdim_intersection"]
              << ", bound " << (s["bound_holds"].get<bool>() ? "holds" : "FAILS") << ", max formula "
              << (s["max_formula_holds"].get<bool>() ? "holds" : "FAILS") << ", strict drop "
              << (s["strict_drop"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (const Json& m = b["matching"]; !m.is_null()) {
    std::cout << "matching number = " << m["matching_number"] << "\nind-match = " << m["ind_match"]
              << "\nmin-match = " << m["min_match"] << "\nind-match <= reg <= min-match: "
              << (m["sandwich_holds"].get<bool>() ? "holds" : "FAILS") << "\n";
  }
  for (const auto& n : b["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
}

void print_weighted(const Json& w) {
  std::cout << "vertices:";
  for (const auto& v : w["vertices"]) {
    std::cout << " " << v["label"].get<std::string>() << "(" << v["weight"] << ")";
  }
  std::cout << "\nedges:";
  for (const auto& e : w["edges"]) {
    std::cout << " " << e[0].get<std::string>() << "-" << e[1].get<std::string>();
  }
  std::cout << "\n";
}

void print_hypergraph(const Json& h) { std::cout << to_string(hypergraph_from_json(h)) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squarefree monomial ideals, NCI detection and Betti tables"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_flag("--hypergraph", o.hypergraph, "Input is hypergraph JSON");
  app.add_flag("--weighted", o.weighted, "Input is weighted-graph JSON");
  app.add_option("--max-vars", o.max_vars, "Variable budget (default NCILAB_MAX_VARS or 16)");
  app.add_option("--max-subsets", o.max_subsets,
                 "Subset budget (default NCILAB_MAX_SUBSETS or 65536)");

  auto with_input = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Ideal text, JSON, '@file' or '-' for stdin")->required();
    return sub;
  };
  CLI::App* check = with_input("check", "CI / NCI verdict by every applicable route");
  std::string at;
  CLI::App* invert_cmd = with_input("invert", "Invert at a vertex (substitute it by 1)");
  invert_cmd->add_option("--at", at, "Vertex")->required();
  std::string subject = "quotient";
  unsigned characteristic = 0;
  CLI::App* betti = with_input("betti", "Graded Betti table");
  betti->add_option("--subject", subject, "ideal or quotient")
      ->check(CLI::IsMember({"ideal", "quotient", "IDEAL", "QUOTIENT"}));
  betti->add_option("--char", characteristic, "0 for Q, or a prime");
  CLI::App* decompose = with_input("decompose", "Hyperedge-by-hyperedge Betti decomposition");
  CLI::App* bounds = with_input("bounds", "pdim, reg and matching bounds");
  CLI::App* join = with_input("join", "Join every hyperedge into a weighted vertex");
  CLI::App* splay_cmd = with_input("splay", "Splay a weighted graph (needs --weighted)");
  int n = 0;
  CLI::App* gn = app.add_subcommand("gn", "The graph G_n: c joined to n triangles");
  gn->add_option("--n", n, "n >= 1")->required()->check(CLI::Range(1, 31));
  bool quick = false;
  CLI::App* selftest = app.add_subcommand("selftest", "Run the internal cross-check suites");
  selftest->add_flag("--quick", quick, "Smaller exhaustive ranges");
  int port = 8080;
  std::string host = "127.0.0.1";
  CLI::App* serve = app.add_subcommand("serve", "Serve the JSON API over HTTP");
  serve->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const Budget budget = budget_of(o);
    auto emit = [&](const Json& j, const std::function<void(const Json&)>& text) {
      if (o.json) {
        std::cout << format_json(j);
      } else {
        text(j);
      }
    };
    if (*check) {
      emit(verdict_json(load(o)), print_verdict);
    } else if (*invert_cmd) {
      emit(invert_json(load(o), at), print_hypergraph);
    } else if (*betti) {
      const Json t = betti_json(load(o), subject_from_string(subject), characteristic, budget);
      emit(t, [&](const Json& j) {
        print_table(j["subject"].get<std::string>() + " over " +
                        (characteristic == 0 ? std::string("Q") : "GF(" + std::to_string(characteristic) + ")"),
                    j);
      });
    } else if (*decompose) {
      const Json d = decompose_json(load(o), budget);
      if (o.json) {
        std::cout << format_json(d);
        return d["oracle_agrees"].get<bool>() ? kOk : kInconsistent;
      }
      return print_decomposition(d);
    } else if (*bounds) {
      emit(bounds_json(load(o), budget), print_bounds);
    } else if (*join) {
      emit(join_json(load(o)), print_weighted);
    } else if (*splay_cmd) {
      emit(splay_json(load(o)), print_hypergraph);
    } else if (*gn) {
      emit(to_json(gn_family(n)), print_hypergraph);
    } else if (*selftest) {
      bool all = true;
      for (const auto& r : run_selftest(quick)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << "\n";
        all = all && r.passed;
      }
      return all ? kOk : kInconsistent;
    } else if (*serve) {
      Service service(budget);
      std::cerr << "listening on " << host << ":" << port << "\n";
      service.run(host, port);
    }
  } catch (const Error& e) {
    if (o.json) {
      std::cout << format_json(to_json(e));
    } else {
      std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    }
    if (e.kind() == ErrorKind::Internal) return kInconsistent;
    if (e.kind() == ErrorKind::BudgetExceeded) return kBudget;
    return kUsage;
  }
  return kOk;
}
