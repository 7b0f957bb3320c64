#include "ncilab/analysis.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>

#include "ncilab/matching.hpp"

namespace ncilab {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::Schema, message); }

Hypergraph minimal(const Hypergraph& g) { return g.is_minimal() ? g : min_reduce(g); }

std::string_view kind_name(InputKind kind) {
  switch (kind) {
    case InputKind::Ideal: return "ideal";
    case InputKind::Hypergraph: return "hypergraph";
    case InputKind::WeightedGraph: return "weighted_graph";
  }
  return "?";
}

std::string status_name(bool nci) { return nci ? "NCI" : "not NCI"; }

}  // namespace

AnalysisInput input_from_ideal(std::string_view text) {
  AnalysisInput in;
  in.kind = InputKind::Ideal;
  in.ideal = parse_ideal(text);
  in.hypergraph = to_hypergraph(in.ideal);
  return in;
}

AnalysisInput input_from_hypergraph(const Json& j) {
  AnalysisInput in;
  in.kind = InputKind::Hypergraph;
  in.hypergraph = minimal(hypergraph_from_json(j));
  if (in.hypergraph.edge_count() == 0) {
    throw Error(ErrorKind::EmptyIdeal, "the hypergraph has no edges");
  }
  in.ideal = to_ideal(in.hypergraph);
  return in;
}

AnalysisInput input_from_weighted(const Json& j) {
  AnalysisInput in;
  in.kind = InputKind::WeightedGraph;
  in.weighted = weighted_graph_from_json(j);
  in.hypergraph = splay(*in.weighted);
  if (in.hypergraph.edge_count() == 0) {
    throw Error(ErrorKind::EmptyIdeal, "the weighted graph splays to no edges");
  }
  in.ideal = to_ideal(in.hypergraph);
  return in;
}

AnalysisInput input_from_request(const Json& request) {
  if (!request.is_object()) schema("the request must be a JSON object");
  const int forms = static_cast<int>(request.contains("ideal")) +
                    static_cast<int>(request.contains("hypergraph")) +
                    static_cast<int>(request.contains("weighted_graph"));
  if (forms != 1) schema("exactly one of ideal, hypergraph, weighted_graph is required");
  if (auto it = request.find("ideal"); it != request.end()) {
    if (!it->is_string()) schema("ideal must be a string");
    return input_from_ideal(it->get<std::string>());
  }
  if (auto it = request.find("hypergraph"); it != request.end()) return input_from_hypergraph(*it);
  return input_from_weighted(request.at("weighted_graph"));
}

Json echo(const AnalysisInput& input) {
  Json out{{"kind", std::string(kind_name(input.kind))},
           {"ideal", render(input.ideal)},
           {"hypergraph", to_json(input.hypergraph)}};
  if (input.weighted) out["weighted_graph"] = to_json(*input.weighted);
  return out;
}

Json verdict_json(const AnalysisInput& input) {
  const Hypergraph& g = input.hypergraph;
  const NciVerdict definitional = is_nci_definitional(g);
  const NciVerdict structural = is_nci_structural(g);
  Json routes{{"definitional", std::string(to_string(definitional.status))},
              {"structural", std::string(to_string(structural.status))},
              {"miller_stone", nullptr},
              {"weighted", nullptr}};
  bool agree = definitional.status == structural.status;
  if (g.is_simple_graph() && g.vertex_count() >= 3 && is_connected_graph(g)) {
    const NciVerdict ms = is_nci_graph_miller_stone(g);
    routes["miller_stone"] = std::string(to_string(ms.status));
    agree = agree && ms.status == definitional.status;
  }
  if (input.weighted && input.weighted->vertex_count() >= 3) {
    const bool nci = is_nci_weighted(*input.weighted);
    routes["weighted"] = status_name(nci);
    agree = agree && nci == (definitional.status == NciStatus::NCI);
  }
  if (!agree) {
    throw Error(ErrorKind::Internal, "NCI routes disagree: " + routes.dump());
  }
  Json out = to_json(structural);
  out["routes"] = std::move(routes);
  return out;
}

Json betti_json(const AnalysisInput& input, Subject subject, unsigned characteristic,
                const Budget& budget) {
  BettiOptions options;
  options.subject = subject;
  options.characteristic = characteristic;
  options.budget = budget;
  return to_json(betti_table(input.ideal, options));
}

Json decompose_json(const AnalysisInput& input, const Budget& budget) {
  BettiOptions options;
  options.budget = budget;
  return to_json(decompose_nci(input.ideal, options));
}

Json invert_json(const AnalysisInput& input, std::string_view at) {
  return to_json(invert(input.hypergraph, at));
}

Json join_json(const AnalysisInput& input) { return to_json(join_all(input.hypergraph)); }

Json splay_json(const AnalysisInput& input) {
  if (!input.weighted) schema("splay needs weighted_graph input");
  return to_json(splay(*input.weighted));
}

Json bounds_json(const AnalysisInput& input, const Budget& budget) {
  BettiOptions options;
  options.subject = Subject::Quotient;
  options.budget = budget;
  const BettiTable table = betti_table(input.ideal, options);
  Json out{{"pdim", pdim(table)}, {"reg", reg(table)}};
  Json notes = Json::array();

  Json splittings = Json::array();
  if (is_nci_definitional(input.hypergraph).status == NciStatus::NCI) {
    for (const auto& h : input.ideal.monomials()) {
      if (h.size() < 3) continue;
      const MonomialIdeal k = remove_generators(input.ideal, {h});
      Json ordered{{"hyperedge", render(h)}};
      const Json report = to_json(pdim_splitting_bound(k, h, options));
      for (const auto& [key, value] : report.items()) {
        ordered[key] = value;
      }
      splittings.push_back(std::move(ordered));
    }
  }
  out["splittings"] = std::move(splittings);

  const Hypergraph& g = input.hypergraph;
  if (g.is_simple_graph() && g.vertex_count() <= 12) {
    const int lower = ind_match(g);
    const int upper = min_match(g);
    out["matching"] = Json{{"matching_number", matching_number(g)},
                           {"ind_match", lower},
                           {"min_match", upper},
                           {"sandwich_holds", lower <= reg(table) && reg(table) <= upper}};
  } else {
    out["matching"] = nullptr;
    notes.push_back(g.is_simple_graph() ? "matching bounds need at most 12 vertices"
                                        : "matching bounds need a simple graph");
  }
  out["notes"] = std::move(notes);
  return out;
}

namespace {

struct Operation {
  std::string name;
  Json params;
};

Operation parse_operation(const Json& op) {
  if (op.is_string()) {
    std::string s = op.get<std::string>();
    // invert(v) shorthand
    if (s.rfind("invert(", 0) == 0 && s.size() > 8 && s.back() == ')') {
      return {"invert", Json{{"at", s.substr(7, s.size() - 8)}}};
    }
    return {std::move(s), Json::object()};
  }
  if (op.is_object()) {
    auto it = op.find("op");
    if (it == op.end() || !it->is_string()) schema("operation objects need a string 'op'");
    return {it->get<std::string>(), op};
  }
  schema("operations must be strings or objects");
}

Json run_operation(const Operation& op, const AnalysisInput& input, const Budget& budget) {
  if (op.name == "verdict") return verdict_json(input);
  if (op.name == "betti") {
    Subject subject = Subject::Quotient;
    unsigned characteristic = 0;
    if (auto it = op.params.find("subject"); it != op.params.end()) {
      if (!it->is_string()) schema("subject must be a string");
      subject = subject_from_string(it->get<std::string>());
    }
    if (auto it = op.params.find("char"); it != op.params.end()) {
      if (!it->is_number_unsigned()) schema("char must be a nonnegative integer");
      characteristic = it->get<unsigned>();
    }
    return betti_json(input, subject, characteristic, budget);
  }
  if (op.name == "decompose") return decompose_json(input, budget);
  if (op.name == "invert") {
    auto it = op.params.find("at");
    if (it == op.params.end() || !it->is_string()) schema("invert needs a string 'at'");
    return invert_json(input, it->get<std::string>());
  }
  if (op.name == "join") return join_json(input);
  if (op.name == "splay") return splay_json(input);
  if (op.name == "bounds") return bounds_json(input, budget);
  schema("unknown operation '" + op.name + "'");
}

}  // namespace

Json analyze(const Json& request, const Budget& budget) {
  const AnalysisInput input = input_from_request(request);
  auto ops_it = request.find("operations");
  if (ops_it == request.end() || !ops_it->is_array()) schema("operations must be an array");
  std::vector<Operation> ops;
  for (const auto& op : *ops_it) ops.push_back(parse_operation(op));
  bool timing = false;
  if (auto it = request.find("timing"); it != request.end()) {
    if (!it->is_boolean()) schema("timing must be a boolean");
    timing = it->get<bool>();
  }

  Json notes = Json::array();
  Json results = Json::array();
  for (const auto& op : ops) {
    // Validate every operation before running any of them.
    if (op.name != "verdict" && op.name != "betti" && op.name != "decompose" &&
        op.name != "invert" && op.name != "join" && op.name != "splay" && op.name != "bounds") {
      schema("unknown operation '" + op.name + "'");
    }
  }
  for (const auto& op : ops) {
    Json entry{{"operation", op.name}};
    const auto start = std::chrono::steady_clock::now();
    try {
      entry["result"] = run_operation(op, input, budget);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Schema || e.kind() == ErrorKind::Internal) throw;
      entry["error"] = to_json(e);
      if (e.kind() == ErrorKind::BudgetExceeded) notes.push_back(op.name + ": " + e.what());
    }
    if (timing) {
      entry["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }
    results.push_back(std::move(entry));
  }
  return Json{{"input", echo(input)},
              {"results", std::move(results)},
              {"budget",
               {{"max_vars", budget.max_vars},
                {"max_subsets", budget.max_subsets},
                {"notes", std::move(notes)}}}};
}

int http_status(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::Schema:
      return 400;
    case ErrorKind::BudgetExceeded:
      return 503;
    case ErrorKind::Internal:
      return 500;
    default:
      return 422;
  }
}

HttpReply handle_request(std::string_view method, std::string_view path, std::string_view body,
                         const Budget& budget) {
  auto reply = [](int status, const Json& j) { return HttpReply{status, format_json(j)}; };
  const bool known = path == "/api/health" || path == "/api/analyze" || path == "/api/invert" ||
                     path == "/api/betti" || path == "/api/decompose";
  if (!known) return reply(404, Json{{"error", "NotFound"}, {"message", "no such endpoint"}});
  const bool is_get = path == "/api/health";
  if (method != (is_get ? "GET" : "POST")) {
    return reply(405, Json{{"error", "MethodNotAllowed"},
                           {"message", std::string(is_get ? "use GET" : "use POST")}});
  }
  if (is_get) return reply(200, Json{{"ok", true}});

  Json request;
  try {
    request = Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    return reply(400, Json{{"error", "ParseError"}, {"message", e.what()}, {"position", e.byte}});
  }
  try {
    if (path == "/api/analyze") return reply(200, analyze(request, budget));
    const AnalysisInput input = input_from_request(request);
    if (path == "/api/invert") {
      auto it = request.find("at");
      if (it == request.end() || !it->is_string()) schema("invert needs a string 'at'");
      return reply(200, invert_json(input, it->get<std::string>()));
    }
    if (path == "/api/betti") {
      Operation op{"betti", request};
      return reply(200, run_operation(op, input, budget));
    }
    return reply(200, decompose_json(input, budget));
  } catch (const Error& e) {
    return reply(http_status(e), to_json(e));
  } catch (const nlohmann::json::exception& e) {
    return reply(400, Json{{"error", "Schema"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    return reply(500, Json{{"error", "Internal"}, {"message", e.what()}});
  }
}

struct Service::Impl {
  Budget budget;
  httplib::Server server;
  std::thread worker;

  explicit Impl(Budget b) : budget(b) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
      const HttpReply r = handle_request(req.method, req.path, req.body, budget);
      res.status = r.status;
      res.set_content(r.body, "application/json");
    };
    server.Get(".*", dispatch);
    server.Post(".*", dispatch);
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }
};

Service::Service(Budget budget) : impl_(std::make_unique<Impl>(budget)) {}

Service::~Service() { stop(); }

int Service::start(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(ErrorKind::Internal, "cannot bind " + host + ":" + std::to_string(port));
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void Service::run(const std::string& host, int port) {
  if (!impl_->server.listen(host, port)) {
    throw Error(ErrorKind::Internal, "cannot listen on " + host + ":" + std::to_string(port));
  }
}

void Service::stop() {
  impl_->server.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace ncilab
