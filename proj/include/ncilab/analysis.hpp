#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ncilab/json_io.hpp"
#include "ncilab/monomial_ideal.hpp"

namespace ncilab {

enum class InputKind { Ideal, Hypergraph, WeightedGraph };

/// One normalized input. Every form carries its ideal and its minimal
/// hypergraph; weighted graphs also keep the graph itself.
struct AnalysisInput {
  InputKind kind = InputKind::Ideal;
  MonomialIdeal ideal;
  Hypergraph hypergraph;
  std::optional<WeightedGraph> weighted;
};

AnalysisInput input_from_ideal(std::string_view text);
AnalysisInput input_from_hypergraph(const Json& j);
AnalysisInput input_from_weighted(const Json& j);
/// Exactly one of "ideal" (string), "hypergraph", "weighted_graph".
AnalysisInput input_from_request(const Json& request);
Json echo(const AnalysisInput& input);

/// All routes that apply. Any disagreement raises Internal.
Json verdict_json(const AnalysisInput& input);
Json betti_json(const AnalysisInput& input, Subject subject, unsigned characteristic,
                const Budget& budget);
Json decompose_json(const AnalysisInput& input, const Budget& budget);
/// Hypergraph JSON of the inversion at `at`.
Json invert_json(const AnalysisInput& input, std::string_view at);
/// Weighted-graph JSON of the joined hypergraph.
Json join_json(const AnalysisInput& input);
/// Hypergraph JSON of the splayed weighted graph.
Json splay_json(const AnalysisInput& input);
/// pdim/reg of R/I, hyperedge-splitting pdim checks for NCIs, and matching
/// bounds for simple graphs of at most 12 vertices.
Json bounds_json(const AnalysisInput& input, const Budget& budget);

/// {"input": ..., "results": [...], "budget": {...}}; with "timing": true in
/// the request each result also gets "elapsed_ms".
Json analyze(const Json& request, const Budget& budget);

struct HttpReply {
  int status = 200;
  std::string body;
};

/// Routes one request. Used by the server and directly by tests.
HttpReply handle_request(std::string_view method, std::string_view path, std::string_view body,
                         const Budget& budget);

/// 400 for parse/schema errors, 503 for budget, 500 for internal failures,
/// 422 for every other domain error.
int http_status(const Error& e);

/// The HTTP front end over handle_request, with CORS headers.
class Service {
 public:
  explicit Service(Budget budget);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds (port 0 picks a free one) and serves on a background thread.
  /// Returns the bound port; throws Internal if binding fails.
  int start(const std::string& host, int port);
  /// Serves on the calling thread until stop() is called elsewhere.
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ncilab
