#include "ncilab/json_io.hpp"

namespace ncilab {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::Schema, message); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) schema(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json labels(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

}  // namespace

Json to_json(const Hypergraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edge_labels()) edges.push_back(labels(e));
  return Json{{"vertices", labels(g.vertices())}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  std::vector<std::string> vertices = string_list(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) schema("edges must be an array");
  std::vector<std::vector<std::string>> es;
  for (const auto& e : edges) es.push_back(string_list(e, "each edge"));
  return Hypergraph(std::move(vertices), es);
}

Json to_json(const WeightedGraph& w) {
  Json vertices = Json::array();
  for (const auto& v : w.vertices()) vertices.push_back({{"label", v.label}, {"weight", v.weight}});
  Json edges = Json::array();
  for (const auto& [a, b] : w.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

WeightedGraph weighted_graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) schema("vertices must be an array");
  std::vector<WeightedVertex> vertices;
  for (const auto& v : vs) {
    const Json& label = field(v, "label");
    if (!label.is_string()) schema("vertex label must be a string");
    int weight = 1;
    if (auto it = v.find("weight"); it != v.end()) {
      if (!it->is_number_integer()) schema("vertex weight must be an integer");
      weight = it->get<int>();
    }
    vertices.push_back({label.get<std::string>(), weight});
  }
  const Json& es = field(j, "edges");
  if (!es.is_array()) schema("edges must be an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : es) {
    std::vector<std::string> ends = string_list(e, "each edge");
    if (ends.size() != 2) schema("weighted-graph edges must have two endpoints");
    edges.emplace_back(ends[0], ends[1]);
  }
  return WeightedGraph(std::move(vertices), edges);
}

Json to_json(const NciVerdict& v) {
  Json witness = nullptr;
  if (v.witness) {
    Json edges = Json::array();
    for (const auto& e : v.witness->edges) edges.push_back(labels(e));
    witness = Json{{"kind", std::string(to_string(v.witness->kind))},
                   {"vertices", labels(v.witness->vertices)},
                   {"edges", std::move(edges)},
                   {"detail", v.witness->detail}};
  }
  return Json{{"status", std::string(to_string(v.status))},
              {"route", std::string(to_string(v.route))},
              {"witness", std::move(witness)}};
}

Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, beta] : t.entries()) {
    entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
  }
  return Json{{"subject", std::string(to_string(t.subject()))}, {"entries", std::move(entries)}};
}

BettiTable betti_table_from_json(const Json& j) {
  const Json& subject = field(j, "subject");
  if (!subject.is_string()) schema("subject must be a string");
  BettiTable t(subject_from_string(subject.get<std::string>()));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) schema("entries must be an array");
  for (const auto& e : entries) {
    const Json& i = field(e, "i");
    const Json& jj = field(e, "j");
    const Json& beta = field(e, "beta");
    if (!i.is_number_integer() || !jj.is_number_integer() || !beta.is_number_integer()) {
      schema("i, j and beta must be integers");
    }
    if (i.get<int>() < 0 || jj.get<int>() < 0 || beta.get<std::int64_t>() <= 0) {
      schema("entries need i >= 0, j >= 0 and beta > 0");
    }
    t.add(i.get<int>(), jj.get<int>(), beta.get<std::int64_t>());
  }
  return t;
}

Json to_json(const DecompositionReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"hyperedge", render(s.hyperedge)},
                     {"remaining", render(s.remaining)},
                     {"remaining_table", to_json(s.remaining_table)},
                     {"principal", to_json(s.principal)},
                     {"cofactor", render(s.cofactor)},
                     {"shifted_intersection", to_json(s.shifted_intersection)},
                     {"total", to_json(s.total)}});
  }
  return Json{{"skeleton_ideal", render(r.skeleton_ideal)},
              {"skeleton", to_json(r.skeleton)},
              {"steps", std::move(steps)},
              {"assembled", to_json(r.assembled)},
              {"oracle_agrees", r.agrees()}};
}

Json to_json(const PdimReport& r) {
  Json substituted = Json::object();
  for (const auto& [x, p] : r.pdim_k_substituted) substituted[x] = p;
  return Json{{"pdim_ideal", r.pdim_ideal},
              {"pdim_k", r.pdim_k},
              {"pdim_principal", r.pdim_principal},
              {"pdim_intersection", r.pdim_intersection},
              {"bound_holds", r.bound_holds},
              {"max_formula_holds", r.max_formula_holds},
              {"pdim_k_substituted", std::move(substituted)},
              {"strict_drop", r.strict_drop}};
}

Json to_json(const Error& e) {
  Json out{{"error", std::string(e.name())}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) out["position"] = p->position();
  return out;
}

std::string format_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ncilab
