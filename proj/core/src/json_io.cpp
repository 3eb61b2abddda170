#include "turan/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace turan {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edge_set_doc(const EdgeSet& edges) {
  ordered_json doc;
  doc["n"] = edges.ambient().n;
  doc["r"] = edges.ambient().r;
  ordered_json list = ordered_json::array();
  for (const Edge& e : edges.edges()) list.push_back(e.vertices);
  doc["edges"] = std::move(list);
  return doc;
}

ordered_json inequality_doc(const LinearInequality& ineq) {
  ordered_json doc;
  doc["n"] = ineq.n;
  doc["r"] = ineq.r;
  ordered_json coeffs = ordered_json::array();
  for (const auto& [rank, c] : ineq.coeffs) {
    ordered_json entry;
    entry["edge"] = unrank_edge(rank, ineq.n, ineq.r).vertices;
    entry["c"] = c;
    coeffs.push_back(std::move(entry));
  }
  doc["coeffs"] = std::move(coeffs);
  doc["rhs"] = ineq.rhs;
  doc["label"] = ineq.label;
  return doc;
}

std::string dump(const ordered_json& doc, int indent) {
  return doc.dump(indent < 0 ? -1 : indent);
}

}  // namespace

std::string to_json_string(const EdgeSet& edges, int indent) {
  return dump(edge_set_doc(edges), indent);
}

std::string to_json_string(const LinearInequality& ineq, int indent) {
  return dump(inequality_doc(ineq), indent);
}

std::string to_json_string(const CGDerivation& derivation, int indent) {
  ordered_json doc;
  ordered_json sources = ordered_json::array();
  for (const WeightedSource& source : derivation.sources) {
    ordered_json entry;
    entry["weight"] = rational_to_string(source.weight);
    entry["ineq"] = inequality_doc(source.ineq);
    sources.push_back(std::move(entry));
  }
  doc["sources"] = std::move(sources);
  doc["target"] = inequality_doc(derivation.target);
  return dump(doc, indent);
}

std::string to_json_string(const FacetVerdict& verdict, int indent) {
  ordered_json doc;
  doc["valid"] = verdict.valid;
  doc["max_lhs"] = verdict.max_lhs;
  doc["rhs"] = verdict.rhs;
  doc["tight_count"] = verdict.tight_count;
  doc["affine_rank"] = verdict.affine_rank;
  doc["ambient_dim"] = verdict.ambient_dim;
  doc["is_facet"] = verdict.is_facet;
  doc["truncated"] = verdict.truncated;
  return dump(doc, indent);
}

std::string to_json_string(const ValidityReport& report, int indent) {
  ordered_json doc;
  doc["valid"] = report.valid;
  doc["max_lhs"] = report.max_lhs;
  doc["rhs"] = report.rhs;
  if (report.violator)
    doc["certificate"] = edge_set_doc(*report.violator);
  else
    doc["certificate"] = nullptr;
  return dump(doc, indent);
}

EdgeSet edge_set_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad edge-set JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("r") ||
      !doc.contains("edges") || !doc["edges"].is_array())
    throw std::invalid_argument("edge-set JSON needs n, r and edges fields");
  EdgeSet out{CompleteHypergraph(doc["n"].get<int>(), doc["r"].get<int>())};
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_array())
      throw std::invalid_argument("edges entries must be vertex lists");
    out.insert(Edge(entry.get<std::vector<Vertex>>()));
  }
  return out;
}

LinearInequality inequality_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad inequality JSON: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("r") ||
      !doc.contains("coeffs") || !doc.contains("rhs"))
    throw std::invalid_argument(
        "inequality JSON needs n, r, coeffs and rhs fields");
  int n = doc["n"].get<int>();
  int r = doc["r"].get<int>();
  std::map<std::uint64_t, std::int64_t> coeffs;
  for (const auto& entry : doc["coeffs"]) {
    if (!entry.is_object() || !entry.contains("edge") || !entry.contains("c"))
      throw std::invalid_argument("coeff entries need edge and c fields");
    Edge e(entry["edge"].get<std::vector<Vertex>>());
    coeffs[rank_edge(e)] = entry["c"].get<std::int64_t>();
  }
  std::string label = doc.value("label", std::string{});
  return LinearInequality(n, r, std::move(coeffs), doc["rhs"].get<std::int64_t>(),
                          std::move(label));
}

}  // namespace turan
