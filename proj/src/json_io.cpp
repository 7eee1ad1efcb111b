#include "hypertrees/json_io.hpp"

#include <utility>
#include <vector>

#include "hypertrees/errors.hpp"

namespace hypertrees {
namespace {

const Json& field(const Json& json, const char* key) {
  if (!json.is_object()) throw Error(ErrorKind::MalformedInput, "expected a JSON object");
  auto it = json.find(key);
  if (it == json.end()) throw Error(ErrorKind::MalformedInput, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& json, const char* what) {
  if (!json.is_number_integer()) {
    throw Error(ErrorKind::MalformedInput, std::string(what) + " must be an integer");
  }
  return json.get<int>();
}

std::vector<int> as_int_list(const Json& json, const char* what) {
  if (!json.is_array()) throw Error(ErrorKind::MalformedInput, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(json.size());
  for (const auto& item : json) out.push_back(as_int(item, what));
  return out;
}

std::vector<std::vector<int>> as_nested_list(const Json& json, const char* what) {
  if (!json.is_array()) throw Error(ErrorKind::MalformedInput, std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  out.reserve(json.size());
  for (const auto& item : json) out.push_back(as_int_list(item, what));
  return out;
}

}  // namespace

Json to_json(const Hypergraph& graph) {
  Json json;
  json["n"] = graph.n();
  json["edges"] = graph.edges();
  return json;
}

Json to_json(const Hypertree& tree) { return to_json(tree.hypergraph()); }

Json to_json(const HypertreeCode& code) {
  Json json;
  json["n"] = code.partition.n();
  json["partition"] = code.partition.blocks();
  json["word"] = code.word;
  return json;
}

Json to_json(const BipartiteTree& tree) {
  Json json;
  json["a"] = tree.a();
  json["b"] = tree.b();
  Json edges = Json::array();
  for (const auto& [i, j] : tree.edges()) edges.push_back({i, j});
  json["edges"] = std::move(edges);
  return json;
}

Json to_json(const BipartiteCode& code) {
  Json json;
  json["a"] = code.a;
  json["b"] = code.b;
  json["w"] = code.w;
  json["wprime"] = code.w_prime;
  return json;
}

Json to_json(const Probability& p) {
  Json json;
  json["num"] = boost::multiprecision::numerator(p).str();
  json["den"] = boost::multiprecision::denominator(p).str();
  return json;
}

Json to_json(const EnumerationReport& report) {
  Json json;
  json["family"] = report.family;
  for (const auto& [name, value] : report.parameters) json[name] = value;
  json["total"] = report.total.str();
  const bool hyper = report.family == "hypertree";
  Json profiles = Json::array();
  for (const auto& [key, count] : report.per_profile) {
    Json entry;
    entry[hyper ? "lambda" : "alpha"] = key.first;
    entry[hyper ? "mu" : "beta"] = key.second;
    entry["count"] = count.str();
    profiles.push_back(std::move(entry));
  }
  json["profiles"] = std::move(profiles);
  json["elapsed_seconds"] = report.elapsed.count();
  return json;
}

Hypergraph hypergraph_from_json(const Json& json) {
  return Hypergraph(as_int(field(json, "n"), "n"), as_nested_list(field(json, "edges"), "edges"));
}

HypertreeCode hypertree_code_from_json(const Json& json) {
  const int n = as_int(field(json, "n"), "n");
  auto blocks = as_nested_list(field(json, "partition"), "partition");
  auto word = as_int_list(field(json, "word"), "word");
  return {SetPartition(n, std::move(blocks)), std::move(word)};
}

BipartiteTree bipartite_tree_from_json(const Json& json) {
  const int a = as_int(field(json, "a"), "a");
  const int b = as_int(field(json, "b"), "b");
  std::vector<BipartiteEdge> edges;
  for (const auto& pair : as_nested_list(field(json, "edges"), "edges")) {
    if (pair.size() != 2) throw Error(ErrorKind::MalformedInput, "edges must be [i,j] pairs");
    edges.emplace_back(pair[0], pair[1]);
  }
  return validate_bipartite_tree(a, b, std::move(edges));
}

BipartiteCode bipartite_code_from_json(const Json& json) {
  return {as_int(field(json, "a"), "a"), as_int(field(json, "b"), "b"),
          as_int_list(field(json, "w"), "w"), as_int_list(field(json, "wprime"), "wprime")};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
}

std::string dump(const Json& json) { return json.dump(); }

}  // namespace hypertrees
