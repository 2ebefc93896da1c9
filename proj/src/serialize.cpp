#include "psifloor/serialize.hpp"

#include <fstream>
#include <sstream>

namespace psifloor {

Json to_json(const PsiFloorDiagram& diagram) {
  Json vertices = Json::array();
  for (const Vertex& v : diagram.vertices()) vertices.push_back({v.degree, v.psi});
  Json edges = Json::array();
  for (const Edge& e : diagram.edges()) edges.push_back({e.src, e.tgt, e.weight});
  return {{"vertices", vertices}, {"edges", edges}};
}

PsiFloorDiagram diagram_from_json(const Json& j) {
  try {
    std::vector<Vertex> vertices;
    for (const Json& v : j.at("vertices")) vertices.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    return PsiFloorDiagram(std::move(vertices), std::move(edges));
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed diagram JSON: ") + ex.what());
  }
}

Json to_json(const PsiFloorDiagram& diagram, const EdgeChoice& choice) {
  Json out = Json::array();
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (!diagram.is_floor(v)) continue;
    out.push_back({{"vertex", v}, {"chosen_edges", choice.chosen_edges(diagram, v)}, {"chosen_ends", choice.chosen_ends[v]}});
  }
  return out;
}

Json to_json(const InvariantKey& key) {
  return {{"d", key.d}, {"k", key.k.to_vector()}, {"alpha", key.alpha.to_vector()}, {"beta", key.beta.to_vector()}};
}

InvariantKey key_from_json(const Json& j) {
  InvariantKey key;
  key.d = j.at("d").get<int>();
  key.k = IntSeq(SeqBase::Zero, j.at("k").get<std::vector<int>>());
  key.alpha = IntSeq(SeqBase::One, j.at("alpha").get<std::vector<int>>());
  key.beta = IntSeq(SeqBase::One, j.at("beta").get<std::vector<int>>());
  return key;
}

Json to_json(const ComputationResult& result) {
  Json j = to_json(result.key);
  j["N"] = to_string(result.value_N);
  j["tilde"] = to_string(result.value_tilde);
  j["method"] = to_string(result.method);
  return j;
}

void Engine::cache_save(const std::string& path) const {
  std::map<InvariantKey, Json> entries;
  for (const auto& [key, value] : recursion_.snapshot()) {
    Json j = to_json(key);
    j["N"] = to_string(value);
    j["tilde"] = to_string(convert(value, key.k, key.beta, Direction::ToTilde));
    j["method"] = "recursion";
    entries[key] = j;
  }
  for (const auto& [key, result] : results_) {
    if (!entries.contains(key) || result.method != Method::Recursion) entries[key] = to_json(result);
  }
  Json doc = {{"version", 1}, {"entries", Json::array()}};
  for (auto& [key, j] : entries) doc["entries"].push_back(std::move(j));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << doc.dump(1) << '\n';
}

void Engine::cache_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw ParseError(std::string("malformed cache file: ") + ex.what());
  }
  std::vector<ComputationResult> loaded;
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError("unsupported cache version");
    for (const Json& e : doc.at("entries")) {
      ComputationResult r;
      r.key = key_from_json(e);
      check_key(r.key);
      r.value_N = parse_rational(e.at("N").get<std::string>());
      r.value_tilde = parse_rational(e.at("tilde").get<std::string>());
      r.method = parse_method(e.at("method").get<std::string>());
      if (convert(r.value_N, r.key.k, r.key.beta, Direction::ToTilde) != r.value_tilde) {
        throw IntegrityError("cached N and tilde disagree for " + r.key.to_string());
      }
      loaded.push_back(r);
    }
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed cache entry: ") + ex.what());
  } catch (const DomainError& ex) {
    throw ParseError(std::string("invalid cache entry: ") + ex.what());
  }
  // Check everything before touching the tables so a conflict leaves them unchanged.
  const auto memo = recursion_.snapshot();
  for (const ComputationResult& r : loaded) {
    auto m = memo.find(r.key);
    if (m != memo.end() && m->second != r.value_N) throw IntegrityError("cache conflicts on " + r.key.to_string());
    auto c = results_.find(r.key);
    if (c != results_.end() && c->second.value_N != r.value_N) {
      throw IntegrityError("cache conflicts on " + r.key.to_string());
    }
  }
  for (const ComputationResult& r : loaded) {
    if (r.method != Method::Floor) recursion_.seed(r.key, r.value_N);
    remember(r);
  }
}

}  // namespace psifloor
