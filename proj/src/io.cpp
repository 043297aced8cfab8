#include "homflow/io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace homflow {

using nlohmann::json;

json structure_to_json(const FinStructure& a) {
  json doc;
  doc["signature"] = json::array();
  for (const Symbol& s : a.sig.symbols)
    doc["signature"].push_back({{"name", s.name}, {"arity", s.arity}, {"symmetric", s.symmetric}});
  doc["size"] = a.size;
  json rels = json::object();
  for (size_t s = 0; s < a.relations.size(); ++s) {
    json tuples = json::array();
    for (const Tuple& t : a.relations[s]) tuples.push_back(t);
    rels[a.sig.symbols[s].name] = tuples;
  }
  doc["relations"] = rels;
  if (a.partial_order) {
    json po = json::array();
    for (const auto& [x, y] : *a.partial_order) po.push_back({x, y});
    doc["partial_order"] = po;
  }
  if (a.linear_order) doc["linear_order"] = *a.linear_order;
  return doc;
}

FinStructure structure_from_json(const json& doc) {
  Signature sig;
  for (const json& s : doc.value("signature", json::array()))
    sig.symbols.push_back(Symbol{s.at("name").get<std::string>(), s.at("arity").get<int>(),
                                 s.value("symmetric", true)});
  FinStructure a(sig, doc.at("size").get<int>());
  if (doc.contains("relations"))
    for (const auto& [name, tuples] : doc.at("relations").items()) {
      int idx = sig.index_of(name);
      if (idx < 0) throw std::invalid_argument("relations mention unknown symbol: " + name);
      for (const json& t : tuples) a.add_tuple(idx, t.get<Tuple>());
    }
  if (doc.contains("partial_order")) {
    PairSet po;
    for (const json& p : doc.at("partial_order")) po.insert({p.at(0).get<int>(), p.at(1).get<int>()});
    a.partial_order = transitive_closure(po);
  }
  if (doc.contains("linear_order")) a.linear_order = doc.at("linear_order").get<std::vector<int>>();
  a.validate();
  return a;
}

std::string structure_to_string(const FinStructure& a) { return structure_to_json(a).dump(2); }

FinStructure structure_from_string(const std::string& text) {
  return structure_from_json(json::parse(text));
}

FinStructure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open structure file: " + path);
  json doc;
  in >> doc;
  return structure_from_json(doc);
}

void save_structure(const std::string& path, const FinStructure& a) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write structure file: " + path);
  out << structure_to_string(a) << "\n";
}

ClassSpec class_from_flag(const std::string& flag, bool ordered) {
  auto colon = flag.find(':');
  std::string head = flag.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : flag.substr(colon + 1);
  if (head == "graph") return ClassSpec::graphs(ordered);
  if (head == "kn-free") {
    if (arg.empty()) throw std::invalid_argument("kn-free needs a parameter, e.g. kn-free:4");
    return ClassSpec::kn_free(std::stoi(arg), ordered);
  }
  if (head == "poset") return ClassSpec::posets(ordered);
  if (head == "hypergraph") {
    if (arg.empty()) return ClassSpec::hypergraphs(Signature::graph(), ordered);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open signature file: " + arg);
    json doc;
    in >> doc;
    Signature sig;
    for (const json& s : doc.at("signature"))
      sig.symbols.push_back(Symbol{s.at("name").get<std::string>(), s.at("arity").get<int>(),
                                   s.value("symmetric", true)});
    return ClassSpec::hypergraphs(sig, ordered);
  }
  if (head == "a-free") {
    if (arg.empty()) throw std::invalid_argument("a-free needs a file of forbidden structures");
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open forbidden-structure file: " + arg);
    json doc;
    in >> doc;
    std::vector<FinStructure> forb;
    for (const json& f : doc.at("forbidden")) forb.push_back(structure_from_json(f));
    return ClassSpec::a_free(std::move(forb), ordered);
  }
  throw std::invalid_argument("unknown class flag: " + flag);
}

}  // namespace homflow
