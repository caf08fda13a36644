#include "metalogic/model.hpp"

#include <algorithm>

namespace metalogic {

int FiniteModel::element(const std::string& name) const {
  auto it = std::find(universe.begin(), universe.end(), name);
  if (it == universe.end()) throw ModelError("unknown element '" + name + "'");
  return static_cast<int>(it - universe.begin());
}

Signature FiniteModel::signature() const {
  Signature sig;
  for (const auto& [c, v] : constants) sig = sig.with_constant(c);
  for (const auto& [f, a] : function_arity) sig = sig.with_function(f, a);
  for (const auto& [r, a] : relation_arity) sig = sig.with_relation(r, a);
  return sig;
}

void FiniteModel::add_relation(const std::string& name, int arity) {
  relation_arity[name] = arity;
  relations[name];
}

void FiniteModel::add_coded(const std::string& name, int arity) {
  coded_arity[name] = arity;
  coded[name];
}

void FiniteModel::validate() const {
  if (universe.empty()) throw ModelError("universe must be nonempty");
  std::set<std::string> names(universe.begin(), universe.end());
  if (names.size() != universe.size()) throw ModelError("duplicate element names");
  const int n = size();
  auto in_range = [&](const std::vector<int>& t) {
    return std::all_of(t.begin(), t.end(), [&](int e) { return e >= 0 && e < n; });
  };
  for (const auto& [r, tuples] : relations) {
    auto a = relation_arity.find(r);
    if (a == relation_arity.end()) throw ModelError("relation '" + r + "' lacks an arity");
    for (const auto& t : tuples)
      if (static_cast<int>(t.size()) != a->second || !in_range(t))
        throw ModelError("bad tuple in relation '" + r + "'");
  }
  for (const auto& [f, table] : functions) {
    auto a = function_arity.find(f);
    if (a == function_arity.end()) throw ModelError("function '" + f + "' lacks an arity");
    std::size_t expected = 1;
    for (int i = 0; i < a->second; ++i) expected *= static_cast<std::size_t>(n);
    if (table.size() != expected) throw ModelError("function '" + f + "' is not total");
    for (const auto& [args, v] : table)
      if (static_cast<int>(args.size()) != a->second || !in_range(args) || v < 0 || v >= n)
        throw ModelError("bad entry in function '" + f + "'");
  }
  for (const auto& [f, a] : function_arity)
    if (!functions.count(f)) throw ModelError("function '" + f + "' has no table");
  for (const auto& [c, v] : constants)
    if (v < 0 || v >= n) throw ModelError("constant '" + c + "' out of range");
  for (const auto& [r, tuples] : coded) {
    auto a = coded_arity.find(r);
    if (a == coded_arity.end()) throw ModelError("coded relation '" + r + "' lacks an arity");
    for (const auto& [c, t] : tuples)
      if (static_cast<int>(t.size()) + 1 != a->second || !in_range(t))
        throw ModelError("bad tuple in coded relation '" + r + "'");
  }
  signature().validate();
}

Json to_json(const FiniteModel& m) {
  Json j;
  j["universe"] = m.universe;
  auto names = [&](const std::vector<int>& t) {
    Json a = Json::array();
    for (int e : t) a.push_back(m.universe[static_cast<std::size_t>(e)]);
    return a;
  };
  Json rel = Json::object();
  for (const auto& [r, arity] : m.relation_arity) {
    Json tuples = Json::array();
    if (auto it = m.relations.find(r); it != m.relations.end())
      for (const auto& t : it->second) tuples.push_back(names(t));
    rel[r] = Json{{"arity", arity}, {"tuples", std::move(tuples)}};
  }
  j["relations"] = std::move(rel);
  Json fun = Json::object();
  for (const auto& [f, arity] : m.function_arity) {
    Json table = Json::array();
    for (const auto& [args, v] : m.functions.at(f)) {
      Json row = names(args);
      row.push_back(m.universe[static_cast<std::size_t>(v)]);
      table.push_back(std::move(row));
    }
    fun[f] = Json{{"arity", arity}, {"table", std::move(table)}};
  }
  j["functions"] = std::move(fun);
  Json con = Json::object();
  for (const auto& [c, v] : m.constants) con[c] = m.universe[static_cast<std::size_t>(v)];
  j["constants"] = std::move(con);
  if (!m.coded_arity.empty()) {
    Json cod = Json::object();
    for (const auto& [r, arity] : m.coded_arity) {
      Json tuples = Json::array();
      for (const auto& [c, t] : m.coded.at(r)) {
        Json row = Json::array({to_string(c)});
        for (int e : t) row.push_back(m.universe[static_cast<std::size_t>(e)]);
        tuples.push_back(std::move(row));
      }
      cod[r] = Json{{"arity", arity}, {"tuples", std::move(tuples)}};
    }
    j["coded"] = std::move(cod);
  }
  return j;
}

FiniteModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("universe")) throw ModelError("model needs a universe");
  FiniteModel m;
  for (const auto& e : j.at("universe")) {
    if (e.is_string()) m.universe.push_back(e.get<std::string>());
    else if (e.is_number_integer()) m.universe.push_back(std::to_string(e.get<long long>()));
    else throw ModelError("universe elements must be strings or integers");
  }
  auto elem = [&](const Json& e) {
    return m.element(e.is_string() ? e.get<std::string>() : std::to_string(e.get<long long>()));
  };
  auto tuple = [&](const Json& row, std::size_t from, std::size_t to) {
    std::vector<int> t;
    for (std::size_t i = from; i < to; ++i) t.push_back(elem(row.at(i)));
    return t;
  };
  if (j.contains("relations"))
    for (const auto& [r, spec] : j.at("relations").items()) {
      const int arity = spec.at("arity").get<int>();
      m.add_relation(r, arity);
      for (const auto& row : spec.at("tuples")) {
        if (row.size() != static_cast<std::size_t>(arity))
          throw ModelError("tuple of wrong length in relation '" + r + "'");
        m.relations[r].insert(tuple(row, 0, row.size()));
      }
    }
  if (j.contains("functions"))
    for (const auto& [f, spec] : j.at("functions").items()) {
      const int arity = spec.at("arity").get<int>();
      m.function_arity[f] = arity;
      auto& table = m.functions[f];
      for (const auto& row : spec.at("table")) {
        if (row.size() != static_cast<std::size_t>(arity) + 1)
          throw ModelError("row of wrong length in function '" + f + "'");
        table[tuple(row, 0, row.size() - 1)] = elem(row.back());
      }
    }
  if (j.contains("constants"))
    for (const auto& [c, v] : j.at("constants").items()) m.constants[c] = elem(v);
  if (j.contains("coded"))
    for (const auto& [r, spec] : j.at("coded").items()) {
      const int arity = spec.at("arity").get<int>();
      m.add_coded(r, arity);
      for (const auto& row : spec.at("tuples")) {
        if (row.size() != static_cast<std::size_t>(arity))
          throw ModelError("tuple of wrong length in coded relation '" + r + "'");
        m.coded[r].insert({parse_natural(row.at(0).get<std::string>()), tuple(row, 1, row.size())});
      }
    }
  m.validate();
  return m;
}

}  // namespace metalogic
