#include "metalogic/json_io.hpp"

namespace metalogic {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SignatureError(std::string("JSON AST node lacks field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string())
    throw SignatureError(std::string("JSON AST field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return Json{{"kind", "var"}, {"name", t.name()}};
    case Term::Kind::Constant:
      return Json{{"kind", "const"}, {"name", t.name()}};
    case Term::Kind::Apply: {
      Json args = Json::array();
      for (const auto& a : t.args()) args.push_back(to_json(a));
      return Json{{"kind", "app"}, {"fn", t.name()}, {"args", std::move(args)}};
    }
  }
  return {};
}

Json to_json(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      return Json{{"kind", "eq"},
                  {"args", Json::array({to_json(f.terms()[0]), to_json(f.terms()[1])})}};
    case Formula::Kind::Relation: {
      Json args = Json::array();
      for (const auto& t : f.terms()) args.push_back(to_json(t));
      return Json{{"kind", "rel"}, {"name", f.name()}, {"args", std::move(args)}};
    }
    case Formula::Kind::Not:
      return Json{{"kind", "not"}, {"body", to_json(f.body())}};
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return Json{{"kind", f.kind() == Formula::Kind::And ? "and" : "or"},
                  {"args", Json::array({to_json(f.lhs()), to_json(f.rhs())})}};
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return Json{{"kind", f.kind() == Formula::Kind::Exists ? "exists" : "forall"},
                  {"var", f.name()},
                  {"body", to_json(f.body())}};
  }
  return {};
}

Term term_from_json(const Json& j, const Signature& sig) {
  const std::string kind = string_field(j, "kind");
  Term t = [&] {
    if (kind == "var") return Term::variable(string_field(j, "name"));
    if (kind == "const") return Term::constant(string_field(j, "name"));
    if (kind == "app") {
      std::vector<Term> args;
      for (const auto& a : field(j, "args")) args.push_back(term_from_json(a, sig));
      return Term::apply(string_field(j, "fn"), std::move(args));
    }
    throw SignatureError("unknown term kind '" + kind + "'");
  }();
  if (!t.is_apply()) check_signature(t, sig);
  else if (auto a = sig.function_arity(t.name()); !a || static_cast<std::size_t>(*a) != t.args().size())
    throw SignatureError("function '" + t.name() + "' undeclared or wrong arity");
  return t;
}

Formula formula_from_json(const Json& j, const Signature& sig) {
  const std::string kind = string_field(j, "kind");
  auto children = [&](std::size_t n) {
    const Json& args = field(j, "args");
    if (!args.is_array() || args.size() != n)
      throw SignatureError("'" + kind + "' node needs " + std::to_string(n) + " args");
    return args;
  };
  Formula f = [&] {
    if (kind == "eq") {
      const Json args = children(2);
      return Formula::equal(term_from_json(args[0], sig), term_from_json(args[1], sig));
    }
    if (kind == "rel") {
      std::vector<Term> args;
      for (const auto& a : field(j, "args")) args.push_back(term_from_json(a, sig));
      return Formula::relation(string_field(j, "name"), std::move(args));
    }
    if (kind == "not") return Formula::negation(formula_from_json(field(j, "body"), sig));
    if (kind == "and" || kind == "or") {
      const Json args = children(2);
      Formula a = formula_from_json(args[0], sig);
      Formula b = formula_from_json(args[1], sig);
      return kind == "and" ? Formula::conjunction(a, b) : Formula::disjunction(a, b);
    }
    if (kind == "exists" || kind == "forall") {
      std::string var = string_field(j, "var");
      Formula body = formula_from_json(field(j, "body"), sig);
      return kind == "exists" ? Formula::exists(var, body) : Formula::forall(var, body);
    }
    throw SignatureError("unknown formula kind '" + kind + "'");
  }();
  if (f.kind() == Formula::Kind::Relation || f.is_quantifier()) {
    // Children were checked on construction; check the node itself.
    if (f.kind() == Formula::Kind::Relation) {
      auto a = sig.relation_arity(f.name());
      if (!a || static_cast<std::size_t>(*a) != f.terms().size())
        throw SignatureError("relation '" + f.name() + "' undeclared or wrong arity");
    } else if (sig.declares(f.name())) {
      throw SignatureError("bound variable '" + f.name() + "' clashes with a symbol");
    }
  }
  return f;
}

Json to_json(const Signature& sig) {
  Json j;
  Json constants = Json::array();
  Json functions = Json::object();
  Json relations = Json::object();
  const Signature base = sig.arithmetic ? Signature::arithmetic_core() : Signature{};
  for (const auto& c : sig.constants)
    if (!base.has_constant(c)) constants.push_back(c);
  for (const auto& [n, a] : sig.functions)
    if (!base.function_arity(n)) functions[n] = a;
  for (const auto& [n, a] : sig.relations)
    if (!base.relation_arity(n)) relations[n] = a;
  j["arithmetic"] = sig.arithmetic;
  j["constants"] = std::move(constants);
  j["functions"] = std::move(functions);
  j["relations"] = std::move(relations);
  return j;
}

Signature signature_from_json(const Json& j) {
  if (!j.is_object()) throw SignatureError("signature must be a JSON object");
  Signature sig = j.value("arithmetic", false) ? Signature::arithmetic_core() : Signature{};
  if (j.contains("constants"))
    for (const auto& c : j.at("constants")) sig = sig.with_constant(c.get<std::string>());
  if (j.contains("functions"))
    for (const auto& [n, a] : j.at("functions").items())
      sig = sig.with_function(n, a.get<int>());
  if (j.contains("relations"))
    for (const auto& [n, a] : j.at("relations").items())
      sig = sig.with_relation(n, a.get<int>());
  sig.validate();
  return sig;
}

}  // namespace metalogic
