// Command-line front end. JSON on stdout by default, --pretty for text.
// Exit codes: 0 ok, 1 domain error ({"error": ...} on stdout), 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "metalogic/coding.hpp"
#include "metalogic/complexity.hpp"
#include "metalogic/enumerate.hpp"
#include "metalogic/eval.hpp"
#include "metalogic/finite_models.hpp"
#include "metalogic/forcing.hpp"
#include "metalogic/json_io.hpp"
#include "metalogic/model.hpp"
#include "metalogic/proof.hpp"
#include "metalogic/satisfaction.hpp"
#include "metalogic/schema.hpp"
#include "metalogic/sexpr.hpp"

using namespace metalogic;

namespace {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Signature load_signature(const std::string& path) {
  return path.empty() ? Signature::arithmetic_core() : signature_from_json(read_json(path));
}

// The formula argument: literal text, or "-" for stdin.
std::string text_arg(const std::string& arg) { return arg == "-" ? read_input("-") : arg; }

// Model signature with its coded relations as ordinary relations, and
// numerals available for their code slot.
Signature model_signature(const FiniteModel& m) {
  Signature sig = m.signature();
  for (const auto& [name, arity] : m.coded_arity) sig = sig.with_relation(name, arity);
  return m.coded_arity.empty() ? sig : with_numerals(sig);
}

Json string_array(const VarSet& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v);
  return a;
}

// ---- text rendering -------------------------------------------------------

void pretty(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto simple = [](const Json& v) {
    if (v.is_primitive()) return true;
    if (!v.is_array()) return false;
    for (const auto& e : v)
      if (!e.is_primitive()) return false;
    return true;
  };
  auto inline_array = [&](const Json& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) out << pad << k << ": " << scalar(v) << "\n";
      else if (simple(v)) out << pad << k << ": " << inline_array(v) << "\n";
      else {
        out << pad << k << ":\n";
        pretty(out, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) out << pad << "- " << scalar(v) << "\n";
      else if (simple(v)) out << pad << "- " << inline_array(v) << "\n";
      else {
        out << pad << "-\n";
        pretty(out, v, indent + 1);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const Json& j, bool as_text) {
  if (as_text) pretty(std::cout, j, 0);
  else std::cout << j.dump() << "\n";
}

// ---- schema sources -------------------------------------------------------

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct GenOptions {
  std::string schema;
  std::string input;
  std::size_t max_size = 0;
  std::string max_code;
  std::string vars = "v0";
  std::string manifest;
  std::string signature;
  std::string model;
  std::string term;
  std::string var = "x";
  std::string params;
  std::string type_code = "0";
  std::size_t n = 1;
};

bool fits(const std::string& schema, const Formula& f, const GenOptions& o) {
  const VarSet fv = free_vars(f);
  if (schema == "tb" || schema == "twotb") return fv.empty();
  if (schema == "uskolem") return fv.size() == 2 && fv.count(o.var);
  if (schema == "rsat") return true;
  return fv.size() == 1;
}

void gen_schema(const GenOptions& o) {
  const auto& ids = schema_ids();
  if (std::find(ids.begin(), ids.end(), o.schema) == ids.end())
    throw DomainError("unknown schema '" + o.schema + "'");
  Signature sig = load_signature(o.signature);
  if (!o.model.empty()) sig = model_from_json(read_json(o.model)).signature();
  std::vector<Formula> sources;
  if (!o.input.empty()) {
    sources = parse_formulas(read_input(o.input), sig);
  } else {
    if (o.max_size == 0) throw DomainError("gen-schema needs --input or --max-size");
    EnumSpec spec;
    spec.sig = sig;
    spec.vars = split_list(o.vars);
    for (const auto& bucket : formulas_by_size(spec, o.max_size))
      for (const auto& f : bucket)
        if (fits(o.schema, f, o)) sources.push_back(f);
  }
  if (!o.max_code.empty()) {
    const Natural bound = parse_natural(o.max_code);
    std::erase_if(sources, [&](const Formula& f) { return encode(f) > bound; });
  }
  Json manifest = Json::array();
  auto out = [&](const Formula& inst, Json source) {
    std::cout << render(inst) << "\n";
    manifest.push_back(Json{{"schema", o.schema},
                            {"source", std::move(source)},
                            {"instance", to_string(encode(inst))}});
  };
  auto code = [](const Formula& f) { return to_string(encode(f)); };
  if (o.schema == "twotb") {
    for (std::size_t i = 0; i + 1 < sources.size(); i += 2)
      out(twotb_axiom(sources[i], sources[i + 1], sig).formula,
          Json::array({code(sources[i]), code(sources[i + 1])}));
  } else if (o.schema == "rsat") {
    const RsatInstances r =
        rsat_instances(sources, o.var, split_list(o.params), parse_natural(o.type_code), o.n, sig);
    Json src = Json::array();
    for (const auto& f : sources) src.push_back(code(f));
    for (const auto& f : r.op) out(f, src);
    out(r.ne, src);
  } else {
    std::optional<Term> t;
    if (o.schema == "utb-term") {
      if (o.term.empty()) throw DomainError("utb-term needs --term");
      t = parse_term(o.term, sig);
    }
    for (const auto& f : sources) {
      if (!fits(o.schema, f, o)) throw DomainError("source does not fit " + o.schema + ": " + render(f));
      SchemaInstance s = o.schema == "tb"        ? tb_axiom(f, sig)
                         : o.schema == "usb"     ? usb_axiom(f, sig)
                         : o.schema == "def"     ? def_axiom(f, sig)
                         : o.schema == "skolem"  ? skolem_axiom(f, sig)
                         : o.schema == "uskolem" ? us_axiom(f, o.var, sig)
                                                 : utb_term_instance(f, *t, sig);
      out(s.formula, code(f));
    }
  }
  if (!o.manifest.empty()) {
    std::ofstream m(o.manifest, std::ios::binary);
    if (!m) throw DomainError("cannot write '" + o.manifest + "'");
    m << manifest.dump(2) << "\n";
  }
}

// ---- eval -----------------------------------------------------------------

Json eval_formulas(const std::string& input, const std::string& model_path,
                   const std::string& truth_path, const std::string& predicate,
                   const std::string& sig_path) {
  const std::string text = read_input(input.empty() ? "-" : input);
  Json results = Json::array();
  bool all_true = true;
  if (!model_path.empty()) {
    const FiniteModel m = model_from_json(read_json(model_path));
    for (const auto& f : parse_formulas(text, model_signature(m))) {
      if (!is_sentence(f)) throw DomainError("not a sentence: " + render(f));
      const bool v = eval_finite(f, m);
      all_true = all_true && v;
      results.push_back(Json{{"formula", render(f)}, {"value", v ? "true" : "false"}});
    }
    return Json{{"all_true", all_true}, {"results", std::move(results)}};
  }
  Signature sig = load_signature(sig_path);
  NatExpansion ex;
  std::optional<TruthOracle> oracle;
  if (!truth_path.empty()) {
    oracle = truth_oracle_from_json(read_json(truth_path));
    if (!sig.relation_arity(predicate)) sig = sig.with_relation(predicate, 1);
    ex.relations[predicate] = [&oracle](std::span<const Natural> a) {
      auto it = oracle->values.find(a[0]);
      return it != oracle->values.end() && it->second;
    };
  }
  for (const auto& f : parse_formulas(text, sig)) {
    if (!is_sentence(f)) throw DomainError("not a sentence: " + render(f));
    const NatVerdict v = eval_nat(f, {}, {}, ex);
    all_true = all_true && v.value == Truth::True;
    results.push_back(Json{{"formula", render(f)}, {"value", to_string(v.value)}, {"exact", v.exact}});
  }
  return Json{{"all_true", all_true}, {"results", std::move(results)}};
}

// ---- forcing inputs -------------------------------------------------------

// [[code, bool], ...] (the truth-oracle layout, codes decoded in order) or
// [{"formula": sexpr, "value": bool}, ...]; a missing value is computed.
std::pair<std::vector<Formula>, std::map<Formula, bool>> load_xis(const Json& j) {
  const Signature sig = set_signature();
  std::vector<Formula> xis;
  std::map<Formula, bool> values;
  const Json& entries = j.is_object() ? j.at("values") : j;
  for (const auto& e : entries) {
    Formula f = Formula::equal(Term::constant("0"), Term::constant("0"));
    std::optional<bool> v;
    if (e.is_array() && e.size() == 2) {
      f = decode_formula(e[0].is_string() ? parse_natural(e[0].get<std::string>())
                                          : Natural(e[0].get<unsigned long long>()));
      v = e[1].get<bool>();
    } else if (e.is_object()) {
      f = parse_formula(e.at("formula").get<std::string>(), sig);
      if (e.contains("value")) v = e.at("value").get<bool>();
    } else {
      throw DomainError("truth entries are [code, bool] or {formula, value}");
    }
    if (!v) {
      const NatVerdict r = eval_nat(f);
      if (r.value == Truth::Unknown) throw DomainError("truth of " + render(f) + " is unknown");
      v = r.value == Truth::True;
    }
    xis.push_back(f);
    values[f] = *v;
  }
  return {xis, values};
}

std::vector<Formula> phis_from_trace(const Json& j) {
  std::vector<Formula> phis;
  for (const auto& st : j.at("stages")) {
    if (st.at("parity").get<std::string>() != "even") continue;
    const auto k = st.at("k").get<std::size_t>();
    if (!st.contains("formula")) throw DomainError("trace lacks formulas; pass --phis");
    if (phis.size() <= k) phis.resize(k + 1, Formula::equal(Term::constant("0"), Term::constant("0")));
    phis[k] = parse_formula(st.at("formula").get<std::string>(), set_signature());
  }
  return phis;
}

// ---- compositional tables -------------------------------------------------

// [{"code": "...", "assignment": {"v0": "a"}, "value": true}, ...]
SatTable load_table(const Json& j, const FiniteModel& m) {
  SatTable t;
  for (const auto& e : j) {
    FiniteAssignment a;
    for (const auto& [v, name] : e.at("assignment").items()) a[v] = m.element(name.get<std::string>());
    const Json& c = e.at("code");
    t[{c.is_string() ? parse_natural(c.get<std::string>()) : Natural(c.get<unsigned long long>()), a}] =
        e.at("value").get<bool>();
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metalogic workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_text = false;
  app.add_flag("--pretty", as_text, "human-readable text instead of JSON");
  std::function<Json()> action;
  bool streams = false;

  std::string formula, sig_path;
  auto formula_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("formula", formula, "s-expression, or - for stdin")->required();
    c->add_option("--signature", sig_path, "signature JSON (default: arithmetic core)");
    return c;
  };

  auto* parse = formula_cmd("parse", "parse and echo a formula with its JSON AST");
  parse->callback([&] {
    action = [&] {
      const Formula f = parse_formula(text_arg(formula), load_signature(sig_path));
      return Json{{"sexpr", render(f)},
                  {"size", ast_size(f)},
                  {"free_vars", string_array(free_vars(f))},
                  {"ast", to_json(f)}};
    };
  });

  auto* classify = formula_cmd("classify", "quantifier-alternation rank and depths");
  classify->callback([&] {
    action = [&] {
      const Formula f = parse_formula(text_arg(formula), load_signature(sig_path));
      const RankPair r = rank(f);
      return Json{{"sigma", r.sigma}, {"pi", r.pi}, {"dp", dp(f)}, {"pdp", pdp(f)}};
    };
  });

  bool encode_term = false;
  auto* enc = formula_cmd("encode", "Goedel code of a formula (or --term)");
  enc->add_flag("--term", encode_term, "the argument is a term");
  enc->callback([&] {
    action = [&] {
      const Signature sig = load_signature(sig_path);
      const std::string text = text_arg(formula);
      if (encode_term) {
        const Term t = parse_term(text, sig);
        return Json{{"code", to_string(encode(t))}, {"sexpr", render(t)}};
      }
      const Formula f = parse_formula(text, sig);
      return Json{{"code", to_string(encode(f))}, {"sexpr", render(f)}};
    };
  });

  std::string code_text;
  auto* dec = app.add_subcommand("decode", "formula or term with the given code");
  dec->add_option("code", code_text, "decimal code, or - for stdin")->required();
  dec->callback([&] {
    action = [&] {
      std::string text = text_arg(code_text);
      text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
      Natural c;
      try {
        c = parse_natural(text);
      } catch (const std::invalid_argument&) {
        throw DomainError("not a decimal number: " + text);
      }
      const Syntax s = decode(c);
      if (const auto* f = std::get_if<Formula>(&s))
        return Json{{"code", to_string(c)}, {"kind", "formula"}, {"sexpr", render(*f)}};
      return Json{{"code", to_string(c)}, {"kind", "term"}, {"sexpr", render(std::get<Term>(s))}};
    };
  });

  GenOptions gen;
  auto* gs = app.add_subcommand("gen-schema", "stream schema instances as s-expressions");
  gs->add_option("--schema", gen.schema, "tb, usb, def, utb-term, skolem, uskolem, twotb, rsat")->required();
  gs->add_option("--input", gen.input, "source formulas (- for stdin)");
  gs->add_option("--max-size", gen.max_size, "enumerate sources up to this size");
  gs->add_option("--max-code", gen.max_code, "drop sources whose code exceeds N");
  gs->add_option("--vars", gen.vars, "variables for enumeration, comma separated");
  gs->add_option("--manifest", gen.manifest, "write {schema, source, instance} records here");
  gs->add_option("--signature", gen.signature, "signature JSON");
  gs->add_option("--model", gen.model, "take the signature from a model");
  gs->add_option("--term", gen.term, "closed term for utb-term");
  gs->add_option("--var", gen.var, "distinguished variable for uskolem and rsat");
  gs->add_option("--params", gen.params, "rsat parameters, comma separated");
  gs->add_option("--type-code", gen.type_code, "rsat type code p");
  gs->add_option("--n", gen.n, "rsat: number of optimality axioms");
  gs->callback([&] {
    streams = true;
    action = [&] {
      gen_schema(gen);
      return Json();
    };
  });

  std::string input, model_path, truth_path, predicate = "T";
  auto* ev = app.add_subcommand("eval", "truth of sentences in N or in a finite model");
  ev->add_option("input", input, "file of s-expressions (default stdin)");
  ev->add_option("--model", model_path, "finite model JSON");
  ev->add_option("--truth", truth_path, "truth oracle JSON interpreting --predicate");
  ev->add_option("--predicate", predicate, "name of the truth predicate (default T)");
  ev->add_option("--signature", sig_path, "signature JSON for N");
  ev->callback([&] {
    action = [&] { return eval_formulas(input, model_path, truth_path, predicate, sig_path); };
  });

  auto* cm = app.add_subcommand("check-model", "validate a model; AS properties for 'in'");
  cm->add_option("model", model_path, "model JSON")->required();
  cm->callback([&] {
    action = [&] {
      const FiniteModel m = model_from_json(read_json(model_path));
      Json j{{"size", m.size()}, {"signature", to_json(m.signature())}};
      if (m.relation_arity.count("in") && m.relation_arity.at("in") == 2) j["as"] = to_json(check_as(m), m);
      return j;
    };
  });

  std::size_t max_size = 5;
  std::string vars = "v0,v1,v2";
  unsigned level = 0;
  auto* df = app.add_subcommand("definables", "least definitions of elements");
  df->add_option("model", model_path, "model JSON")->required();
  df->add_option("--max-size", max_size, "formula size bound (default 5)");
  df->add_option("--vars", vars, "variables, the first one free");
  df->add_option("--level", level, "only Sigma*_level formulas (0: all)");
  df->callback([&] {
    action = [&] {
      const FiniteModel m = model_from_json(read_json(model_path));
      return to_json(definable_elements(m, max_size, {split_list(vars), level}), m);
    };
  });

  auto* au = app.add_subcommand("autos", "automorphisms of a model");
  au->add_option("model", model_path, "model JSON")->required();
  au->callback([&] {
    action = [&] {
      const FiniteModel m = model_from_json(read_json(model_path));
      const AutomorphismReport r = automorphisms(m);
      Json perms = Json::array();
      for (const auto& p : r.automorphisms) {
        Json row = Json::object();
        for (std::size_t i = 0; i < p.size(); ++i)
          row[m.universe[i]] = m.universe[static_cast<std::size_t>(p[i])];
        perms.push_back(std::move(row));
      }
      return Json{{"automorphisms", std::move(perms)}, {"fixpoint_free", r.fixpoint_free}};
    };
  });

  std::string other_path;
  auto* ne = app.add_subcommand("nequiv", "compare the Sigma*_n sentences true in two models");
  ne->add_option("model", model_path, "first model JSON")->required();
  ne->add_option("other", other_path, "second model JSON")->required();
  ne->add_option("--level", level, "n (0: all sentences)");
  ne->add_option("--max-size", max_size, "sentence size bound (default 5)");
  ne->add_option("--vars", vars, "variables");
  ne->callback([&] {
    action = [&] {
      const FiniteModel a = model_from_json(read_json(model_path));
      const FiniteModel b = model_from_json(read_json(other_path));
      return to_json(n_equiv(a, b, level, max_size, {split_list(vars), 0}));
    };
  });

  std::string condition;
  bool budget = false;
  ForcingBudget fb;
  auto* fo = app.add_subcommand("force", "does a condition force a set sentence");
  fo->add_option("formula", formula, "sentence over 0 1 + * < = and X")->required();
  fo->add_option("--condition", condition, "binary string, e.g. 0110");
  fo->add_flag("--budget", budget, "three-valued search for sentences without a bit bound");
  fo->add_option("--witnesses", fb.witnesses, "budget: witnesses per unbounded exists");
  fo->add_option("--extension-bits", fb.extension_bits, "budget: extra bits below a negation");
  fo->callback([&] {
    action = [&] {
      const Formula f = parse_formula(text_arg(formula), set_signature());
      const Condition s = parse_condition(condition);
      const auto bb = bit_bound(f);
      const Forcing r = budget ? forces_budget(s, f, fb) : forces(s, f);
      return Json{{"condition", to_string(s)},
                  {"formula", render(f)},
                  {"bit_bound", bb ? Json(to_string(*bb)) : Json(nullptr)},
                  {"result", to_string(r)}};
    };
  });

  std::size_t stages = 0;
  std::string phis_path, trace_path;
  auto* bg = app.add_subcommand("build-generic", "staged construction of a generic condition");
  bg->add_option("--stages", stages, "number of stages")->required();
  bg->add_option("--phis", phis_path, "s-expressions phi_0, phi_1, ...")->required();
  bg->add_option("--truth", truth_path, "xi enumeration with truth values")->required();
  bg->callback([&] {
    action = [&] {
      const auto phis = parse_formulas(read_input(phis_path), set_signature());
      const auto [xis, values] = load_xis(read_json(truth_path));
      TruthFunction truth = [&values = values](const Formula& f) { return values.at(f); };
      return to_json(build_generic(stages, phis, xis, truth), phis, xis);
    };
  });

  auto* ad = app.add_subcommand("audit", "which phi_k the final condition settles");
  ad->add_option("trace", trace_path, "StageTrace JSON")->required();
  ad->add_option("--phis", phis_path, "phi enumeration (default: taken from the trace)");
  ad->callback([&] {
    action = [&] {
      const Json j = read_json(trace_path);
      const auto phis = phis_path.empty() ? phis_from_trace(j)
                                          : parse_formulas(read_input(phis_path), set_signature());
      const StageTrace t = trace_from_json(j);
      Json out = to_json(audit_genericity(t, phis));
      out["decoded"] = Json::array();
      for (bool b : decode_truth(t)) out["decoded"].push_back(b);
      return out;
    };
  });

  std::string oracle_path;
  unsigned depth = 0, numerals = 0;
  std::size_t size_cap = 8;
  auto* ct = app.add_subcommand("check-ct", "CT clauses against a sentence truth oracle");
  ct->add_option("oracle", oracle_path, "truth oracle JSON")->required();
  ct->add_option("--depth", depth, "sentence depth x (default: from the oracle)");
  ct->add_option("--numerals", numerals, "numeral bound b (default: from the oracle)");
  ct->add_option("--size-cap", size_cap, "corpus size cap (default 8)");
  ct->callback([&] {
    action = [&] {
      const TruthOracle t = truth_oracle_from_json(read_json(oracle_path));
      const unsigned x = depth ? depth : t.depth;
      const unsigned b = numerals ? numerals : t.numeral_bound;
      if (!b) throw DomainError("numeral bound unknown; pass --numerals");
      return to_json(check_ct(t, x, b, size_cap));
    };
  });

  std::string table_path, formulas_path;
  auto* cc = app.add_subcommand("check-compositional", "satisfaction clauses over a finite model");
  cc->add_option("model", model_path, "model JSON")->required();
  cc->add_option("--formulas", formulas_path, "formulas whose clauses are checked")->required();
  auto* table_opt = cc->add_option("--table", table_path, "satisfaction table JSON");
  auto* self_opt = cc->add_flag("--self", "use the model's own satisfaction table");
  table_opt->excludes(self_opt);
  cc->callback([&] {
    action = [&] {
      const FiniteModel m = model_from_json(read_json(model_path));
      const auto fs = parse_formulas(read_input(formulas_path), m.signature());
      std::vector<Formula> all;
      for (const auto& f : fs)
        for (const auto& g : subformulas(f)) all.push_back(g);
      SatTable table;
      if (*self_opt) table = satisfaction_table(fs, m);
      else if (!table_path.empty()) table = load_table(read_json(table_path), m);
      else throw DomainError("pass --table or --self");
      return to_json(check_compositional(oracle_from_table(table), all, m));
    };
  });

  std::string proof_path, premises_path;
  auto* cp = app.add_subcommand("check-proof", "Hilbert proof checker");
  cp->add_option("proof", proof_path, "proof JSON")->required();
  cp->add_option("--premises", premises_path, "premise s-expressions");
  cp->callback([&] {
    action = [&] {
      const Proof p = proof_from_json(read_json(proof_path));
      std::vector<Formula> premises;
      if (!premises_path.empty()) premises = parse_formulas(read_input(premises_path), p.signature);
      return to_json(check_proof(p, premises));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    Json out = action();
    if (!streams) emit(out, as_text);
    return 0;
  } catch (const NotACodeError& e) {
    std::cout.flush();
    emit(Json{{"error", e.what()}, {"layer", e.layer()}}, as_text);
    return 1;
  } catch (const ParseError& e) {
    emit(Json{{"error", e.what()}, {"line", e.line()}, {"column", e.column()}}, as_text);
    return 1;
  } catch (const std::exception& e) {
    emit(Json{{"error", e.what()}}, as_text);
    return 1;
  }
}
