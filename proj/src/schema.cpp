#include "metalogic/schema.hpp"

#include "metalogic/eval.hpp"

namespace metalogic {

namespace {

Signature extend(const Signature& sig, const std::vector<std::pair<std::string, int>>& relations,
                 const std::vector<std::pair<std::string, int>>& functions = {}) {
  try {
    Signature out = with_numerals(sig);
    for (const auto& [r, a] : relations) out = out.with_relation(r, a);
    for (const auto& [f, a] : functions) out = out.with_function(f, a);
    return out;
  } catch (const SignatureError& e) {
    throw SchemaError(std::string("symbol clash: ") + e.what());
  }
}

void require_fresh(const Formula& phi, const std::string& name) {
  if (relation_symbols(phi).count(name) || function_symbols(phi).count(name))
    throw SchemaError("input mentions the fresh symbol '" + name + "'");
}

void require_fits(const Formula& phi, const Signature& sig) {
  try {
    check_signature(phi, sig);
  } catch (const SignatureError& e) {
    throw SchemaError(e.what());
  }
}

void require_sentence(const Formula& phi) {
  if (!is_sentence(phi)) throw SchemaError("input must be a sentence");
}

std::string single_free(const Formula& phi) {
  VarSet fv = free_vars(phi);
  if (fv.size() != 1)
    throw SchemaError("input must have exactly one free variable, has " + std::to_string(fv.size()));
  return *fv.begin();
}

Term code_term(const Formula& phi) { return numeral(encode(phi)); }

}  // namespace

Signature with_numerals(const Signature& sig) {
  Signature out = sig;
  if (!out.has_constant(core::kZero)) out = out.with_constant(std::string(core::kZero));
  if (!out.has_constant(core::kOne)) out = out.with_constant(std::string(core::kOne));
  if (!out.function_arity(core::kPlus)) out = out.with_function(std::string(core::kPlus), 2);
  if (!out.function_arity(core::kTimes)) out = out.with_function(std::string(core::kTimes), 2);
  return out;
}

SchemaInstance tb_axiom(const Formula& phi, const Signature& sig, const std::string& t) {
  require_sentence(phi);
  require_fits(phi, sig);
  require_fresh(phi, t);
  Signature ext = extend(sig, {{t, 1}});
  return {iff(Formula::relation(t, {code_term(phi)}), phi), ext};
}

SchemaInstance usb_axiom(const Formula& phi, const Signature& sig, const std::string& s) {
  const std::string v = single_free(phi);
  require_fits(phi, sig);
  require_fresh(phi, s);
  Signature ext = extend(sig, {{s, 2}});
  const std::string x = fresh_variable(all_vars(phi));
  const Term xt = Term::variable(x);
  return {Formula::forall(x, iff(Formula::relation(s, {code_term(phi), xt}), substitute(phi, v, xt))),
          ext};
}

SchemaInstance def_axiom(const Formula& phi, const Signature& sig, const std::string& d) {
  const std::string x = single_free(phi);
  require_fits(phi, sig);
  require_fresh(phi, d);
  Signature ext = extend(sig, {{d, 2}});
  VarSet avoid = all_vars(phi);
  const std::string y = fresh_variable(avoid);
  const Term yt = Term::variable(y);
  Formula rhs = Formula::conjunction(exists_unique(x, phi), substitute(phi, x, yt));
  return {Formula::forall(y, iff(Formula::relation(d, {code_term(phi), yt}), rhs)), ext};
}

SchemaInstance utb_term_instance(const Formula& phi, const Term& t, const Signature& sig,
                                 const std::string& name) {
  const std::string v = single_free(phi);
  require_fits(phi, sig);
  require_fresh(phi, name);
  if (!is_closed(t)) throw SchemaError("term must be closed");
  Natural value;
  try {
    value = eval_term(t);
  } catch (const EvalError& e) {
    throw SchemaError(e.what());
  }
  Signature ext = extend(sig, {{name, 1}});
  Formula lhs = Formula::relation(name, {code_term(substitute(phi, v, t))});
  return {iff(lhs, dot_substitute(phi, v, value)), ext};
}

SchemaInstance skolem_axiom(const Formula& phi, const Signature& sig, const std::string& h) {
  const std::string x = single_free(phi);
  require_fits(phi, sig);
  require_fresh(phi, h);
  Signature ext = extend(sig, {}, {{h, 1}});
  Term witness = Term::apply(h, {code_term(phi)});
  return {implies(Formula::exists(x, phi), substitute(phi, x, witness)), ext};
}

SchemaInstance us_axiom(const Formula& phi, const std::string& x, const Signature& sig,
                        const std::string& h) {
  VarSet fv = free_vars(phi);
  if (fv.size() != 2 || !fv.count(x))
    throw SchemaError("input must have the free variable '" + x + "' and one parameter");
  fv.erase(x);
  const std::string y = *fv.begin();
  require_fits(phi, sig);
  require_fresh(phi, h);
  Signature ext = extend(sig, {}, {{h, 2}});
  Term witness = Term::apply(h, {code_term(phi), Term::variable(y)});
  return {Formula::forall(y, implies(Formula::exists(x, phi), substitute(phi, x, witness))), ext};
}

SchemaInstance twotb_axiom(const Formula& phi, const Formula& psi, const Signature& sig,
                           const std::string& t1, const std::string& t2) {
  require_sentence(phi);
  require_sentence(psi);
  require_fits(phi, sig);
  require_fits(psi, sig);
  for (const auto& n : {t1, t2}) {
    require_fresh(phi, n);
    require_fresh(psi, n);
  }
  if (t1 == t2) throw SchemaError("the two truth predicates must differ");
  Signature ext = extend(sig, {{t1, 1}, {t2, 1}});
  Formula a = iff(Formula::relation(t1, {code_term(phi)}), phi);
  Formula b = iff(Formula::relation(t2, {code_term(psi)}), psi);
  return {Formula::disjunction(a, b), ext};
}

Formula cantor_pair_formula(const Term& z, const Term& a, const Term& b) {
  const std::string plus(core::kPlus), times(core::kTimes);
  Term s = Term::apply(plus, {a, b});
  Term s1 = Term::apply(plus, {s, Term::constant(std::string(core::kOne))});
  Term rhs = Term::apply(plus, {Term::apply(times, {s, s1}), Term::apply(plus, {b, b})});
  return Formula::equal(Term::apply(plus, {z, z}), rhs);
}

Formula tuple_formula(const std::string& z, const std::vector<std::string>& ys) {
  if (ys.empty()) throw SchemaError("a tuple needs at least one component");
  if (ys.size() == 1) return Formula::equal(Term::variable(z), Term::variable(ys[0]));
  VarSet avoid(ys.begin(), ys.end());
  avoid.insert(z);
  // acc_1 = y1, acc_i = <acc_{i-1}, y_i>, z = acc_k.
  std::vector<std::string> acc{ys[0]};
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    acc.push_back(fresh_variable(avoid));
    avoid.insert(acc.back());
  }
  acc.push_back(z);
  std::vector<Formula> links;
  for (std::size_t i = 1; i < ys.size(); ++i)
    links.push_back(cantor_pair_formula(Term::variable(acc[i]), Term::variable(acc[i - 1]),
                                        Term::variable(ys[i])));
  Formula body = conjunction_of(links);
  for (std::size_t i = acc.size() - 1; i-- > 1;) body = Formula::exists(acc[i], body);
  return body;
}

RsatInstances rsat_instances(const std::vector<Formula>& ptype, const std::string& x,
                             const std::vector<std::string>& params, const Natural& p,
                             std::size_t n, const Signature& sig, const std::string& r) {
  VarSet allowed(params.begin(), params.end());
  allowed.insert(x);
  if (allowed.size() != params.size() + 1) throw SchemaError("parameter names must be distinct");
  for (const auto& phi : ptype) {
    for (const auto& v : free_vars(phi))
      if (!allowed.count(v)) throw SchemaError("stray free variable '" + v + "'");
    require_fits(phi, sig);
    require_fresh(phi, r);
  }
  Signature ext = extend(sig, {{r, 3}});
  std::vector<Formula> ops;
  VarSet avoid = allowed;
  for (const auto& phi : ptype)
    for (const auto& v : all_vars(phi)) avoid.insert(v);
  // A single parameter is used as is; several are packed into y.
  std::string y;
  if (params.size() == 1) y = params[0];
  else {
    y = fresh_variable(avoid);
    avoid.insert(y);
  }
  const Term code = numeral(p);
  auto close = [&](Formula body) {
    if (params.size() <= 1) return Formula::forall(y, body);
    body = implies(tuple_formula(y, params), body);
    for (auto it = params.rbegin(); it != params.rend(); ++it) body = Formula::forall(*it, body);
    return Formula::forall(y, body);
  };
  const Formula rx = Formula::relation(r, {code, Term::variable(x), Term::variable(y)});
  const std::size_t m = std::min(n, ptype.size());
  for (std::size_t k = 1; k <= m; ++k) {
    Formula conj = conjunction_of(std::span<const Formula>(ptype.data(), k));
    Formula op = implies(Formula::exists(x, conj), Formula::forall(x, implies(rx, conj)));
    ops.push_back(close(op));
  }
  return {std::move(ext), std::move(ops), Formula::forall(y, Formula::exists(x, rx))};
}

Formula translate_predicate(const Formula& phi, const std::string& r,
                            const std::vector<std::string>& params, const Formula& defn) {
  VarSet ps(params.begin(), params.end());
  if (ps.size() != params.size()) throw SchemaError("distinguished variables must be distinct");
  for (const auto& v : free_vars(defn))
    if (!ps.count(v)) throw SchemaError("definition has stray free variable '" + v + "'");
  switch (phi.kind()) {
    case Formula::Kind::Equal:
      return phi;
    case Formula::Kind::Relation: {
      if (phi.name() != r) return phi;
      if (phi.terms().size() != params.size())
        throw SchemaError("relation '" + r + "' has arity " + std::to_string(phi.terms().size()) +
                          " but the definition takes " + std::to_string(params.size()));
      std::map<std::string, Term> sub;
      for (std::size_t i = 0; i < params.size(); ++i) sub.emplace(params[i], phi.terms()[i]);
      return substitute_all(defn, sub);
    }
    case Formula::Kind::Not:
      return Formula::negation(translate_predicate(phi.body(), r, params, defn));
    case Formula::Kind::And:
      return Formula::conjunction(translate_predicate(phi.lhs(), r, params, defn),
                                  translate_predicate(phi.rhs(), r, params, defn));
    case Formula::Kind::Or:
      return Formula::disjunction(translate_predicate(phi.lhs(), r, params, defn),
                                  translate_predicate(phi.rhs(), r, params, defn));
    case Formula::Kind::Exists:
      return Formula::exists(phi.name(), translate_predicate(phi.body(), r, params, defn));
    case Formula::Kind::Forall:
      return Formula::forall(phi.name(), translate_predicate(phi.body(), r, params, defn));
  }
  return phi;
}

const std::vector<std::string>& schema_ids() {
  static const std::vector<std::string> ids{"tb",     "usb",     "def",   "utb-term",
                                            "skolem", "uskolem", "twotb", "rsat"};
  return ids;
}

}  // namespace metalogic
