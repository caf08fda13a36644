#include "metalogic/syntax.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace metalogic {

// ---------------------------------------------------------------- Signature

Signature Signature::empty() { return {}; }

Signature Signature::arithmetic_core() {
  Signature s;
  s.constants = {std::string(core::kZero), std::string(core::kOne)};
  s.functions = {{std::string(core::kPlus), 2}, {std::string(core::kTimes), 2}};
  s.relations = {{std::string(core::kLess), 2}};
  s.arithmetic = true;
  return s;
}

Signature Signature::membership() {
  Signature s;
  s.relations = {{"in", 2}};
  return s;
}

bool Signature::has_constant(std::string_view name) const {
  return std::find(constants.begin(), constants.end(), name) != constants.end();
}

std::optional<int> Signature::function_arity(std::string_view name) const {
  auto it = functions.find(std::string(name));
  if (it == functions.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Signature::relation_arity(std::string_view name) const {
  auto it = relations.find(std::string(name));
  if (it == relations.end()) return std::nullopt;
  return it->second;
}

bool Signature::declares(std::string_view name) const {
  return has_constant(name) || function_arity(name) || relation_arity(name);
}

void Signature::validate() const {
  std::set<std::string> seen;
  auto claim = [&](const std::string& n) {
    if (n.empty()) throw SignatureError("empty symbol name");
    if (n == "=") throw SignatureError("'=' is builtin and cannot be declared");
    if (!seen.insert(n).second)
      throw SignatureError("symbol '" + n + "' declared twice");
  };
  for (const auto& c : constants) claim(c);
  for (const auto& [n, a] : functions) {
    claim(n);
    if (a < 1) throw SignatureError("function '" + n + "' must have arity >= 1");
  }
  for (const auto& [n, a] : relations) {
    claim(n);
    if (a < 0) throw SignatureError("relation '" + n + "' has negative arity");
  }
  if (arithmetic) {
    if (!has_constant(core::kZero) || !has_constant(core::kOne) ||
        function_arity(core::kPlus) != 2 || function_arity(core::kTimes) != 2 ||
        relation_arity(core::kLess) != 2)
      throw SignatureError("arithmetic core must declare 0, 1, +/2, */2, </2");
  }
}

Signature Signature::with_constant(std::string name) const {
  if (declares(name)) throw SignatureError("symbol '" + name + "' already declared");
  Signature s = *this;
  s.constants.push_back(std::move(name));
  return s;
}

Signature Signature::with_function(std::string name, int arity) const {
  if (auto a = function_arity(name)) {
    if (*a == arity) return *this;
    throw SignatureError("function '" + name + "' already declared with arity " +
                         std::to_string(*a));
  }
  if (declares(name)) throw SignatureError("symbol '" + name + "' already declared");
  Signature s = *this;
  s.functions.emplace(std::move(name), arity);
  s.validate();
  return s;
}

Signature Signature::with_relation(std::string name, int arity) const {
  if (auto a = relation_arity(name)) {
    if (*a == arity) return *this;
    throw SignatureError("relation '" + name + "' already declared with arity " +
                         std::to_string(*a));
  }
  if (declares(name)) throw SignatureError("symbol '" + name + "' already declared");
  Signature s = *this;
  s.relations.emplace(std::move(name), arity);
  s.validate();
  return s;
}

// --------------------------------------------------------------------- Term

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Variable, std::move(name), {}}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Constant, std::move(name), {}}));
}

Term Term::apply(std::string function, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Apply, std::move(function), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  return std::equal(a.args().begin(), a.args().end(), b.args().begin(),
                    b.args().end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(),
                                                b.args().begin(), b.args().end());
}

// ------------------------------------------------------------------ Formula

Formula Formula::equal(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Equal, "=", {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::relation(std::string name, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Relation, std::move(name), std::move(args), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Exists, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Forall, std::move(var), {}, {std::move(body)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->name != b.node_->name) return false;
  return a.node_->terms == b.node_->terms && a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  const auto& ta = a.node_->terms;
  const auto& tb = b.node_->terms;
  if (auto c = std::lexicographical_compare_three_way(ta.begin(), ta.end(),
                                                      tb.begin(), tb.end());
      c != 0)
    return c;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(),
                                                cb.end());
}

Formula implies(const Formula& a, const Formula& b) {
  return Formula::disjunction(Formula::negation(a), b);
}

Formula iff(const Formula& a, const Formula& b) {
  return Formula::conjunction(implies(a, b), implies(b, a));
}

Formula exists_unique(const std::string& var, const Formula& body) {
  VarSet avoid = all_vars(body);
  avoid.insert(var);
  const std::string z = fresh_variable(avoid);
  Formula body_z = substitute(body, var, Term::variable(z));
  Formula unique = Formula::forall(
      z, implies(body_z, Formula::equal(Term::variable(z), Term::variable(var))));
  return Formula::exists(var, Formula::conjunction(body, unique));
}

Formula conjunction_of(std::span<const Formula> parts) {
  if (parts.empty())
    return Formula::equal(Term::constant(std::string(core::kZero)),
                          Term::constant(std::string(core::kZero)));
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
    acc = Formula::conjunction(*it, acc);
  return acc;
}

// ---------------------------------------------------------------- variables

namespace {

void collect_term_vars(const Term& t, VarSet& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_term_vars(a, out);
}

void collect_free(const Formula& f, VarSet& bound, VarSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation: {
      VarSet vs;
      for (const auto& t : f.terms()) collect_term_vars(t, vs);
      for (const auto& v : vs)
        if (!bound.contains(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Not:
      collect_free(f.body(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool fresh = bound.insert(f.name()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.name());
      return;
    }
  }
}

void collect_all(const Formula& f, VarSet& out) {
  if (f.is_atomic()) {
    for (const auto& t : f.terms()) collect_term_vars(t, out);
    return;
  }
  if (f.is_quantifier()) out.insert(f.name());
  if (f.is_binary()) {
    collect_all(f.lhs(), out);
    collect_all(f.rhs(), out);
  } else {
    collect_all(f.body(), out);
  }
}

}  // namespace

VarSet free_vars(const Term& t) {
  VarSet out;
  collect_term_vars(t, out);
  return out;
}

VarSet free_vars(const Formula& f) {
  VarSet bound, out;
  collect_free(f, bound, out);
  return out;
}

VarSet all_vars(const Formula& f) {
  VarSet out;
  collect_all(f, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

bool is_closed(const Term& t) {
  if (t.is_variable()) return false;
  return std::all_of(t.args().begin(), t.args().end(),
                     [](const Term& a) { return is_closed(a); });
}

std::string fresh_variable(const VarSet& avoid) {
  // Only names of the exact form v<digits without leading zero> occupy an index.
  std::set<unsigned long> used;
  for (const auto& name : avoid) {
    if (name.size() < 2 || name[0] != 'v') continue;
    if (name.size() > 2 && name[1] == '0') continue;
    unsigned long idx = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec == std::errc() && p == name.data() + name.size()) used.insert(idx);
  }
  unsigned long k = 0;
  while (used.contains(k)) ++k;
  return "v" + std::to_string(k);
}

// ------------------------------------------------------------- substitution

namespace {

Term subst_term(const Term& t, const std::map<std::string, Term>& sigma) {
  if (t.is_variable()) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  if (t.is_constant()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(subst_term(a, sigma));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::apply(t.name(), std::move(args)) : t;
}

Formula subst(const Formula& f, const std::map<std::string, Term>& sigma) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      return Formula::equal(subst_term(f.terms()[0], sigma),
                            subst_term(f.terms()[1], sigma));
    case Formula::Kind::Relation: {
      std::vector<Term> args;
      for (const auto& t : f.terms()) args.push_back(subst_term(t, sigma));
      return Formula::relation(f.name(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(subst(f.body(), sigma));
    case Formula::Kind::And:
      return Formula::conjunction(subst(f.lhs(), sigma), subst(f.rhs(), sigma));
    case Formula::Kind::Or:
      return Formula::disjunction(subst(f.lhs(), sigma), subst(f.rhs(), sigma));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const std::string& x = f.name();
      const VarSet body_free = free_vars(f.body());
      std::map<std::string, Term> inner;
      for (const auto& [v, t] : sigma)
        if (v != x && body_free.contains(v)) inner.emplace(v, t);
      if (inner.empty()) return f;
      VarSet incoming;
      for (const auto& [v, t] : inner) collect_term_vars(t, incoming);
      std::string bound = x;
      if (incoming.contains(x)) {
        VarSet avoid = all_vars(f.body());
        avoid.insert(incoming.begin(), incoming.end());
        for (const auto& [v, t] : inner) avoid.insert(v);
        avoid.insert(x);
        bound = fresh_variable(avoid);
        inner.emplace(x, Term::variable(bound));
      }
      Formula body = subst(f.body(), inner);
      return f.kind() == Formula::Kind::Exists ? Formula::exists(bound, body)
                                               : Formula::forall(bound, body);
    }
  }
  return f;
}

}  // namespace

Term substitute(const Term& t, const std::string& var, const Term& replacement) {
  return subst_term(t, {{var, replacement}});
}

Formula substitute(const Formula& f, const std::string& var,
                   const Term& replacement) {
  if (!free_vars(f).contains(var)) return f;
  return subst(f, {{var, replacement}});
}

Formula substitute_all(const Formula& f,
                       const std::map<std::string, Term>& replacements) {
  const VarSet fv = free_vars(f);
  std::map<std::string, Term> sigma;
  for (const auto& [v, t] : replacements)
    if (fv.contains(v)) sigma.emplace(v, t);
  if (sigma.empty()) return f;
  return subst(f, sigma);
}

Formula rename_bound(const Formula& f, const std::string& from,
                     const std::string& to) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(rename_bound(f.body(), from, to));
    case Formula::Kind::And:
      return Formula::conjunction(rename_bound(f.lhs(), from, to),
                                  rename_bound(f.rhs(), from, to));
    case Formula::Kind::Or:
      return Formula::disjunction(rename_bound(f.lhs(), from, to),
                                  rename_bound(f.rhs(), from, to));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      Formula body = rename_bound(f.body(), from, to);
      std::string var = f.name();
      if (var == from) {
        body = substitute(body, from, Term::variable(to));
        var = to;
      }
      return f.kind() == Formula::Kind::Exists ? Formula::exists(var, body)
                                               : Formula::forall(var, body);
    }
  }
  return f;
}

// ------------------------------------------------------------ alpha-equality

namespace {

// Bound variables are compared by binder depth; free ones by name.
using Scope = std::vector<std::string>;

std::optional<std::size_t> binder_index(const Scope& scope, const std::string& v) {
  for (std::size_t i = scope.size(); i-- > 0;)
    if (scope[i] == v) return scope.size() - 1 - i;
  return std::nullopt;
}

bool alpha_term(const Term& a, const Scope& sa, const Term& b, const Scope& sb) {
  if (a.kind() != b.kind()) return false;
  if (a.is_variable()) {
    auto ia = binder_index(sa, a.name());
    auto ib = binder_index(sb, b.name());
    if (ia || ib) return ia == ib;
    return a.name() == b.name();
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], sa, b.args()[i], sb)) return false;
  return true;
}

bool alpha(const Formula& a, Scope& sa, const Formula& b, Scope& sb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation:
      if (a.name() != b.name() || a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_term(a.terms()[i], sa, b.terms()[i], sb)) return false;
      return true;
    case Formula::Kind::Not:
      return alpha(a.body(), sa, b.body(), sb);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return alpha(a.lhs(), sa, b.lhs(), sb) && alpha(a.rhs(), sa, b.rhs(), sb);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      sa.push_back(a.name());
      sb.push_back(b.name());
      const bool ok = alpha(a.body(), sa, b.body(), sb);
      sa.pop_back();
      sb.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  Scope sa, sb;
  return alpha(a, sa, b, sb);
}

// --------------------------------------------------------------------- size

std::size_t ast_size(const Term& t) {
  if (t.is_variable()) return 0;
  std::size_t n = 1;
  for (const auto& a : t.args()) n += ast_size(a);
  return n;
}

std::size_t ast_size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation: {
      std::size_t n = 1;
      for (const auto& t : f.terms()) n += ast_size(t);
      return n;
    }
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return 1 + ast_size(f.body());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + ast_size(f.lhs()) + ast_size(f.rhs());
  }
  return 0;
}

// ---------------------------------------------------------------- checking

void check_signature(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      if (sig.declares(t.name()))
        throw SignatureError("variable name '" + t.name() + "' clashes with a symbol");
      return;
    case Term::Kind::Constant:
      if (!sig.has_constant(t.name()))
        throw SignatureError("undeclared constant '" + t.name() + "'");
      return;
    case Term::Kind::Apply: {
      auto arity = sig.function_arity(t.name());
      if (!arity) throw SignatureError("undeclared function '" + t.name() + "'");
      if (static_cast<std::size_t>(*arity) != t.args().size())
        throw SignatureError("function '" + t.name() + "' expects " +
                             std::to_string(*arity) + " arguments, got " +
                             std::to_string(t.args().size()));
      for (const auto& a : t.args()) check_signature(a, sig);
      return;
    }
  }
}

void check_signature(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      for (const auto& t : f.terms()) check_signature(t, sig);
      return;
    case Formula::Kind::Relation: {
      auto arity = sig.relation_arity(f.name());
      if (!arity) throw SignatureError("undeclared relation '" + f.name() + "'");
      if (static_cast<std::size_t>(*arity) != f.terms().size())
        throw SignatureError("relation '" + f.name() + "' expects " +
                             std::to_string(*arity) + " arguments, got " +
                             std::to_string(f.terms().size()));
      for (const auto& t : f.terms()) check_signature(t, sig);
      return;
    }
    case Formula::Kind::Not:
      check_signature(f.body(), sig);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      check_signature(f.lhs(), sig);
      check_signature(f.rhs(), sig);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      if (sig.declares(f.name()))
        throw SignatureError("bound variable '" + f.name() + "' clashes with a symbol");
      check_signature(f.body(), sig);
      return;
  }
}

namespace {

void collect_symbols(const Term& t, std::set<std::string>& fns) {
  if (t.is_apply()) fns.insert(t.name());
  for (const auto& a : t.args()) collect_symbols(a, fns);
}

void collect_symbols(const Formula& f, std::set<std::string>* rels,
                     std::set<std::string>* fns) {
  if (f.is_atomic()) {
    if (rels && f.kind() == Formula::Kind::Relation) rels->insert(f.name());
    if (fns)
      for (const auto& t : f.terms()) collect_symbols(t, *fns);
    return;
  }
  if (f.is_binary()) {
    collect_symbols(f.lhs(), rels, fns);
    collect_symbols(f.rhs(), rels, fns);
  } else {
    collect_symbols(f.body(), rels, fns);
  }
}

}  // namespace

std::set<std::string> relation_symbols(const Formula& f) {
  std::set<std::string> out;
  collect_symbols(f, &out, nullptr);
  return out;
}

std::set<std::string> function_symbols(const Formula& f) {
  std::set<std::string> out;
  collect_symbols(f, nullptr, &out);
  return out;
}

}  // namespace metalogic
