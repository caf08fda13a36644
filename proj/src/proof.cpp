#include "metalogic/proof.hpp"

#include <algorithm>
#include <set>

#include "metalogic/sexpr.hpp"

namespace metalogic {

namespace {

struct Imp {
  const Formula* a;
  const Formula* b;
};

std::optional<Imp> as_implication(const Formula& f) {
  if (f.kind() != Formula::Kind::Or || f.lhs().kind() != Formula::Kind::Not) return std::nullopt;
  return Imp{&f.lhs().body(), &f.rhs()};
}

bool same(const Formula& a, const Formula& b) { return alpha_equal(a, b); }

struct Fail {
  std::string reason;
};

Imp need_imp(const Formula& f, const char* what) {
  auto i = as_implication(f);
  if (!i) throw Fail{std::string(what) + " is not an implication"};
  return *i;
}

void need(bool ok, const std::string& reason) {
  if (!ok) throw Fail{reason};
}

// Walks A and B in parallel; where A has a free x, B must have the term t.
class InstanceMatcher {
 public:
  InstanceMatcher(std::string x, std::optional<Term> t) : x_(std::move(x)), t_(std::move(t)) {}

  void formula(const Formula& a, const Formula& b, std::vector<std::string>& bound) {
    need(a.kind() == b.kind(), "instance does not match the scheme");
    switch (a.kind()) {
      case Formula::Kind::Equal:
      case Formula::Kind::Relation:
        need(a.name() == b.name() && a.terms().size() == b.terms().size(),
             "instance does not match the scheme");
        for (std::size_t i = 0; i < a.terms().size(); ++i) term(a.terms()[i], b.terms()[i], bound);
        return;
      case Formula::Kind::Not:
        formula(a.body(), b.body(), bound);
        return;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        formula(a.lhs(), b.lhs(), bound);
        formula(a.rhs(), b.rhs(), bound);
        return;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        need(a.name() == b.name(), "instance renames a bound variable");
        bound.push_back(a.name());
        formula(a.body(), b.body(), bound);
        bound.pop_back();
        return;
    }
  }

 private:
  void term(const Term& a, const Term& b, const std::vector<std::string>& bound) {
    if (a.is_variable() && a.name() == x_ &&
        std::find(bound.begin(), bound.end(), x_) == bound.end()) {
      if (!t_) t_ = b;
      need(*t_ == b, "inconsistent instantiating term");
      for (const auto& v : free_vars(*t_))
        need(std::find(bound.begin(), bound.end(), v) == bound.end(),
             "variable capture: '" + v + "' would be bound");
      return;
    }
    need(a.kind() == b.kind() && a.name() == b.name() && a.args().size() == b.args().size(),
         "instance does not match the scheme");
    for (std::size_t i = 0; i < a.args().size(); ++i) term(a.args()[i], b.args()[i], bound);
  }

  std::string x_;
  std::optional<Term> t_;
};

void instance_of(const Formula& a, const std::string& x, const Formula& b,
                 const std::optional<Term>& t) {
  InstanceMatcher m(x, t);
  std::vector<std::string> bound;
  m.formula(a, b, bound);
}

bool replaces(const Term& a, const Term& b, const Term& s, const Term& t) {
  if (a == b) return true;
  if (a == s && b == t) return true;
  if (!a.is_apply() || !b.is_apply() || a.name() != b.name() || a.args().size() != b.args().size())
    return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!replaces(a.args()[i], b.args()[i], s, t)) return false;
  return true;
}

void check_scheme_or_throw(const std::string& id, const Formula& f, const std::optional<Term>& term) {
  if (id == "K") {
    auto o = need_imp(f, "K");
    auto i = need_imp(*o.b, "K consequent");
    need(same(*i.b, *o.a), "K: inner consequent differs from antecedent");
  } else if (id == "S") {
    auto o = need_imp(f, "S");
    auto l = need_imp(*o.a, "S antecedent");
    auto lbc = need_imp(*l.b, "S antecedent");
    auto r = need_imp(*o.b, "S consequent");
    auto rab = need_imp(*r.a, "S consequent");
    auto rac = need_imp(*r.b, "S consequent");
    need(same(*l.a, *rab.a) && same(*l.a, *rac.a), "S: A differs between positions");
    need(same(*lbc.a, *rab.b), "S: B differs between positions");
    need(same(*lbc.b, *rac.b), "S: C differs between positions");
  } else if (id == "N") {
    auto o = need_imp(f, "N");
    auto l = need_imp(*o.a, "N antecedent");
    auto r = need_imp(*o.b, "N consequent");
    auto r2 = need_imp(*r.a, "N consequent");
    need(l.a->kind() == Formula::Kind::Not && l.b->kind() == Formula::Kind::Not, "N: expected negations");
    const Formula& B = l.a->body();
    const Formula& A = l.b->body();
    need(same(*r2.a, *l.a) && same(*r2.b, A) && same(*r.b, B), "N: components differ");
  } else if (id == "DN") {
    auto o = need_imp(f, "DN");
    need(o.a->kind() == Formula::Kind::Not && o.a->body().kind() == Formula::Kind::Not &&
             same(o.a->body().body(), *o.b),
         "DN: expected not not A -> A");
  } else if (id == "OR1" || id == "OR2") {
    auto o = need_imp(f, id.c_str());
    need(o.b->kind() == Formula::Kind::Or, id + ": consequent is not a disjunction");
    need(same(*o.a, id == "OR1" ? o.b->lhs() : o.b->rhs()), id + ": disjunct differs");
  } else if (id == "OR3") {
    auto o = need_imp(f, "OR3");
    auto ac = need_imp(*o.a, "OR3");
    auto r = need_imp(*o.b, "OR3");
    auto bc = need_imp(*r.a, "OR3");
    auto orc = need_imp(*r.b, "OR3");
    need(orc.a->kind() == Formula::Kind::Or, "OR3: expected a disjunction");
    need(same(orc.a->lhs(), *ac.a) && same(orc.a->rhs(), *bc.a), "OR3: disjuncts differ");
    need(same(*ac.b, *bc.b) && same(*ac.b, *orc.b), "OR3: C differs between positions");
  } else if (id == "AND1" || id == "AND2") {
    auto o = need_imp(f, id.c_str());
    need(o.a->kind() == Formula::Kind::And, id + ": antecedent is not a conjunction");
    need(same(*o.b, id == "AND1" ? o.a->lhs() : o.a->rhs()), id + ": conjunct differs");
  } else if (id == "AND3") {
    auto o = need_imp(f, "AND3");
    auto i = need_imp(*o.b, "AND3");
    need(i.b->kind() == Formula::Kind::And && same(i.b->lhs(), *o.a) && same(i.b->rhs(), *i.a),
         "AND3: conjunction differs");
  } else if (id == "ALL-INST") {
    auto o = need_imp(f, "ALL-INST");
    need(o.a->kind() == Formula::Kind::Forall, "ALL-INST: antecedent is not universal");
    instance_of(o.a->body(), o.a->name(), *o.b, term);
  } else if (id == "EX-INTRO") {
    auto o = need_imp(f, "EX-INTRO");
    need(o.b->kind() == Formula::Kind::Exists, "EX-INTRO: consequent is not existential");
    instance_of(o.b->body(), o.b->name(), *o.a, term);
  } else if (id == "ALL-DIST") {
    auto o = need_imp(f, "ALL-DIST");
    need(o.a->kind() == Formula::Kind::Forall, "ALL-DIST: antecedent is not universal");
    const std::string& x = o.a->name();
    auto ab = need_imp(o.a->body(), "ALL-DIST body");
    auto r = need_imp(*o.b, "ALL-DIST consequent");
    need(same(*r.a, *ab.a), "ALL-DIST: A differs");
    need(r.b->kind() == Formula::Kind::Forall && r.b->name() == x && same(r.b->body(), *ab.b),
         "ALL-DIST: forall x B differs");
    need(!free_vars(*ab.a).count(x), "ALL-DIST: '" + x + "' is free in A");
  } else if (id == "EX-ELIM") {
    auto o = need_imp(f, "EX-ELIM");
    need(o.a->kind() == Formula::Kind::Forall, "EX-ELIM: antecedent is not universal");
    const std::string& x = o.a->name();
    auto ab = need_imp(o.a->body(), "EX-ELIM body");
    auto r = need_imp(*o.b, "EX-ELIM consequent");
    need(r.a->kind() == Formula::Kind::Exists && r.a->name() == x && same(r.a->body(), *ab.a),
         "EX-ELIM: exists x A differs");
    need(same(*r.b, *ab.b), "EX-ELIM: B differs");
    need(!free_vars(*ab.b).count(x), "EX-ELIM: '" + x + "' is free in B");
  } else if (id == "EQ-REFL") {
    need(f.kind() == Formula::Kind::Equal && f.terms()[0] == f.terms()[1], "EQ-REFL: expected t = t");
  } else if (id == "EQ-SUB") {
    auto o = need_imp(f, "EQ-SUB");
    need(o.a->kind() == Formula::Kind::Equal, "EQ-SUB: antecedent is not an equation");
    auto i = need_imp(*o.b, "EQ-SUB consequent");
    const Formula& A = *i.a;
    const Formula& B = *i.b;
    need(A.is_atomic() && B.is_atomic() && A.kind() == B.kind() && A.name() == B.name() &&
             A.terms().size() == B.terms().size(),
         "EQ-SUB: expected matching atoms");
    const Term& s = o.a->terms()[0];
    const Term& t = o.a->terms()[1];
    for (std::size_t k = 0; k < A.terms().size(); ++k)
      need(replaces(A.terms()[k], B.terms()[k], s, t), "EQ-SUB: not a replacement of s by t");
  } else {
    throw Fail{"unknown scheme '" + id + "'"};
  }
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::Premise: return "premise";
    case Rule::ModusPonens: return "mp";
    case Rule::Generalization: return "gen";
  }
  return "axiom";
}

}  // namespace

const std::vector<std::string>& scheme_ids() {
  static const std::vector<std::string> ids{"K",    "S",    "N",        "DN",       "OR1",
                                            "OR2",  "OR3",  "AND1",     "AND2",     "AND3",
                                            "ALL-INST", "EX-INTRO", "ALL-DIST", "EX-ELIM",
                                            "EQ-REFL",  "EQ-SUB"};
  return ids;
}

std::string check_scheme(const std::string& scheme, const Formula& f, const std::optional<Term>& term) {
  try {
    check_scheme_or_throw(scheme, f, term);
  } catch (const Fail& e) {
    return e.reason;
  }
  return {};
}

ProofVerdict check_proof(const Proof& p, const std::vector<Formula>& premises) {
  // Indices (0-based) of premise lines each line rests on.
  std::vector<std::set<std::size_t>> deps;
  auto fail = [](std::size_t line, std::string reason) {
    return ProofVerdict{false, line, std::move(reason)};
  };
  if (p.lines.empty()) return ProofVerdict{false, std::nullopt, "empty proof"};
  for (std::size_t n = 0; n < p.lines.size(); ++n) {
    const ProofLine& l = p.lines[n];
    const std::size_t num = n + 1;
    try {
      check_signature(l.formula, p.signature);
    } catch (const SignatureError& e) {
      return fail(num, e.what());
    }
    for (std::size_t r : l.refs)
      if (r < 1 || r >= num) return fail(num, "reference " + std::to_string(r) + " is not an earlier line");
    std::set<std::size_t> d;
    switch (l.rule) {
      case Rule::Axiom: {
        std::string why = check_scheme(l.scheme, l.formula, l.term);
        if (!why.empty()) return fail(num, why);
        break;
      }
      case Rule::Premise: {
        bool found = std::any_of(premises.begin(), premises.end(),
                                 [&](const Formula& q) { return alpha_equal(q, l.formula); });
        if (!found) return fail(num, "not among the premises");
        d.insert(n);
        break;
      }
      case Rule::ModusPonens: {
        if (l.refs.size() != 2) return fail(num, "mp needs two references");
        const Formula& a = p.lines[l.refs[0] - 1].formula;
        const Formula& imp = p.lines[l.refs[1] - 1].formula;
        auto i = as_implication(imp);
        if (!i) return fail(num, "second reference is not an implication");
        if (!alpha_equal(*i->a, a)) return fail(num, "antecedent does not match first reference");
        if (!alpha_equal(*i->b, l.formula)) return fail(num, "line is not the consequent");
        d = deps[l.refs[0] - 1];
        d.insert(deps[l.refs[1] - 1].begin(), deps[l.refs[1] - 1].end());
        break;
      }
      case Rule::Generalization: {
        if (l.refs.size() != 1) return fail(num, "gen needs one reference");
        if (l.formula.kind() != Formula::Kind::Forall || l.formula.name() != l.var)
          return fail(num, "line is not forall " + l.var + " of the reference");
        if (!alpha_equal(l.formula.body(), p.lines[l.refs[0] - 1].formula))
          return fail(num, "body differs from the reference");
        d = deps[l.refs[0] - 1];
        for (std::size_t q : d)
          if (free_vars(p.lines[q].formula).count(l.var))
            return fail(num, "eigenvariable '" + l.var + "' is free in premise line " + std::to_string(q + 1));
        break;
      }
    }
    deps.push_back(std::move(d));
  }
  return ProofVerdict{true, std::nullopt, ""};
}

Proof proof_from_json(const Json& j) {
  Proof p;
  try {
    if (j.contains("signature")) p.signature = signature_from_json(j.at("signature"));
    for (const auto& l : j.at("lines")) {
      const std::string rule = l.at("rule").get<std::string>();
      ProofLine line{parse_formula(l.at("formula").get<std::string>(), p.signature), Rule::Axiom, {}, {}, {}, std::nullopt};
      if (rule == "axiom") line.rule = Rule::Axiom;
      else if (rule == "premise") line.rule = Rule::Premise;
      else if (rule == "mp") line.rule = Rule::ModusPonens;
      else if (rule == "gen") line.rule = Rule::Generalization;
      else throw ProofError("unknown rule '" + rule + "'");
      line.scheme = l.value("scheme", "");
      if (l.contains("refs")) line.refs = l.at("refs").get<std::vector<std::size_t>>();
      line.var = l.value("var", "");
      if (l.contains("term")) line.term = parse_term(l.at("term").get<std::string>(), p.signature);
      p.lines.push_back(std::move(line));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ProofError(std::string("malformed proof: ") + e.what());
  }
  return p;
}

Json to_json(const Proof& p) {
  Json lines = Json::array();
  for (const auto& l : p.lines) {
    Json o{{"formula", render(l.formula)}, {"rule", rule_name(l.rule)}};
    if (!l.scheme.empty()) o["scheme"] = l.scheme;
    if (!l.refs.empty()) o["refs"] = l.refs;
    if (!l.var.empty()) o["var"] = l.var;
    if (l.term) o["term"] = render(*l.term);
    lines.push_back(std::move(o));
  }
  return Json{{"signature", to_json(p.signature)}, {"lines", std::move(lines)}};
}

Json to_json(const ProofVerdict& v) {
  Json j{{"valid", v.valid}};
  if (v.line) j["line"] = *v.line;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

}  // namespace metalogic
