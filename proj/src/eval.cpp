#include "metalogic/eval.hpp"

#include <unordered_map>
#include <variant>

namespace metalogic {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

Natural eval_term(const Term& t, const NatAssignment& asn, const NatExpansion& ex) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = asn.find(t.name());
      if (it == asn.end()) throw EvalError("unbound variable '" + t.name() + "'");
      return it->second;
    }
    case Term::Kind::Constant:
      if (t.name() == core::kZero) return 0;
      if (t.name() == core::kOne) return 1;
      if (auto it = ex.functions.find(t.name()); it != ex.functions.end()) return it->second({});
      throw EvalError("uninterpreted constant '" + t.name() + "'");
    case Term::Kind::Apply: {
      std::vector<Natural> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(eval_term(a, asn, ex));
      if (args.size() == 2 && t.name() == core::kPlus) return args[0] + args[1];
      if (args.size() == 2 && t.name() == core::kTimes) return args[0] * args[1];
      if (auto it = ex.functions.find(t.name()); it != ex.functions.end()) return it->second(args);
      throw EvalError("uninterpreted function '" + t.name() + "'");
    }
  }
  return 0;
}

std::optional<BoundedShape> bounded_shape(const Formula& f) {
  auto guard = [&](const Formula& g) -> std::optional<Term> {
    if (g.kind() != Formula::Kind::Relation || g.name() != core::kLess || g.terms().size() != 2)
      return std::nullopt;
    const Term& x = g.terms()[0];
    if (!x.is_variable() || x.name() != f.name()) return std::nullopt;
    if (free_vars(g.terms()[1]).count(f.name())) return std::nullopt;
    return g.terms()[1];
  };
  if (f.kind() == Formula::Kind::Exists && f.body().kind() == Formula::Kind::And) {
    if (auto t = guard(f.body().lhs())) return BoundedShape{f.name(), *t, f.body().rhs()};
  }
  if (f.kind() == Formula::Kind::Forall && f.body().kind() == Formula::Kind::Or &&
      f.body().lhs().kind() == Formula::Kind::Not) {
    if (auto t = guard(f.body().lhs().body())) return BoundedShape{f.name(), *t, f.body().rhs()};
  }
  return std::nullopt;
}

bool all_quantifiers_bounded(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation:
      return true;
    case Formula::Kind::Not:
      return all_quantifiers_bounded(f.body());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return all_quantifiers_bounded(f.lhs()) && all_quantifiers_bounded(f.rhs());
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      auto s = bounded_shape(f);
      return s && all_quantifiers_bounded(s->body);
    }
  }
  return false;
}

Formula bounded_exists(const std::string& var, const Term& bound, const Formula& body) {
  return Formula::exists(
      var, Formula::conjunction(
               Formula::relation(std::string(core::kLess), {Term::variable(var), bound}), body));
}

Formula bounded_forall(const std::string& var, const Term& bound, const Formula& body) {
  return Formula::forall(
      var, Formula::disjunction(Formula::negation(Formula::relation(
                                    std::string(core::kLess), {Term::variable(var), bound})),
                                body));
}

namespace {

class NatEvaluator {
 public:
  NatEvaluator(NatAssignment asn, const EvalBudget& b, const NatExpansion& ex)
      : asn_(std::move(asn)), budget_(b), ex_(ex) {}

  Truth run(const Formula& f, std::size_t depth) {
    if (depth > budget_.max_depth) return Truth::Unknown;
    switch (f.kind()) {
      case Formula::Kind::Equal:
        return truth_of(eval_term(f.terms()[0], asn_, ex_) == eval_term(f.terms()[1], asn_, ex_));
      case Formula::Kind::Relation: {
        std::vector<Natural> args;
        for (const auto& t : f.terms()) args.push_back(eval_term(t, asn_, ex_));
        if (f.name() == core::kLess && args.size() == 2) return truth_of(args[0] < args[1]);
        auto it = ex_.relations.find(f.name());
        if (it == ex_.relations.end())
          throw EvalError("uninterpreted relation '" + f.name() + "'");
        return truth_of(it->second(args));
      }
      case Formula::Kind::Not: {
        Truth t = run(f.body(), depth + 1);
        return t == Truth::Unknown ? t : truth_of(t == Truth::False);
      }
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        const Truth dominant = f.kind() == Formula::Kind::And ? Truth::False : Truth::True;
        Truth a = run(f.lhs(), depth + 1);
        if (a == dominant) return a;
        Truth b = run(f.rhs(), depth + 1);
        if (b == dominant) return b;
        if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
        return a;
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        return quantifier(f, depth);
    }
    return Truth::Unknown;
  }

 private:
  Truth quantifier(const Formula& f, std::size_t depth) {
    const bool ex = f.kind() == Formula::Kind::Exists;
    const Truth dominant = ex ? Truth::True : Truth::False;
    const Truth recessive = ex ? Truth::False : Truth::True;
    auto shape = bounded_shape(f);
    Natural limit;
    bool complete = false;
    const Formula* body = &f.body();
    if (shape) {
      Natural bound = eval_term(shape->bound, asn_, ex_);
      body = &shape->body;
      complete = bound <= budget_.bounded_cap;
      limit = complete ? bound : Natural(budget_.bounded_cap);
    } else {
      limit = budget_.search_bound;
    }
    const std::string& var = f.name();
    auto saved = asn_.find(var) != asn_.end() ? std::optional<Natural>(asn_[var]) : std::nullopt;
    bool unknown = false;
    Truth result = Truth::Unknown;
    for (Natural i = 0; i < limit; ++i) {
      asn_[var] = i;
      Truth t = run(*body, depth + 1);
      if (t == dominant) {
        result = dominant;
        break;
      }
      if (t == Truth::Unknown) unknown = true;
    }
    if (saved) asn_[var] = *saved;
    else asn_.erase(var);
    if (result == dominant) return result;
    if (complete && !unknown) return recessive;
    return Truth::Unknown;
  }

  NatAssignment asn_;
  const EvalBudget& budget_;
  const NatExpansion& ex_;
};

}  // namespace

NatVerdict eval_nat(const Formula& f, const NatAssignment& asn, const EvalBudget& budget,
                    const NatExpansion& ex) {
  for (const auto& v : free_vars(f))
    if (!asn.count(v)) throw EvalError("unbound variable '" + v + "'");
  NatEvaluator ev(asn, budget, ex);
  NatVerdict out;
  out.value = ev.run(f, 0);
  out.exact = out.value != Truth::Unknown && all_quantifiers_bounded(f);
  return out;
}

namespace {

using Value = std::variant<int, Natural>;

class FiniteEvaluator {
 public:
  FiniteEvaluator(const FiniteModel& m, FiniteAssignment asn) : m_(m), asn_(std::move(asn)) {}

  Value term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        auto it = asn_.find(t.name());
        if (it == asn_.end()) throw EvalError("unbound variable '" + t.name() + "'");
        return it->second;
      }
      case Term::Kind::Constant: {
        if (auto it = m_.constants.find(t.name()); it != m_.constants.end()) return it->second;
        if (t.name() == core::kZero) return Natural(0);
        if (t.name() == core::kOne) return Natural(1);
        throw EvalError("model does not interpret constant '" + t.name() + "'");
      }
      case Term::Kind::Apply: {
        // code-valued terms are closed, so their value never changes
        if (auto it = codes_.find(t.id()); it != codes_.end()) return it->second;
        std::vector<Value> args;
        for (const auto& a : t.args()) args.push_back(term(a));
        if (auto it = m_.functions.find(t.name()); it != m_.functions.end()) {
          std::vector<int> key;
          for (const auto& a : args) key.push_back(element(a, t.name()));
          auto row = it->second.find(key);
          if (row == it->second.end())
            throw EvalError("function '" + t.name() + "' applied with wrong arity");
          return row->second;
        }
        const bool plus = t.name() == core::kPlus, times = t.name() == core::kTimes;
        if ((plus || times) && args.size() == 2) {
          const auto* a = std::get_if<Natural>(&args[0]);
          const auto* b = std::get_if<Natural>(&args[1]);
          if (!a || !b) throw EvalError("code arithmetic applied to a model element");
          Natural v = plus ? Natural(*a + *b) : Natural(*a * *b);
          codes_.emplace(t.id(), v);
          return v;
        }
        throw EvalError("model does not interpret function '" + t.name() + "'");
      }
    }
    return 0;
  }

  bool run(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Equal: {
        Value a = term(f.terms()[0]), b = term(f.terms()[1]);
        if (a.index() != b.index()) throw EvalError("equality between a code and an element");
        return a == b;
      }
      case Formula::Kind::Relation: {
        if (auto it = m_.relations.find(f.name()); it != m_.relations.end()) {
          if (static_cast<int>(f.terms().size()) != m_.relation_arity.at(f.name()))
            throw EvalError("relation '" + f.name() + "' used with wrong arity");
          std::vector<int> key;
          for (const auto& t : f.terms()) key.push_back(element(term(t), f.name()));
          return it->second.count(key) > 0;
        }
        if (auto it = m_.coded.find(f.name()); it != m_.coded.end()) {
          if (f.terms().empty() ||
              static_cast<int>(f.terms().size()) != m_.coded_arity.at(f.name()))
            throw EvalError("coded relation '" + f.name() + "' used with wrong arity");
          Value c = term(f.terms()[0]);
          const auto* code = std::get_if<Natural>(&c);
          if (!code) throw EvalError("first slot of '" + f.name() + "' must be a code");
          std::vector<int> key;
          for (std::size_t i = 1; i < f.terms().size(); ++i)
            key.push_back(element(term(f.terms()[i]), f.name()));
          return it->second.count({*code, key}) > 0;
        }
        throw EvalError("model does not interpret relation '" + f.name() + "'");
      }
      case Formula::Kind::Not:
        return !run(f.body());
      case Formula::Kind::And:
        return run(f.lhs()) && run(f.rhs());
      case Formula::Kind::Or:
        return run(f.lhs()) || run(f.rhs());
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        const bool ex = f.kind() == Formula::Kind::Exists;
        const std::string& v = f.name();
        auto it = asn_.find(v);
        std::optional<int> saved = it != asn_.end() ? std::optional<int>(it->second) : std::nullopt;
        bool result = !ex;
        for (int e = 0; e < m_.size(); ++e) {
          asn_[v] = e;
          if (run(f.body()) == ex) {
            result = ex;
            break;
          }
        }
        if (saved) asn_[v] = *saved;
        else asn_.erase(v);
        return result;
      }
    }
    return false;
  }

 private:
  static int element(const Value& v, const std::string& where) {
    if (const int* e = std::get_if<int>(&v)) return *e;
    throw EvalError("a code appears where '" + where + "' expects an element");
  }

  const FiniteModel& m_;
  FiniteAssignment asn_;
  std::unordered_map<const void*, Natural> codes_;
};

}  // namespace

bool eval_finite(const Formula& f, const FiniteModel& m, const FiniteAssignment& asn) {
  for (const auto& v : free_vars(f)) {
    auto it = asn.find(v);
    if (it == asn.end()) throw EvalError("unbound variable '" + v + "'");
    if (it->second < 0 || it->second >= m.size())
      throw EvalError("assignment of '" + v + "' is outside the universe");
  }
  FiniteEvaluator ev(m, asn);
  return ev.run(f);
}

}  // namespace metalogic
