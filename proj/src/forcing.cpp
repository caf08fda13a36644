#include "metalogic/forcing.hpp"

#include <algorithm>

#include "metalogic/eval.hpp"
#include "metalogic/sexpr.hpp"

namespace metalogic {

Signature set_signature() {
  return Signature::arithmetic_core().with_relation(std::string(kSetVariable), 1);
}

std::string to_string(const Condition& s) {
  std::string out;
  for (bool b : s) out += b ? '1' : '0';
  return out;
}

Condition parse_condition(std::string_view text) {
  Condition s;
  for (char c : text) {
    if (c != '0' && c != '1') throw ForcingError("a condition is a string of 0 and 1");
    s.push_back(c == '1');
  }
  return s;
}

bool extends(const Condition& t, const Condition& s) {
  return t.size() >= s.size() && std::equal(s.begin(), s.end(), t.begin());
}

bool length_lex_less(const Condition& a, const Condition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const char* to_string(Forcing f) {
  switch (f) {
    case Forcing::Forced: return "forced";
    case Forcing::NotForced: return "not-forced";
    case Forcing::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool is_membership(const Formula& f) {
  return f.kind() == Formula::Kind::Relation && f.name() == kSetVariable && f.terms().size() == 1;
}

using Bounds = std::map<std::string, Natural>;

std::optional<Natural> term_max(const Term& t, const Bounds& vmax) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = vmax.find(t.name());
      if (it == vmax.end()) return std::nullopt;
      return it->second;
    }
    case Term::Kind::Constant:
      return eval_term(t);
    case Term::Kind::Apply: {
      std::vector<Natural> args;
      for (const auto& a : t.args()) {
        auto m = term_max(a, vmax);
        if (!m) return std::nullopt;
        args.push_back(*m);
      }
      if (t.name() == core::kPlus) return args.at(0) + args.at(1);
      if (t.name() == core::kTimes) return args.at(0) * args.at(1);
      throw ForcingError("unknown function '" + t.name() + "' in a set formula");
    }
  }
  return std::nullopt;
}

std::optional<Natural> bound_impl(const Formula& f, Bounds& vmax) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      return Natural(0);
    case Formula::Kind::Relation: {
      if (!is_membership(f)) return Natural(0);
      auto m = term_max(f.terms()[0], vmax);
      if (!m) return std::nullopt;
      return *m + 1;
    }
    case Formula::Kind::Not:
      return bound_impl(f.body(), vmax);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      auto a = bound_impl(f.lhs(), vmax);
      auto b = bound_impl(f.rhs(), vmax);
      if (!a || !b) return std::nullopt;
      return std::max(*a, *b);
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      auto shape = bounded_shape(f);
      if (!shape) return std::nullopt;
      auto top = term_max(shape->bound, vmax);
      if (!top) return std::nullopt;
      auto saved = vmax.find(f.name()) != vmax.end() ? std::optional<Natural>(vmax[f.name()])
                                                    : std::nullopt;
      vmax[f.name()] = *top > 0 ? Natural(*top - 1) : Natural(0);
      auto r = bound_impl(shape->body, vmax);
      if (saved) vmax[f.name()] = *saved;
      else vmax.erase(f.name());
      return r;
    }
  }
  return std::nullopt;
}

// In normal form a bounded quantifier reads exists x not (not (x < t) or chi).
struct NormalBound {
  Term bound;
  const Formula* rest;
};

std::optional<NormalBound> normal_bound(const Formula& f) {
  if (f.kind() != Formula::Kind::Exists) return std::nullopt;
  const Formula& b = f.body();
  if (b.kind() != Formula::Kind::Not || b.body().kind() != Formula::Kind::Or) return std::nullopt;
  const Formula& g = b.body().lhs();
  if (g.kind() != Formula::Kind::Not) return std::nullopt;
  const Formula& lt = g.body();
  if (lt.kind() != Formula::Kind::Relation || lt.name() != core::kLess || lt.terms().size() != 2)
    return std::nullopt;
  if (!lt.terms()[0].is_variable() || lt.terms()[0].name() != f.name()) return std::nullopt;
  if (free_vars(lt.terms()[1]).count(f.name())) return std::nullopt;
  return NormalBound{lt.terms()[1], &b.body().rhs()};
}

Condition with_suffix(const Condition& s, std::size_t len, unsigned long long bits) {
  Condition t = s;
  const std::size_t extra = len - s.size();
  for (std::size_t i = 0; i < extra; ++i) t.push_back((bits >> (extra - 1 - i)) & 1u);
  return t;
}

class Forcer {
 public:
  Forcer(std::optional<ForcingBudget> budget, Natural global_bound)
      : budget_(budget), global_(std::move(global_bound)) {}

  Forcing run(const Condition& s, const Formula& f, NatAssignment& asn) {
    switch (f.kind()) {
      case Formula::Kind::Equal:
        return eval_term(f.terms()[0], asn) == eval_term(f.terms()[1], asn) ? Forcing::Forced
                                                                             : Forcing::NotForced;
      case Formula::Kind::Relation: {
        if (is_membership(f)) {
          Natural n = eval_term(f.terms()[0], asn);
          return n < s.size() && s[static_cast<std::size_t>(n)] ? Forcing::Forced
                                                                : Forcing::NotForced;
        }
        if (f.name() == core::kLess && f.terms().size() == 2)
          return eval_term(f.terms()[0], asn) < eval_term(f.terms()[1], asn) ? Forcing::Forced
                                                                             : Forcing::NotForced;
        throw ForcingError("unknown relation '" + f.name() + "' in a set formula");
      }
      case Formula::Kind::Or: {
        Forcing a = run(s, f.lhs(), asn);
        if (a == Forcing::Forced) return a;
        Forcing b = run(s, f.rhs(), asn);
        if (b == Forcing::Forced) return b;
        return a == Forcing::Unknown || b == Forcing::Unknown ? Forcing::Unknown
                                                              : Forcing::NotForced;
      }
      case Formula::Kind::Not:
        return negation(s, f.body(), asn);
      case Formula::Kind::Exists:
        return existential(s, f, asn);
      default:
        throw ForcingError("formula is not in forcing normal form");
    }
  }

 private:
  // s forces (not psi) iff no extension of s forces psi. Extensions of one
  // length L >= the bit bound suffice: longer ones decide psi like their
  // truncation, shorter ones are covered by monotonicity.
  Forcing negation(const Condition& s, const Formula& psi, NatAssignment& asn) {
    std::optional<Natural> local;
    if (budget_) {
      Bounds vmax(asn.begin(), asn.end());
      local = bound_impl(psi, vmax);
    } else {
      local = global_;
    }
    std::size_t lo = s.size(), hi = s.size();
    bool exact = local.has_value();
    if (exact) {
      if (*local > 64) throw ForcingError("bit bound too large for exhaustive extension search");
      hi = std::max(s.size(), static_cast<std::size_t>(*local));
      lo = hi;
    } else {
      hi = s.size() + budget_->extension_bits;
    }
    if (hi - s.size() > 24) throw ForcingError("too many extension bits");
    bool unknown = false;
    for (std::size_t len = lo; len <= hi; ++len) {
      const unsigned long long count = 1ull << (len - s.size());
      for (unsigned long long bits = 0; bits < count; ++bits) {
        Forcing r = run(with_suffix(s, len, bits), psi, asn);
        if (r == Forcing::Forced) return Forcing::NotForced;
        if (r == Forcing::Unknown) unknown = true;
      }
    }
    if (exact && !unknown) return Forcing::Forced;
    return Forcing::Unknown;
  }

  Forcing existential(const Condition& s, const Formula& f, NatAssignment& asn) {
    auto nb = normal_bound(f);
    Natural limit;
    bool complete;
    if (nb) {
      limit = eval_term(nb->bound, asn);
      complete = true;
    } else {
      if (!budget_) throw ForcingError("unbounded quantifier in exact mode");
      limit = budget_->witnesses;
      complete = false;
    }
    const std::string& v = f.name();
    auto saved = asn.count(v) ? std::optional<Natural>(asn[v]) : std::nullopt;
    Forcing result = complete ? Forcing::NotForced : Forcing::Unknown;
    bool unknown = false;
    for (Natural n = 0; n < limit; ++n) {
      asn[v] = n;
      Forcing r = run(s, f.body(), asn);
      if (r == Forcing::Forced) {
        result = Forcing::Forced;
        break;
      }
      if (r == Forcing::Unknown) unknown = true;
    }
    if (saved) asn[v] = *saved;
    else asn.erase(v);
    if (result == Forcing::NotForced && unknown) return Forcing::Unknown;
    return result;
  }

  std::optional<ForcingBudget> budget_;
  Natural global_;
};

}  // namespace

std::optional<Natural> bit_bound(const Formula& f) {
  Bounds vmax;
  return bound_impl(f, vmax);
}

Formula forcing_normal_form(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(forcing_normal_form(f.body()));
    case Formula::Kind::Or:
      return Formula::disjunction(forcing_normal_form(f.lhs()), forcing_normal_form(f.rhs()));
    case Formula::Kind::And:
      return Formula::negation(Formula::disjunction(Formula::negation(forcing_normal_form(f.lhs())),
                                                    Formula::negation(forcing_normal_form(f.rhs()))));
    case Formula::Kind::Exists:
      return Formula::exists(f.name(), forcing_normal_form(f.body()));
    case Formula::Kind::Forall:
      return Formula::negation(
          Formula::exists(f.name(), Formula::negation(forcing_normal_form(f.body()))));
  }
  return f;
}

namespace {

void require_set_sentence(const Formula& f) {
  if (!is_sentence(f)) throw ForcingError("set formula must be a sentence");
  try {
    check_signature(f, set_signature());
  } catch (const SignatureError& e) {
    throw ForcingError(e.what());
  }
}

}  // namespace

Forcing forces(const Condition& s, const Formula& f) {
  require_set_sentence(f);
  auto b = bit_bound(f);
  if (!b) throw ForcingError("formula is not bit-bounded; use budget mode");
  Forcer forcer(std::nullopt, *b);
  NatAssignment asn;
  return forcer.run(s, forcing_normal_form(f), asn);
}

Forcing forces_budget(const Condition& s, const Formula& f, const ForcingBudget& budget) {
  require_set_sentence(f);
  Forcer forcer(budget, 0);
  NatAssignment asn;
  return forcer.run(s, forcing_normal_form(f), asn);
}

StageTrace build_generic(std::size_t stages, const std::vector<Formula>& phis,
                         const std::vector<Formula>& xis, const TruthFunction& truth) {
  StageTrace trace;
  Condition cur;
  for (std::size_t j = 0; j < stages; ++j) {
    Stage st;
    st.index = j;
    st.k = j / 2;
    st.even = j % 2 == 0;
    st.before = cur;
    if (st.even) {
      if (st.k >= phis.size()) throw ForcingError("stage " + std::to_string(j) + " needs phi_" + std::to_string(st.k));
      const Formula& phi = phis[st.k];
      auto b = bit_bound(phi);
      if (!b) throw ForcingError("phi_" + std::to_string(st.k) + " is not bit-bounded");
      const std::size_t top = std::max(cur.size() + 1, static_cast<std::size_t>(*b));
      if (top - cur.size() > 24) throw ForcingError("extension search too large");
      std::optional<Condition> chosen;
      for (std::size_t len = cur.size() + 1; len <= top && !chosen; ++len) {
        const unsigned long long count = 1ull << (len - cur.size());
        for (unsigned long long bits = 0; bits < count; ++bits) {
          Condition t = with_suffix(cur, len, bits);
          if (forces(t, phi) == Forcing::Forced) {
            chosen = std::move(t);
            break;
          }
        }
      }
      if (chosen) {
        cur = *chosen;
        st.justification = "forced";
      } else {
        st.justification = "no extension forces";
      }
    } else {
      if (st.k >= xis.size()) throw ForcingError("stage " + std::to_string(j) + " needs xi_" + std::to_string(st.k));
      cur.push_back(truth(xis[st.k]));
      st.justification = "truth bit";
    }
    st.after = cur;
    trace.stages.push_back(std::move(st));
  }
  return trace;
}

std::vector<bool> decode_truth(const StageTrace& trace) {
  std::vector<bool> bits;
  Condition prev;
  for (std::size_t j = 0; j < trace.stages.size(); ++j) {
    const Stage& st = trace.stages[j];
    if (st.index != j || st.k != j / 2 || st.even != (j % 2 == 0))
      throw ForcingError("stage " + std::to_string(j) + " is out of order");
    if (st.before != prev) throw ForcingError("stage " + std::to_string(j) + " does not continue the chain");
    if (!extends(st.after, st.before))
      throw ForcingError("stage " + std::to_string(j) + " does not extend its condition");
    if (!st.even) {
      if (st.after.size() != st.before.size() + 1)
        throw ForcingError("odd stage " + std::to_string(j) + " must append exactly one digit");
      bits.push_back(st.after.back());
    }
    prev = st.after;
  }
  return bits;
}

bool AuditReport::all_settled() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.settled.has_value(); });
}

AuditReport audit_genericity(const StageTrace& trace, const std::vector<Formula>& phis) {
  decode_truth(trace);
  AuditReport rep;
  const Condition fin = trace.final_condition();
  for (const auto& st : trace.stages) {
    if (!st.even) continue;
    if (st.k >= phis.size()) throw ForcingError("trace processed phi_" + std::to_string(st.k) + " but it was not supplied");
    AuditEntry e;
    e.k = st.k;
    e.stage = st.index;
    if (forces(fin, phis[st.k]) == Forcing::Forced) e.settled = true;
    else if (forces(fin, Formula::negation(phis[st.k])) == Forcing::Forced) e.settled = false;
    rep.entries.push_back(e);
  }
  return rep;
}

Json to_json(const StageTrace& t, const std::vector<Formula>& phis, const std::vector<Formula>& xis) {
  Json stages = Json::array();
  for (const auto& st : t.stages) {
    Json j{{"index", st.index},
           {"k", st.k},
           {"parity", st.even ? "even" : "odd"},
           {"before", to_string(st.before)},
           {"after", to_string(st.after)},
           {"justification", st.justification}};
    const auto& src = st.even ? phis : xis;
    if (st.k < src.size()) j["formula"] = render(src[st.k]);
    stages.push_back(std::move(j));
  }
  return Json{{"stages", std::move(stages)}, {"final", to_string(t.final_condition())}};
}

StageTrace trace_from_json(const Json& j) {
  StageTrace t;
  try {
    for (const auto& s : j.at("stages")) {
      Stage st;
      st.index = s.at("index").get<std::size_t>();
      st.k = s.at("k").get<std::size_t>();
      const std::string parity = s.at("parity").get<std::string>();
      if (parity != "even" && parity != "odd") throw ForcingError("parity must be even or odd");
      st.even = parity == "even";
      st.before = parse_condition(s.at("before").get<std::string>());
      st.after = parse_condition(s.at("after").get<std::string>());
      st.justification = s.at("justification").get<std::string>();
      t.stages.push_back(std::move(st));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ForcingError(std::string("malformed trace: ") + e.what());
  }
  return t;
}

Json to_json(const AuditReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"k", e.k}, {"stage", e.stage}};
    if (e.settled) j["settled"] = *e.settled ? "positive" : "negative";
    else j["settled"] = nullptr;
    entries.push_back(std::move(j));
  }
  return Json{{"all_settled", r.all_settled()}, {"entries", std::move(entries)}};
}

}  // namespace metalogic
