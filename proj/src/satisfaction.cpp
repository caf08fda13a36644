#include "metalogic/satisfaction.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "metalogic/complexity.hpp"
#include "metalogic/enumerate.hpp"

namespace metalogic {

namespace {

void collect(const Formula& f, std::set<Formula>& seen, std::vector<Formula>& out) {
  if (seen.count(f)) return;
  switch (f.kind()) {
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      collect(f.body(), seen, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect(f.lhs(), seen, out);
      collect(f.rhs(), seen, out);
      break;
    default:
      break;
  }
  if (seen.insert(f).second) out.push_back(f);
}

bool is_function_graph(const Formula& f) {
  if (f.kind() != Formula::Kind::Equal) return false;
  auto flat = [](const Term& t) {
    return t.is_apply() && std::all_of(t.args().begin(), t.args().end(),
                                       [](const Term& a) { return a.is_variable(); });
  };
  return (flat(f.terms()[0]) && f.terms()[1].is_variable()) ||
         (flat(f.terms()[1]) && f.terms()[0].is_variable());
}

std::string atom_clause(const Formula& f) {
  return is_function_graph(f) ? "function-graph" : "atomic";
}

const char* connective_clause(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Not: return "not";
    case Formula::Kind::And: return "and";
    case Formula::Kind::Or: return "or";
    case Formula::Kind::Exists: return "exists";
    case Formula::Kind::Forall: return "forall";
    default: return "atomic";
  }
}

void sort_report(ClauseReport& r) {
  std::sort(r.violations.begin(), r.violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.code, a.clause, a.assignment) < std::tie(b.code, b.clause, b.assignment);
  });
  std::sort(r.domain_gaps.begin(), r.domain_gaps.end());
  r.domain_gaps.erase(std::unique(r.domain_gaps.begin(), r.domain_gaps.end()), r.domain_gaps.end());
}

// Shared clause driver. `Ctx` supplies the value range, the oracle call and
// atom evaluation for one kind of context.
template <class Ctx>
ClauseReport run_clauses(const Ctx& ctx, const std::vector<Formula>& fs) {
  ClauseReport report;
  std::set<Natural> done;
  using Asn = typename Ctx::Assignment;
  for (const auto& f : fs) {
    const Natural code = encode(f);
    if (!done.insert(code).second) continue;
    const VarSet fv = free_vars(f);
    const std::vector<std::string> vars(fv.begin(), fv.end());
    std::optional<Natural> body_code, lhs_code, rhs_code;
    VarSet body_fv, lhs_fv, rhs_fv;
    if (f.kind() == Formula::Kind::Not || f.is_quantifier()) {
      body_code = encode(f.body());
      body_fv = free_vars(f.body());
    } else if (f.is_binary()) {
      lhs_code = encode(f.lhs());
      rhs_code = encode(f.rhs());
      lhs_fv = free_vars(f.lhs());
      rhs_fv = free_vars(f.rhs());
    }
    bool gap = false;
    auto query = [&](const Natural& c, const VarSet& keep, const Asn& a) -> std::optional<bool> {
      Asn restricted;
      for (const auto& v : keep) restricted.emplace(v, a.at(v));
      auto r = ctx.oracle(c, restricted);
      if (!r) gap = true;
      return r;
    };
    const std::size_t n = ctx.range();
    std::vector<std::size_t> digits(vars.size(), 0);
    for (;;) {
      Asn alpha;
      for (std::size_t i = 0; i < vars.size(); ++i) alpha.emplace(vars[i], ctx.value(digits[i]));
      std::optional<bool> got = query(code, fv, alpha);
      std::optional<bool> expected;
      std::string clause;
      switch (f.kind()) {
        case Formula::Kind::Equal:
        case Formula::Kind::Relation:
          clause = atom_clause(f);
          expected = ctx.atom(f, alpha);
          break;
        case Formula::Kind::Not:
          clause = "not";
          if (auto b = query(*body_code, body_fv, alpha)) expected = !*b;
          break;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
          clause = connective_clause(f.kind());
          auto a = query(*lhs_code, lhs_fv, alpha);
          auto b = query(*rhs_code, rhs_fv, alpha);
          if (a && b) expected = f.kind() == Formula::Kind::And ? (*a && *b) : (*a || *b);
          break;
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
          clause = connective_clause(f.kind());
          const bool ex = f.kind() == Formula::Kind::Exists;
          bool acc = !ex, complete = true;
          for (std::size_t e = 0; e < n; ++e) {
            Asn beta = alpha;
            beta[f.name()] = ctx.value(e);
            auto b = query(*body_code, body_fv, beta);
            if (!b) {
              complete = false;
              break;
            }
            if (*b == ex) {
              acc = ex;
              break;
            }
          }
          if (complete) expected = acc;
          break;
        }
      }
      ++report.clauses_checked;
      if (got && expected && *got != *expected) {
        ClauseViolation v;
        v.clause = clause;
        v.code = code;
        for (const auto& [k, val] : alpha) v.assignment.emplace_back(k, ctx.show(val));
        v.expected = *expected;
        v.got = *got;
        report.violations.push_back(std::move(v));
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    if (gap) report.domain_gaps.push_back(code);
  }
  sort_report(report);
  return report;
}

struct FiniteCtx {
  using Assignment = FiniteAssignment;
  const SatOracle& s;
  const FiniteModel& m;
  std::size_t range() const { return static_cast<std::size_t>(m.size()); }
  int value(std::size_t i) const { return static_cast<int>(i); }
  std::string show(int e) const { return m.universe[static_cast<std::size_t>(e)]; }
  std::optional<bool> oracle(const Natural& c, const Assignment& a) const { return s(c, a); }
  bool atom(const Formula& f, const Assignment& a) const { return eval_finite(f, m, a); }
};

struct NatCtx {
  using Assignment = NatAssignment;
  const NatSatOracle& s;
  unsigned long bound;
  std::size_t range() const { return bound; }
  Natural value(std::size_t i) const { return Natural(i); }
  std::string show(const Natural& n) const { return to_string(n); }
  std::optional<bool> oracle(const Natural& c, const Assignment& a) const { return s(c, a); }
  bool atom(const Formula& f, const Assignment& a) const {
    return eval_nat(f, a).value == Truth::True;
  }
};

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::set<Formula> seen;
  std::vector<Formula> out;
  collect(f, seen, out);
  return out;
}

Json to_json(const ClauseReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json asn = Json::object();
    for (const auto& [k, val] : x.assignment) asn[k] = val;
    v.push_back(Json{{"clause", x.clause},
                     {"code", to_string(x.code)},
                     {"assignment", std::move(asn)},
                     {"expected", x.expected},
                     {"got", x.got}});
  }
  Json gaps = Json::array();
  for (const auto& g : r.domain_gaps) gaps.push_back(to_string(g));
  return Json{{"ok", r.ok()},
              {"bounded_approximation", r.bounded_approximation},
              {"clauses_checked", r.clauses_checked},
              {"violations", std::move(v)},
              {"domain_gaps", std::move(gaps)}};
}

ClauseReport check_compositional(const SatOracle& s, const std::vector<Formula>& fs,
                                 const FiniteModel& m) {
  return run_clauses(FiniteCtx{s, m}, fs);
}

ClauseReport check_compositional_nat(const NatSatOracle& s, const std::vector<Formula>& fs,
                                     unsigned long bound) {
  ClauseReport r = run_clauses(NatCtx{s, bound}, fs);
  r.bounded_approximation = true;
  return r;
}

SatTable satisfaction_table(const std::vector<Formula>& fs, const FiniteModel& m) {
  std::set<Formula> seen;
  std::vector<Formula> all;
  for (const auto& f : fs) collect(f, seen, all);
  SatTable table;
  for (const auto& f : all) {
    const Natural code = encode(f);
    const VarSet fv = free_vars(f);
    const std::vector<std::string> vars(fv.begin(), fv.end());
    std::vector<int> digits(vars.size(), 0);
    for (;;) {
      FiniteAssignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = digits[i];
      table[{code, a}] = eval_finite(f, m, a);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == m.size()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return table;
}

SatOracle oracle_from_table(const SatTable& table) {
  return [&table](const Natural& c, const FiniteAssignment& a) -> std::optional<bool> {
    auto it = table.find({c, a});
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

void add_table_as_coded(FiniteModel& m, const std::string& name, const SatTable& table,
                        std::size_t params) {
  m.add_coded(name, static_cast<int>(params) + 1);
  auto& rows = m.coded[name];
  for (const auto& [key, value] : table) {
    if (!value || key.second.size() != params) continue;
    std::vector<int> t;
    for (const auto& [v, e] : key.second) t.push_back(e);
    rows.insert({key.first, t});
  }
}

// ---- Indexed form ----------------------------------------------------------

FormulaIndex::FormulaIndex(const std::vector<Formula>& fs) {
  std::set<Formula> seen;
  std::vector<Formula> all;
  for (const auto& f : fs) collect(f, seen, all);
  std::map<Formula, std::size_t> at;
  for (auto& f : all) {
    Natural c = encode(f);
    if (by_code_.count(c)) continue;
    const std::size_t i = formulas_.size();
    by_code_.emplace(c, i);
    at.emplace(f, i);
    const VarSet fv = free_vars(f);
    vars_.emplace_back(fv.begin(), fv.end());
    std::vector<std::size_t> kids;
    if (f.kind() == Formula::Kind::Not || f.is_quantifier()) {
      kids.push_back(at.at(f.body()));
    } else if (f.is_binary()) {
      kids.push_back(at.at(f.lhs()));
      kids.push_back(at.at(f.rhs()));
    }
    std::vector<std::vector<int>> sl;
    for (auto k : kids) {
      std::vector<int> pos;
      for (const auto& v : vars_[k]) {
        auto it = std::find(vars_.back().begin(), vars_.back().end(), v);
        pos.push_back(it == vars_.back().end() ? -1 : static_cast<int>(it - vars_.back().begin()));
      }
      sl.push_back(std::move(pos));
    }
    slots_.push_back(std::move(sl));
    children_.push_back(kids);
    parents_.emplace_back();
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    for (auto k : kids) parents_[k].push_back(i);
    codes_.push_back(std::move(c));
    formulas_.push_back(std::move(f));
  }
}

std::optional<std::size_t> FormulaIndex::find(const Natural& code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

std::size_t FormulaIndex::assignments(std::size_t i, int n) const {
  std::size_t r = 1;
  for (std::size_t k = 0; k < vars_[i].size(); ++k) r *= static_cast<std::size_t>(n);
  return r;
}

FiniteAssignment FormulaIndex::assignment(std::size_t i, std::size_t a, int n) const {
  FiniteAssignment out;
  for (const auto& v : vars_[i]) {
    out[v] = static_cast<int>(a % static_cast<std::size_t>(n));
    a /= static_cast<std::size_t>(n);
  }
  return out;
}

DenseTable dense_satisfaction(const FormulaIndex& ix, const FiniteModel& m) {
  DenseTable t;
  t.universe = m.size();
  t.values.resize(ix.size());
  for (std::size_t i = 0; i < ix.size(); ++i) {
    const std::size_t na = ix.assignments(i, t.universe);
    t.values[i].resize(na);
    for (std::size_t a = 0; a < na; ++a)
      t.values[i][a] = eval_finite(ix.formula(i), m, ix.assignment(i, a, t.universe));
  }
  return t;
}

namespace {

// Values of node p's variables under assignment number a.
std::vector<int> digits_of(const FormulaIndex& ix, std::size_t p, std::size_t a, int n) {
  std::vector<int> d(ix.vars(p).size());
  for (auto& x : d) {
    x = static_cast<int>(a % static_cast<std::size_t>(n));
    a /= static_cast<std::size_t>(n);
  }
  return d;
}

std::size_t child_number(const std::vector<int>& slots, const std::vector<int>& d, int bound,
                         int n) {
  std::size_t r = 0, w = 1;
  for (int s : slots) {
    r += w * static_cast<std::size_t>(s < 0 ? bound : d[static_cast<std::size_t>(s)]);
    w *= static_cast<std::size_t>(n);
  }
  return r;
}

bool reads_entry(const FormulaIndex& ix, int n, std::size_t p, const std::vector<int>& d,
                 std::size_t node, std::size_t a) {
  const bool q = ix.formula(p).is_quantifier();
  for (std::size_t k = 0; k < ix.children(p).size(); ++k) {
    if (ix.children(p)[k] != node) continue;
    for (int e = 0; e < (q ? n : 1); ++e)
      if (child_number(ix.slots(p, k), d, e, n) == a) return true;
  }
  return false;
}

// The clause for node p at (a, d): returns the expected value.
bool expected_value(const FormulaIndex& ix, const DenseTable& t, const FiniteModel& m,
                    std::size_t p, std::size_t a, const std::vector<int>& d) {
  const Formula& f = ix.formula(p);
  const int n = t.universe;
  auto read = [&](std::size_t k, int e) {
    const std::size_t c = ix.children(p)[k];
    return t.values[c][child_number(ix.slots(p, k), d, e, n)] != 0;
  };
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation:
      return eval_finite(f, m, ix.assignment(p, a, n));
    case Formula::Kind::Not:
      return !read(0, 0);
    case Formula::Kind::And:
      return read(0, 0) && read(1, 0);
    case Formula::Kind::Or:
      return read(0, 0) || read(1, 0);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool ex = f.kind() == Formula::Kind::Exists;
      for (int e = 0; e < n; ++e)
        if (read(0, e) == ex) return ex;
      return !ex;
    }
  }
  return false;
}

void check_one(const FormulaIndex& ix, const DenseTable& t, const FiniteModel& m, std::size_t p,
               std::size_t a, const std::vector<int>& d, ClauseReport& r) {
  ++r.clauses_checked;
  const bool expected = expected_value(ix, t, m, p, a, d);
  const bool got = t.values[p][a] != 0;
  if (got == expected) return;
  const Formula& f = ix.formula(p);
  ClauseViolation v;
  v.clause = f.is_atomic() ? atom_clause(f) : connective_clause(f.kind());
  v.code = ix.code(p);
  for (std::size_t j = 0; j < d.size(); ++j)
    v.assignment.emplace_back(ix.vars(p)[j], m.universe[static_cast<std::size_t>(d[j])]);
  v.expected = expected;
  v.got = got;
  r.violations.push_back(std::move(v));
}

}  // namespace

ClauseReport check_compositional(const FormulaIndex& ix, const DenseTable& t,
                                 const FiniteModel& m) {
  ClauseReport r;
  for (std::size_t p = 0; p < ix.size(); ++p) {
    const std::size_t na = ix.assignments(p, t.universe);
    for (std::size_t a = 0; a < na; ++a) check_one(ix, t, m, p, a, digits_of(ix, p, a, t.universe), r);
  }
  sort_report(r);
  return r;
}

ClauseReport check_entry(const FormulaIndex& ix, const DenseTable& t, const FiniteModel& m,
                         std::size_t node, std::size_t a) {
  ClauseReport r;
  const int n = t.universe;
  check_one(ix, t, m, node, a, digits_of(ix, node, a, n), r);
  for (auto p : ix.parents(node)) {
    const std::size_t na = ix.assignments(p, n);
    for (std::size_t b = 0; b < na; ++b) {
      const std::vector<int> d = digits_of(ix, p, b, n);
      if (reads_entry(ix, n, p, d, node, a)) check_one(ix, t, m, p, b, d, r);
    }
  }
  sort_report(r);
  return r;
}

// ---- CT ------------------------------------------------------------------

Json to_json(const TruthOracle& t) {
  Json entries = Json::array();
  for (const auto& [c, b] : t.values) entries.push_back(Json::array({to_string(c), b}));
  return entries;
}

TruthOracle truth_oracle_from_json(const Json& j) {
  TruthOracle t;
  const Json* entries = &j;
  if (j.is_object()) {
    t.depth = j.value("depth", 0u);
    t.numeral_bound = j.value("numeral_bound", 0u);
    entries = &j.at("values");
  }
  if (!entries->is_array()) throw EvalError("truth oracle must be an array of [code, bool]");
  for (const auto& e : *entries) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_boolean())
      throw EvalError("truth oracle entries are [code, bool]");
    Natural c = e[0].is_string() ? parse_natural(e[0].get<std::string>())
                                 : Natural(e[0].get<unsigned long long>());
    t.values[c] = e[1].get<bool>();
  }
  return t;
}

namespace {

bool eq_truth(const Formula& f, std::map<std::string, Natural>& asn, unsigned long range) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      return eval_term(f.terms()[0], asn) == eval_term(f.terms()[1], asn);
    case Formula::Kind::Not:
      return !eq_truth(f.body(), asn, range);
    case Formula::Kind::And:
      return eq_truth(f.lhs(), asn, range) && eq_truth(f.rhs(), asn, range);
    case Formula::Kind::Or:
      return eq_truth(f.lhs(), asn, range) || eq_truth(f.rhs(), asn, range);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool ex = f.kind() == Formula::Kind::Exists;
      auto saved = asn.count(f.name()) ? std::optional<Natural>(asn[f.name()]) : std::nullopt;
      bool result = !ex;
      for (unsigned long y = 0; y < range; ++y) {
        asn[f.name()] = y;
        if (eq_truth(f.body(), asn, range) == ex) {
          result = ex;
          break;
        }
      }
      if (saved) asn[f.name()] = *saved;
      else asn.erase(f.name());
      return result;
    }
    case Formula::Kind::Relation:
      throw EvalError("relation atoms are outside the equality fragment");
  }
  return false;
}

std::size_t quantifier_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Not: return quantifier_count(f.body());
    case Formula::Kind::And:
    case Formula::Kind::Or: return quantifier_count(f.lhs()) + quantifier_count(f.rhs());
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 1 + quantifier_count(f.body());
    default: return 0;
  }
}

}  // namespace

bool ct_exact_truth(const Formula& sentence, unsigned b) {
  // Values >= b are interchangeable; one fresh value per quantifier suffices.
  std::map<std::string, Natural> asn;
  return eq_truth(sentence, asn, b + quantifier_count(sentence));
}

CtCorpus build_ct_corpus(unsigned x, unsigned b, std::size_t size_cap) {
  EnumSpec spec;
  spec.constants = spec.functions = spec.relations = false;
  spec.conjunction = spec.forall = false;
  spec.max_dp = x;
  for (unsigned i = 0; i < x; ++i) spec.vars.push_back("v" + std::to_string(i));
  for (unsigned i = 0; i < b; ++i) spec.extra_leaves.push_back({numeral(static_cast<unsigned long>(i)), 1});
  CtCorpus c;
  c.depth = x;
  c.numeral_bound = b;
  std::vector<Formula> pending;
  for (const auto& bucket : formulas_by_size(spec, size_cap))
    for (const auto& f : bucket)
      if (is_sentence(f)) pending.push_back(f);
  // Closure under consulted subsentences; index assignment in discovery order.
  auto add = [&](const Formula& f) -> std::uint32_t {
    Natural code = encode(f);
    auto it = c.index.find(code);
    if (it != c.index.end()) return it->second;
    const auto i = static_cast<std::uint32_t>(c.sentences.size());
    c.index.emplace(code, i);
    c.sentences.push_back(f);
    c.codes.push_back(std::move(code));
    return i;
  };
  for (const auto& f : pending) add(f);
  std::vector<std::vector<std::uint32_t>> kids;
  for (std::size_t i = 0; i < c.sentences.size(); ++i) {
    const Formula f = c.sentences[i];
    std::vector<std::uint32_t> ch;
    switch (f.kind()) {
      case Formula::Kind::Equal:
        c.kinds.push_back(CtCorpus::Kind::Atom);
        break;
      case Formula::Kind::Not:
        c.kinds.push_back(CtCorpus::Kind::Not);
        ch.push_back(add(f.body()));
        break;
      case Formula::Kind::Or:
        c.kinds.push_back(CtCorpus::Kind::Or);
        ch.push_back(add(f.lhs()));
        ch.push_back(add(f.rhs()));
        break;
      case Formula::Kind::Exists:
        c.kinds.push_back(CtCorpus::Kind::Exists);
        for (unsigned y = 0; y < b; ++y) ch.push_back(add(dot_substitute(f.body(), f.name(), y)));
        break;
      default:
        throw EvalError("corpus sentence outside {=, not, or, exists}");
    }
    kids.push_back(std::move(ch));
  }
  c.child_begin.push_back(0);
  for (const auto& k : kids) {
    c.child_index.insert(c.child_index.end(), k.begin(), k.end());
    c.child_begin.push_back(static_cast<std::uint32_t>(c.child_index.size()));
  }
  c.atom_value.resize(c.sentences.size(), 0);
  for (std::size_t i = 0; i < c.sentences.size(); ++i)
    if (c.kinds[i] == CtCorpus::Kind::Atom)
      c.atom_value[i] = eval_term(c.sentences[i].terms()[0]) == eval_term(c.sentences[i].terms()[1]);
  return c;
}

std::vector<std::uint8_t> ct_exact_bits(const CtCorpus& corpus) {
  std::vector<std::uint8_t> bits(corpus.sentences.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    bits[i] = ct_exact_truth(corpus.sentences[i], corpus.numeral_bound);
  return bits;
}

TruthOracle ct_exact_oracle(const CtCorpus& corpus) {
  TruthOracle t;
  t.depth = corpus.depth;
  t.numeral_bound = corpus.numeral_bound;
  const auto bits = ct_exact_bits(corpus);
  for (std::size_t i = 0; i < bits.size(); ++i) t.values[corpus.codes[i]] = bits[i] != 0;
  return t;
}

ClauseReport check_ct(const CtCorpus& c, std::span<const std::uint8_t> bits) {
  ClauseReport r;
  r.bounded_approximation = c.depth > 0;
  const std::size_t n = c.sentences.size();
  if (bits.size() != n) throw EvalError("truth vector does not match the corpus");
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t* k = c.child_index.data() + c.child_begin[i];
    const std::uint32_t* end = c.child_index.data() + c.child_begin[i + 1];
    bool expected = false;
    const char* clause = "";
    switch (c.kinds[i]) {
      case CtCorpus::Kind::Atom:
        clause = "CT1";
        expected = c.atom_value[i];
        break;
      case CtCorpus::Kind::Or:
        clause = "CT2";
        expected = bits[k[0]] || bits[k[1]];
        break;
      case CtCorpus::Kind::Not:
        clause = "CT3";
        expected = !bits[k[0]];
        break;
      case CtCorpus::Kind::Exists:
        clause = "CT4";
        for (; k != end; ++k)
          if (bits[*k]) {
            expected = true;
            break;
          }
        break;
    }
    ++r.clauses_checked;
    if (expected != (bits[i] != 0))
      r.violations.push_back({clause, c.codes[i], {}, expected, bits[i] != 0});
  }
  sort_report(r);
  return r;
}

ClauseReport check_ct(const TruthOracle& t, unsigned x, unsigned b, std::size_t size_cap) {
  const CtCorpus c = build_ct_corpus(x, b, size_cap);
  std::vector<std::uint8_t> bits(c.sentences.size(), 0);
  std::vector<Natural> gaps;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto it = t.values.find(c.codes[i]);
    if (it == t.values.end()) gaps.push_back(c.codes[i]);
    else bits[i] = it->second;
  }
  ClauseReport r = check_ct(c, bits);
  // A clause that reads a missing entry is unreliable; drop it.
  if (!gaps.empty()) {
    std::set<Natural> missing(gaps.begin(), gaps.end());
    std::set<Natural> affected = missing;
    for (std::size_t i = 0; i < bits.size(); ++i)
      for (auto k = c.child_begin[i]; k < c.child_begin[i + 1]; ++k)
        if (missing.count(c.codes[c.child_index[k]])) affected.insert(c.codes[i]);
    std::erase_if(r.violations, [&](const auto& v) { return affected.count(v.code) > 0; });
    r.domain_gaps = std::move(gaps);
    sort_report(r);
  }
  return r;
}

}  // namespace metalogic
