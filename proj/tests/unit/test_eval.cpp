#include <gtest/gtest.h>

#include <random>

#include "metalogic/enumerate.hpp"
#include "metalogic/eval.hpp"
#include "metalogic/finite_models.hpp"
#include "metalogic/satisfaction.hpp"
#include "metalogic/sexpr.hpp"
#include "nat_oracle.hpp"

using namespace metalogic;

namespace {

const Signature kA = Signature::arithmetic_core();
Formula P(const char* s, const Signature& sig = kA) { return parse_formula(s, sig); }

FiniteModel two_element() {
  FiniteModel m;
  m.universe = {"a", "b"};
  m.add_relation("E", 2);
  m.relations["E"].insert({0, 1});
  m.relations["E"].insert({1, 1});
  return m;
}

// Random formulas whose quantifiers all have the bounded shapes.
struct BoundedGen {
  std::mt19937 rng{42};
  std::vector<std::string> vars{"x", "y", "z"};
  std::size_t pick(std::size_t n) { return rng() % n; }
  Term term(int d, const std::vector<std::string>& scope) {
    std::size_t k = pick(d <= 0 ? 3 : 5);
    if (k == 2 && scope.empty()) k = 0;
    switch (k) {
      case 0: return Term::constant("0");
      case 1: return Term::constant("1");
      case 2: return Term::variable(scope[pick(scope.size())]);
      case 3: return Term::apply("+", {term(d - 1, scope), term(d - 1, scope)});
      default: return Term::apply("*", {term(d - 1, scope), term(d - 1, scope)});
    }
  }
  Formula formula(int d, std::vector<std::string> scope) {
    switch (pick(d <= 0 ? 2 : 7)) {
      case 0: return Formula::equal(term(1, scope), term(1, scope));
      case 1: return Formula::relation("<", {term(1, scope), term(1, scope)});
      case 2: return Formula::negation(formula(d - 1, scope));
      case 3: return Formula::conjunction(formula(d - 1, scope), formula(d - 1, scope));
      case 4: return Formula::disjunction(formula(d - 1, scope), formula(d - 1, scope));
      default: {
        std::string v = vars[pick(vars.size())];
        Term b = numeral(static_cast<unsigned long>(pick(5)));
        auto inner = scope;
        inner.push_back(v);
        Formula body = formula(d - 1, inner);
        return pick(2) ? bounded_exists(v, b, body) : bounded_forall(v, b, body);
      }
    }
  }
};

}  // namespace

TEST(EvalTerm, Examples) {
  EXPECT_EQ(eval_term(numeral(5ul)), 5);
  EXPECT_EQ(eval_term(parse_term("(+ 1 1)", kA)), 2);
  EXPECT_EQ(eval_term(Term::variable("v"), {{"v", 7}}), 7);
  EXPECT_THROW(eval_term(Term::variable("v")), EvalError);
}

TEST(EvalNat, Examples) {
  Formula f = P("(forall x (or (not (< x (num 5))) (exists y (and (< y (num 6)) (= y (+ x 1))))))");
  auto v = eval_nat(f);
  EXPECT_EQ(v.value, Truth::True);
  EXPECT_TRUE(v.exact);

  EvalBudget b;
  b.search_bound = 100;
  auto u = eval_nat(P("(exists x (= (* x x) (num 2)))"), {}, b);
  EXPECT_EQ(u.value, Truth::Unknown);

  auto t = eval_nat(P("(= 0 0)"));
  EXPECT_EQ(t.value, Truth::True);
  EXPECT_TRUE(t.exact);
}

TEST(EvalNat, UnboundedSearchSound) {
  auto v = eval_nat(P("(exists x (= (* x x) (num 49)))"));
  EXPECT_EQ(v.value, Truth::True);
  EXPECT_FALSE(v.exact);
  auto w = eval_nat(P("(forall x (< x (num 10)))"));
  EXPECT_EQ(w.value, Truth::False);
}

TEST(EvalNat, AgreesWithIndependentEvaluator) {
  BoundedGen gen;
  for (int i = 0; i < 3000; ++i) {
    Formula f = gen.formula(4, {});
    oracle::Env env;
    bool want = oracle::truth(f, env);
    auto got = eval_nat(f);
    ASSERT_TRUE(got.exact) << render(f);
    ASSERT_EQ(got.value, truth_of(want)) << render(f);
  }
}

TEST(EvalNat, BudgetMonotone) {
  EnumSpec spec{kA, {"v0"}};
  auto buckets = formulas_by_size(spec, 5);
  EvalBudget small, large;
  small.search_bound = 3;
  large.search_bound = 40;
  for (const auto& b : buckets)
    for (const auto& f : b) {
      if (!is_sentence(f)) continue;
      auto s = eval_nat(f, {}, small), l = eval_nat(f, {}, large);
      if (s.value != Truth::Unknown) ASSERT_EQ(s.value, l.value) << render(f);
    }
}

TEST(EvalFinite, Examples) {
  FiniteModel hf3 = build_hf(3);
  EXPECT_TRUE(eval_finite(as1_sentence(), hf3));
  FiniteModel m = two_element();
  EXPECT_TRUE(eval_finite(P("(= a a)", m.signature()), m, {{"a", 1}}));
  // every element has a member, so nothing is empty
  FiniteModel full;
  full.universe = {"p", "q"};
  full.add_relation("in", 2);
  full.relations["in"] = {{0, 0}, {1, 1}};
  EXPECT_FALSE(eval_finite(P("(exists x (forall y (not (in y x))))", Signature::membership()), full));
}

TEST(EvalFinite, SignatureMismatchThrows) {
  FiniteModel m = two_element();
  EXPECT_THROW(eval_finite(P("(exists x (R x))", Signature::empty().with_relation("R", 1)), m),
               EvalError);
}

TEST(Compositional, ExactTableHasNoViolations) {
  FiniteModel m = two_element();
  EnumSpec spec{m.signature(), {"v0", "v1"}};
  std::vector<Formula> fs;
  for (const auto& b : formulas_by_size(spec, 4)) fs.insert(fs.end(), b.begin(), b.end());
  SatTable table = satisfaction_table(fs, m);
  ClauseReport r = check_compositional(oracle_from_table(table), fs, m);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.clauses_checked, 0u);
  EXPECT_TRUE(check_compositional(oracle_from_table(table), {}, m).violations.empty());
}

TEST(Compositional, FlippedEntryIsLocalized) {
  FiniteModel m = two_element();
  const Signature sig = m.signature();
  std::vector<Formula> fs{P("(exists v0 (not (E v0 v1)))", sig), P("(or (E v0 v1) (= v0 v1))", sig)};
  SatTable table = satisfaction_table(fs, m);
  Formula target = P("(E v0 v1)", sig);
  const Natural tc = encode(target);
  std::set<Natural> parents{encode(P("(not (E v0 v1))", sig)), encode(fs[1])};
  std::vector<Formula> all;
  for (const auto& f : fs)
    for (const auto& g : subformulas(f)) all.push_back(g);
  for (auto& [key, value] : table) {
    if (key.first != tc) continue;
    value = !value;
    ClauseReport r = check_compositional(oracle_from_table(table), all, m);
    value = !value;
    ASSERT_FALSE(r.violations.empty());
    bool own = false;
    for (const auto& v : r.violations) {
      ASSERT_TRUE(v.code == tc || parents.count(v.code)) << v.clause;
      if (v.code == tc) own = true;
    }
    EXPECT_TRUE(own);
  }
}

TEST(Compositional, MissingEntryIsAGap) {
  FiniteModel m = two_element();
  std::vector<Formula> fs{P("(not (E v0 v0))", m.signature())};
  SatTable table = satisfaction_table(fs, m);
  std::erase_if(table, [&](const auto& kv) { return kv.first.first == encode(fs[0].body()); });
  ClauseReport r = check_compositional(oracle_from_table(table), fs, m);
  EXPECT_FALSE(r.domain_gaps.empty());
}

TEST(Compositional, NatContext) {
  std::vector<Formula> fs{P("(exists x (< x y))"), P("(not (= x (+ y 1)))")};
  NatSatOracle exact = [](const Natural& c, const NatAssignment& a) -> std::optional<bool> {
    Formula f = decode_formula(c);
    // the bounded context: quantifiers range below 4
    if (f.is_quantifier()) {
      bool any = false;
      for (unsigned i = 0; i < 4; ++i) {
        NatAssignment b = a;
        b[f.name()] = i;
        any = any || eval_nat(f.body(), b).value == Truth::True;
      }
      return any;
    }
    return eval_nat(f, a).value == Truth::True;
  };
  std::vector<Formula> all;
  for (const auto& f : fs)
    for (const auto& g : subformulas(f)) all.push_back(g);
  ClauseReport r = check_compositional_nat(exact, all, 4);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.bounded_approximation);
}

TEST(Ct, ExactOracleAccepted) {
  CtCorpus c = build_ct_corpus(1, 4);
  auto bits = ct_exact_bits(c);
  ClauseReport r = check_ct(c, bits);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.bounded_approximation);
  EXPECT_EQ(r.clauses_checked, c.sentences.size());
}

TEST(Ct, EmptyOracleViolatesCt1At00) {
  CtCorpus c = build_ct_corpus(0, 2);
  std::vector<std::uint8_t> zeros(c.sentences.size(), 0);
  ClauseReport r = check_ct(c, zeros);
  const Natural code = encode(P("(= 0 0)"));
  bool found = false;
  for (const auto& v : r.violations) {
    EXPECT_EQ(v.clause, "CT1");
    if (v.code == code) found = true;
  }
  EXPECT_TRUE(found);
  for (auto k : c.kinds) EXPECT_EQ(k, CtCorpus::Kind::Atom);
}

TEST(Ct, SingleBitCorruptionCaughtAtItsCode) {
  CtCorpus c = build_ct_corpus(1, 3);
  auto bits = ct_exact_bits(c);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] ^= 1;
    ClauseReport r = check_ct(c, bits);
    bits[i] ^= 1;
    bool own = std::any_of(r.violations.begin(), r.violations.end(),
                           [&](const auto& v) { return v.code == c.codes[i]; });
    ASSERT_TRUE(own) << render(c.sentences[i]);
  }
}

TEST(Ct, OracleJsonAndGaps) {
  CtCorpus c = build_ct_corpus(1, 3);
  TruthOracle t = ct_exact_oracle(c);
  TruthOracle back = truth_oracle_from_json(to_json(t));
  EXPECT_EQ(back.values, t.values);
  EXPECT_TRUE(check_ct(back, 1, 3).ok());
  back.values.erase(back.values.begin());
  ClauseReport r = check_ct(back, 1, 3);
  EXPECT_EQ(r.domain_gaps.size(), 1u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Ct, ExactTruthMatchesOracle) {
  CtCorpus c = build_ct_corpus(1, 4);
  for (const auto& s : c.sentences) {
    // unbounded quantifiers: compare with a search far past the numerals
    bool want;
    if (s.kind() == Formula::Kind::Exists || (s.kind() == Formula::Kind::Not && s.body().is_quantifier())) {
      const Formula& q = s.kind() == Formula::Kind::Exists ? s : s.body();
      bool any = false;
      for (unsigned long n = 0; n < 20; ++n) {
        oracle::Env env;
        any = any || oracle::truth(dot_substitute(q.body(), q.name(), n), env);
      }
      want = s.kind() == Formula::Kind::Exists ? any : !any;
    } else {
      if (!all_quantifiers_bounded(s) && !is_sentence(s)) continue;
      try {
        oracle::Env env;
        want = oracle::truth(s, env);
      } catch (const std::exception&) {
        continue;
      }
    }
    ASSERT_EQ(ct_exact_truth(s, 4), want) << render(s);
  }
}

TEST(IndexedCompositional, AgreesWithOracleForm) {
  FiniteModel m = two_element();
  EnumSpec spec{m.signature(), {"v0", "v1"}};
  std::vector<Formula> fs;
  for (const auto& b : formulas_by_size(spec, 4)) fs.insert(fs.end(), b.begin(), b.end());
  FormulaIndex ix(fs);
  DenseTable t = dense_satisfaction(ix, m);
  for (std::size_t i = 0; i < ix.size(); ++i)
    for (std::size_t c : ix.children(i)) ASSERT_LT(c, i);
  EXPECT_TRUE(check_compositional(ix, t, m).ok());

  SatTable table = satisfaction_table(fs, m);
  std::vector<Formula> nodes;
  for (std::size_t i = 0; i < ix.size(); ++i) nodes.push_back(ix.formula(i));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t node = rng() % ix.size();
    const std::size_t a = rng() % ix.assignments(node, m.size());
    const auto key = std::make_pair(ix.code(node), ix.assignment(node, a, m.size()));
    t.values[node][a] ^= 1;
    table.at(key) = !table.at(key);
    ClauseReport full = check_compositional(ix, t, m);
    ClauseReport ref = check_compositional(oracle_from_table(table), nodes, m);
    ClauseReport local = check_entry(ix, t, m, node, a);
    t.values[node][a] ^= 1;
    table.at(key) = !table.at(key);
    ASSERT_EQ(to_json(full), to_json(ref));
    ASSERT_EQ(to_json(full).at("violations"), to_json(local).at("violations"));
  }
}
