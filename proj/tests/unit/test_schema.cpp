#include <gtest/gtest.h>

#include "metalogic/complexity.hpp"
#include "metalogic/enumerate.hpp"
#include "metalogic/eval.hpp"
#include "metalogic/satisfaction.hpp"
#include "metalogic/schema.hpp"
#include "metalogic/sexpr.hpp"

using namespace metalogic;

namespace {

const Signature kA = Signature::arithmetic_core();
Formula P(const char* s, const Signature& sig = kA) { return parse_formula(s, sig); }

NatExpansion truth_expansion(std::map<Natural, bool> table, const std::string& name = "T") {
  NatExpansion ex;
  ex.relations[name] = [table](std::span<const Natural> a) {
    auto it = table.find(a[0]);
    return it != table.end() && it->second;
  };
  return ex;
}

void reparses(const SchemaInstance& s) {
  EXPECT_EQ(parse_formula(render(s.formula), s.signature), s.formula);
  EXPECT_TRUE(is_sentence(s.formula));
  (void)rank(s.formula);
}

}  // namespace

TEST(Tb, Shape) {
  Formula phi = P("(= 0 0)");
  SchemaInstance s = tb_axiom(phi, kA);
  Formula t = Formula::relation("T", {numeral(encode(phi))});
  EXPECT_EQ(s.formula, Formula::conjunction(Formula::disjunction(Formula::negation(t), phi),
                                            Formula::disjunction(Formula::negation(phi), t)));
  reparses(s);
  EXPECT_THROW(tb_axiom(P("(= x 0)"), kA), SchemaError);
  Signature withT = kA.with_relation("T", 1);
  EXPECT_THROW(tb_axiom(P("(T 0)", withT), withT), SchemaError);
}

TEST(Tb, TrueUnderTruthOracle) {
  Formula phi = P("(not (= 0 1))");
  SchemaInstance s = tb_axiom(phi, kA);
  auto ex = truth_expansion({{encode(phi), true}});
  EXPECT_EQ(eval_nat(s.formula, {}, {}, ex).value, Truth::True);
  auto wrong = truth_expansion({{encode(phi), false}});
  EXPECT_EQ(eval_nat(s.formula, {}, {}, wrong).value, Truth::False);
}

TEST(Usb, Shape) {
  Formula phi = P("(= v 0)");
  SchemaInstance s = usb_axiom(phi, kA);
  ASSERT_EQ(s.formula.kind(), Formula::Kind::Forall);
  const std::string x = s.formula.name();
  Formula sx = Formula::relation("S", {numeral(encode(phi)), Term::variable(x)});
  Formula px = Formula::equal(Term::variable(x), Term::constant("0"));
  EXPECT_EQ(s.formula.body(), iff(sx, px));
  reparses(s);
  EXPECT_THROW(usb_axiom(P("(= 0 0)"), kA), SchemaError);
}

TEST(Usb, HoldsInSelfTableExpansion) {
  FiniteModel m;
  m.universe = {"a", "b", "c"};
  m.add_relation("E", 2);
  m.relations["E"] = {{0, 1}, {1, 2}, {2, 2}};
  EnumSpec spec{m.signature(), {"v0", "v1"}};
  std::vector<Formula> fs;
  for (const auto& b : formulas_by_size(spec, 4))
    for (const auto& f : b)
      if (free_vars(f).size() == 1) fs.push_back(f);
  SatTable table = satisfaction_table(fs, m);
  add_table_as_coded(m, "S", table, 1);
  for (const auto& f : fs) {
    SchemaInstance s = usb_axiom(f, m.signature());
    ASSERT_TRUE(eval_finite(s.formula, m)) << render(s.formula);
  }
}

TEST(Def, Examples) {
  SchemaInstance s = def_axiom(P("(= x 0)"), kA);
  reparses(s);
  auto ex = NatExpansion{};
  const Natural c = encode(P("(= x 0)"));
  ex.relations["D"] = [c](std::span<const Natural> a) { return a[0] == c && a[1] == 0; };
  // instance holds in N with D pinned at y = 0; check the pinned side via bounded instances
  Formula body = s.formula.body();
  for (unsigned long y = 0; y < 4; ++y) {
    Formula inst = substitute(body, s.formula.name(), numeral(y));
    auto v = eval_nat(inst, {}, {}, ex);
    EXPECT_NE(v.value, Truth::False);
  }
  // non-unique: D must be false everywhere in a 2-element model
  FiniteModel m;
  m.universe = {"a", "b"};
  m.add_coded("D", 2);
  SchemaInstance nu = def_axiom(P("(= x x)", m.signature()), m.signature());
  EXPECT_TRUE(eval_finite(nu.formula, m));
  m.coded["D"].insert({encode(P("(= x x)", m.signature())), {0}});
  EXPECT_FALSE(eval_finite(nu.formula, m));
  EXPECT_THROW(def_axiom(P("(= x y)"), kA), SchemaError);
  Signature badD = kA.with_relation("D", 3);
  EXPECT_THROW(def_axiom(P("(= x 0)"), badD), SchemaError);
}

TEST(Utb, TermVariant) {
  Formula phi = P("(= v 0)");
  SchemaInstance s0 = utb_term_instance(phi, numeral(0ul), kA);
  Formula lhs = Formula::relation("T", {numeral(encode(substitute(phi, "v", numeral(0ul))))});
  EXPECT_EQ(s0.formula, iff(lhs, P("(= 0 0)")));
  SchemaInstance s2 = utb_term_instance(phi, parse_term("(+ 1 1)", kA), kA);
  EXPECT_EQ(s2.formula.rhs().rhs(), Formula::relation("T", {numeral(encode(P("(= (+ 1 1) 0)")))}));
  EXPECT_EQ(s2.formula.lhs().rhs(), Formula::equal(numeral(2ul), Term::constant("0")));
  EXPECT_THROW(utb_term_instance(phi, Term::variable("y"), kA), SchemaError);
}

TEST(Skolem, Examples) {
  Formula phi = P("(= x 0)");
  SchemaInstance s = skolem_axiom(phi, kA);
  Term h = Term::apply("H", {numeral(encode(phi))});
  EXPECT_EQ(s.formula, implies(P("(exists x (= x 0))"), Formula::equal(h, Term::constant("0"))));
  NatExpansion ex;
  ex.functions["H"] = [](std::span<const Natural>) { return Natural(0); };
  EXPECT_EQ(eval_nat(s.formula, {}, {}, ex).value, Truth::True);
  EXPECT_THROW(skolem_axiom(P("(= 0 0)"), kA), SchemaError);
  Signature badH = kA.with_function("H", 2);
  EXPECT_THROW(skolem_axiom(phi, badH), SchemaError);
}

TEST(Skolem, Uniform) {
  Formula phi = P("(< y x)");
  SchemaInstance s = us_axiom(phi, "x", kA);
  reparses(s);
  NatExpansion ex;
  ex.functions["H"] = [](std::span<const Natural> a) { return Natural(a[1] + 1); };
  Formula body = s.formula.body();
  for (unsigned long y = 0; y < 5; ++y)
    EXPECT_EQ(eval_nat(substitute(body, s.formula.name(), numeral(y)), {}, {}, ex).value,
              Truth::True);
}

TEST(TwoTb, Disjuncts) {
  Formula phi = P("(= 0 0)");
  SchemaInstance s = twotb_axiom(phi, phi, kA);
  EXPECT_EQ(s.formula.lhs().lhs().lhs().body().name(), "T1");
  auto t1 = truth_expansion({{encode(phi), true}}, "T1");
  t1.relations["T2"] = [](std::span<const Natural>) { return false; };
  EXPECT_EQ(eval_nat(s.formula, {}, {}, t1).value, Truth::True);
  auto t2 = truth_expansion({{encode(phi), true}}, "T2");
  t2.relations["T1"] = [](std::span<const Natural>) { return false; };
  EXPECT_EQ(eval_nat(s.formula, {}, {}, t2).value, Truth::True);
  NatExpansion none;
  none.relations["T1"] = none.relations["T2"] = [](std::span<const Natural>) { return false; };
  EXPECT_EQ(eval_nat(s.formula, {}, {}, none).value, Truth::False);
}

TEST(Rsat, Instances) {
  std::vector<Formula> ptype{P("(< y x)")};
  RsatInstances one = rsat_instances(ptype, "x", {"y"}, 7, 1, kA);
  EXPECT_EQ(one.op.size(), 1u);
  RsatInstances zero = rsat_instances(ptype, "x", {"y"}, 7, 0, kA);
  EXPECT_TRUE(zero.op.empty());
  for (const auto& f : one.op) EXPECT_TRUE(is_sentence(f));
  EXPECT_TRUE(is_sentence(one.ne));
  NatExpansion ex;
  ex.relations["R"] = [](std::span<const Natural> a) { return a[1] == a[2] + 1; };
  // OP and NE are universal in y; check their instances for small y.
  for (const Formula& f : {one.op[0], one.ne}) {
    ASSERT_EQ(f.kind(), Formula::Kind::Forall);
    for (unsigned long y = 0; y < 6; ++y) {
      Formula inst = substitute(f.body(), f.name(), numeral(y));
      EXPECT_NE(eval_nat(inst, {}, {}, ex).value, Truth::False) << render(inst);
    }
  }
  EXPECT_THROW(rsat_instances({P("(< z x)")}, "x", {"y"}, 7, 1, kA), SchemaError);
}

TEST(Rsat, CantorPair) {
  for (unsigned a = 0; a < 6; ++a)
    for (unsigned b = 0; b < 6; ++b) {
      unsigned z = (a + b) * (a + b + 1) / 2 + b;
      Formula f = cantor_pair_formula(numeral(static_cast<unsigned long>(z)), numeral(static_cast<unsigned long>(a)),
                                      numeral(static_cast<unsigned long>(b)));
      EXPECT_EQ(eval_nat(f).value, Truth::True);
      Formula g = cantor_pair_formula(numeral(static_cast<unsigned long>(z + 1)), numeral(static_cast<unsigned long>(a)),
                                      numeral(static_cast<unsigned long>(b)));
      EXPECT_EQ(eval_nat(g).value, Truth::False);
    }
}

TEST(Translate, Examples) {
  Signature sig = kA.with_relation("R", 1);
  EXPECT_EQ(translate_predicate(P("(R 0)", sig), "R", {"x"}, P("(= x 0)")), P("(= 0 0)"));
  Formula r = translate_predicate(P("(forall x (R x))", sig), "R", {"y"}, P("(exists x (= x y))"));
  EXPECT_TRUE(alpha_equal(r, P("(forall x (exists w (= w x)))")));
  ASSERT_EQ(r.kind(), Formula::Kind::Forall);
  EXPECT_NE(r.body().name(), "x");
  Formula plain = P("(exists x (< x 1))");
  EXPECT_EQ(translate_predicate(plain, "R", {"y"}, P("(= y y)")), plain);
  EXPECT_THROW(translate_predicate(P("(R 0)", sig), "R", {"x", "y"}, P("(= x y)")), SchemaError);
}

TEST(Translate, Homomorphism) {
  Signature sig = kA.with_relation("R", 1);
  Formula defn = P("(exists z (= (+ z z) y))");
  Formula a = P("(R x)", sig), b = P("(not (R (+ x 1)))", sig);
  auto tr = [&](const Formula& f) { return translate_predicate(f, "R", {"y"}, defn); };
  EXPECT_TRUE(alpha_equal(tr(Formula::conjunction(a, b)), Formula::conjunction(tr(a), tr(b))));
  EXPECT_TRUE(alpha_equal(tr(Formula::exists("x", a)), Formula::exists("x", tr(a))));
  EXPECT_TRUE(alpha_equal(tr(substitute(a, "x", Term::constant("1"))),
                          substitute(tr(a), "x", Term::constant("1"))));
}
