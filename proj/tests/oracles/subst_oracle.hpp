#pragma once

// Textbook substitution: rename every bound variable to a brand new name
// first, then replace free occurrences without any capture check.

#include <set>
#include <string>

#include "metalogic/syntax.hpp"

namespace oracle {

namespace detail {

inline void collect(const metalogic::Term& t, std::set<std::string>& out) {
  if (t.is_variable()) out.insert(t.name());
  for (const auto& a : t.args()) collect(a, out);
}

inline void collect(const metalogic::Formula& f, std::set<std::string>& out) {
  using K = metalogic::Formula::Kind;
  switch (f.kind()) {
    case K::Equal:
    case K::Relation:
      for (const auto& t : f.terms()) collect(t, out);
      return;
    case K::Not:
      collect(f.body(), out);
      return;
    case K::And:
    case K::Or:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      return;
    case K::Exists:
    case K::Forall:
      out.insert(f.name());
      collect(f.body(), out);
      return;
  }
}

inline metalogic::Term replace(const metalogic::Term& t, const std::string& v,
                               const metalogic::Term& r) {
  using metalogic::Term;
  if (t.is_variable()) return t.name() == v ? r : t;
  if (!t.is_apply()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(replace(a, v, r));
  return Term::apply(t.name(), std::move(args));
}

struct Freshener {
  std::set<std::string> taken;
  int counter = 0;
  std::string next() {
    for (;;) {
      std::string n = "fresh" + std::to_string(counter++);
      if (!taken.count(n)) return n;
    }
  }
  // ren maps currently bound original names to their fresh names.
  metalogic::Formula run(const metalogic::Formula& f,
                         std::vector<std::pair<std::string, std::string>>& ren) {
    using metalogic::Formula;
    using metalogic::Term;
    using K = Formula::Kind;
    auto rename_term = [&](const Term& t) {
      Term out = t;
      std::set<std::string> vs;
      collect(t, vs);
      for (const auto& v : vs)
        for (auto it = ren.rbegin(); it != ren.rend(); ++it)
          if (it->first == v) {
            out = replace(out, v, Term::variable(it->second));
            break;
          }
      return out;
    };
    switch (f.kind()) {
      case K::Equal:
        return Formula::equal(rename_term(f.terms()[0]), rename_term(f.terms()[1]));
      case K::Relation: {
        std::vector<Term> args;
        for (const auto& t : f.terms()) args.push_back(rename_term(t));
        return Formula::relation(f.name(), std::move(args));
      }
      case K::Not:
        return Formula::negation(run(f.body(), ren));
      case K::And:
        return Formula::conjunction(run(f.lhs(), ren), run(f.rhs(), ren));
      case K::Or:
        return Formula::disjunction(run(f.lhs(), ren), run(f.rhs(), ren));
      case K::Exists:
      case K::Forall: {
        std::string n = next();
        ren.emplace_back(f.name(), n);
        Formula body = run(f.body(), ren);
        ren.pop_back();
        return f.kind() == K::Exists ? Formula::exists(n, body) : Formula::forall(n, body);
      }
    }
    return f;
  }
};

inline metalogic::Formula plug(const metalogic::Formula& f, const std::string& v,
                               const metalogic::Term& r) {
  using metalogic::Formula;
  using metalogic::Term;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Equal:
      return Formula::equal(replace(f.terms()[0], v, r), replace(f.terms()[1], v, r));
    case K::Relation: {
      std::vector<Term> args;
      for (const auto& t : f.terms()) args.push_back(replace(t, v, r));
      return Formula::relation(f.name(), std::move(args));
    }
    case K::Not:
      return Formula::negation(plug(f.body(), v, r));
    case K::And:
      return Formula::conjunction(plug(f.lhs(), v, r), plug(f.rhs(), v, r));
    case K::Or:
      return Formula::disjunction(plug(f.lhs(), v, r), plug(f.rhs(), v, r));
    case K::Exists:
    case K::Forall:
      // every binder is fresh, so v is never rebound here
      return f.kind() == K::Exists ? Formula::exists(f.name(), plug(f.body(), v, r))
                                   : Formula::forall(f.name(), plug(f.body(), v, r));
  }
  return f;
}

}  // namespace detail

inline metalogic::Formula substitute(const metalogic::Formula& f, const std::string& v,
                                     const metalogic::Term& t) {
  detail::Freshener fr;
  detail::collect(f, fr.taken);
  detail::collect(t, fr.taken);
  fr.taken.insert(v);
  std::vector<std::pair<std::string, std::string>> ren;
  return detail::plug(fr.run(f, ren), v, t);
}

}  // namespace oracle
