#include "metalogic/complexity.hpp"

#include <algorithm>

namespace metalogic {

// Bottom-up over the mutual grammar:
//   Sigma*_{n+1} := AT | exists v S | S and S | S or S | not P_{n+1} | forall v P_n
// and dually. An atom sits at level 1 on both sides; exists keeps the Sigma
// level and pushes the Pi level one above it, forall the other way round.
RankPair rank(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation:
      return {1, 1};
    case Formula::Kind::Not: {
      RankPair r = rank(f.body());
      return {r.pi, r.sigma};
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      RankPair a = rank(f.lhs()), b = rank(f.rhs());
      return {std::max(a.sigma, b.sigma), std::max(a.pi, b.pi)};
    }
    case Formula::Kind::Exists: {
      RankPair r = rank(f.body());
      return {r.sigma, r.sigma + 1};
    }
    case Formula::Kind::Forall: {
      RankPair r = rank(f.body());
      return {r.pi + 1, r.pi};
    }
  }
  return {};
}

bool in_sigma(const Formula& f, unsigned n) { return n != 0 && n >= rank(f).sigma; }
bool in_pi(const Formula& f, unsigned n) { return n != 0 && n >= rank(f).pi; }

bool is_delta(const Formula& f, unsigned n) {
  RankPair r = rank(f);
  return n != 0 && r.sigma <= n && r.pi <= n;
}

std::size_t dp(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation:
      return 0;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return dp(f.body()) + 1;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return std::max(dp(f.lhs()), dp(f.rhs())) + 1;
  }
  return 0;
}

std::size_t pdp(const Term& t) {
  if (!t.is_apply()) return 0;
  std::size_t m = 0;
  for (const auto& a : t.args()) m = std::max(m, pdp(a));
  return m + 1;
}

std::size_t pdp(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Relation: {
      std::size_t m = 0;
      for (const auto& t : f.terms()) m = std::max(m, pdp(t));
      return m;
    }
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return pdp(f.body()) + 1;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return std::max(pdp(f.lhs()), pdp(f.rhs())) + 1;
  }
  return 0;
}

}  // namespace metalogic
