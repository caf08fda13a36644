#pragma once

#include <cstddef>

#include "metalogic/syntax.hpp"

namespace metalogic {

/// Least levels n >= 1 with f in Sigma*_n and in Pi*_n.
struct RankPair {
  unsigned sigma = 1;
  unsigned pi = 1;
  friend bool operator==(const RankPair&, const RankPair&) = default;
};

RankPair rank(const Formula& f);
bool in_sigma(const Formula& f, unsigned n);
bool in_pi(const Formula& f, unsigned n);
/// Delta*_n = Sigma*_n intersected with Pi*_n.
bool is_delta(const Formula& f, unsigned n);

std::size_t dp(const Formula& f);
std::size_t pdp(const Term& t);
std::size_t pdp(const Formula& f);

}  // namespace metalogic
