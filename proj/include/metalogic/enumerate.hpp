#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "metalogic/syntax.hpp"

namespace metalogic {

/// Which syntax an exhaustive enumeration ranges over. Sizes follow
/// ast_size(); extra leaves carry their own weight (e.g. numerals as
/// weight-1 leaves).
struct EnumSpec {
  Signature sig;
  std::vector<std::string> vars;
  struct Leaf {
    Term term;
    std::size_t weight;
  };
  std::vector<Leaf> extra_leaves;
  bool constants = true;
  bool functions = true;
  bool equality = true;
  bool relations = true;
  bool negation = true;
  bool conjunction = true;
  bool disjunction = true;
  bool exists = true;
  bool forall = true;
  /// Formulas of larger depth are dropped (and never extended).
  std::size_t max_dp = static_cast<std::size_t>(-1);
};

/// result[s] holds every term of size exactly s, s <= max_size.
std::vector<std::vector<Term>> terms_by_size(const EnumSpec& spec, std::size_t max_size);

/// result[s] holds every formula of size exactly s, each bucket sorted by
/// rendered text.
std::vector<std::vector<Formula>> formulas_by_size(const EnumSpec& spec,
                                                   std::size_t max_size);

/// Counts formulas of each size without materializing them.
std::vector<unsigned long long> count_formulas_by_size(const EnumSpec& spec,
                                                       std::size_t max_size);

}  // namespace metalogic
