#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metalogic/complexity.hpp"
#include "metalogic/json_io.hpp"
#include "metalogic/model.hpp"

namespace metalogic {

inline constexpr int kMaxHfRank = 4;
inline constexpr int kMaxSearchUniverse = 8;
inline constexpr std::size_t kMaxSearchSize = 7;

/// Hereditarily finite sets of rank < r under the binary relation "in".
/// Elements are named in set notation, e.g. "{}" and "{{}}".
FiniteModel build_hf(int r);

struct AsReport {
  bool as1 = false;
  std::optional<int> as1_witness;
  bool as2 = false;
  /// (x, y) with no z such that w in z iff w in x or w = y.
  std::optional<std::pair<int, int>> as2_counterexample;
  bool ext = false;
  std::optional<std::pair<int, int>> ext_counterexample;
};

/// AS1, AS2 and extensionality for the relation "in".
AsReport check_as(const FiniteModel& m);
/// The same three properties as sentences over {in}.
Formula as1_sentence();
Formula as2_sentence();
Formula ext_sentence();
Json to_json(const AsReport& r, const FiniteModel& m);

/// Tagged union of two relational models; elements become "0:a", "1:b".
FiniteModel disjoint_union(const FiniteModel& a, const FiniteModel& b);

struct AutomorphismReport {
  /// Permutations p with p[i] the image of element i, sorted.
  std::vector<std::vector<int>> automorphisms;
  bool fixpoint_free = false;
};
AutomorphismReport automorphisms(const FiniteModel& m);

struct Definition {
  std::size_t size = 0;
  Formula formula;
  Natural code;
};

struct DefinabilityReport {
  std::string free_variable;
  /// Least-size (then least rendered) defining formula per element.
  std::vector<std::optional<Definition>> per_element;
  /// (code of a defining formula, element) for every semantic class of
  /// defining formulas met within the bound.
  std::vector<std::pair<Natural, int>> pairs;
};

struct SearchOptions {
  /// Variables available to the search; the first is the free one.
  std::vector<std::string> vars{"v0", "v1", "v2"};
  /// When nonzero, only Sigma*_level formulas are considered.
  unsigned level = 0;
};

/// Formulas with exactly the free variable vars[0] up to the size bound
/// that have a unique satisfier.
DefinabilityReport definable_elements(const FiniteModel& m, std::size_t max_size,
                                      const SearchOptions& opts = {});
Json to_json(const DefinabilityReport& r, const FiniteModel& m);

struct EquivalenceReport {
  bool equivalent = true;
  unsigned level = 0;
  std::size_t max_size = 0;
  /// Least distinguishing Sigma*_level sentence, with its truth in each model.
  std::optional<Formula> witness;
  bool true_in_first = false;
};

/// Compares the Sigma*_n sentences up to the size bound (n = 0: all).
EquivalenceReport n_equiv(const FiniteModel& a, const FiniteModel& b, unsigned n,
                          std::size_t max_size, const SearchOptions& opts = {});
Json to_json(const EquivalenceReport& r);

}  // namespace metalogic
