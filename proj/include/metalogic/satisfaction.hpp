#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metalogic/coding.hpp"
#include "metalogic/eval.hpp"
#include "metalogic/json_io.hpp"
#include "metalogic/model.hpp"

namespace metalogic {

/// A compositional clause that failed at (code, assignment).
struct ClauseViolation {
  std::string clause;
  Natural code;
  /// Pairs (variable, value) over the free variables of the formula.
  std::vector<std::pair<std::string, std::string>> assignment;
  bool expected = false;
  bool got = false;
};

struct ClauseReport {
  std::vector<ClauseViolation> violations;
  /// Codes whose clause needed an entry the oracle does not have.
  std::vector<Natural> domain_gaps;
  /// Set when quantifier clauses only range over an initial segment.
  bool bounded_approximation = false;
  std::size_t clauses_checked = 0;
  bool ok() const { return violations.empty() && domain_gaps.empty(); }
};

Json to_json(const ClauseReport& r);

/// Formulas of f in post-order, f itself last; duplicates removed.
std::vector<Formula> subformulas(const Formula& f);

// ---- Compositional satisfaction over a finite model ---------------------

/// S(code, alpha) with alpha restricted to the free variables of the coded
/// formula; nullopt outside the oracle's domain.
using SatOracle = std::function<std::optional<bool>(const Natural&, const FiniteAssignment&)>;

/// Checks, for every f in fs and every assignment of its free variables, the
/// clause for f's main connective: atoms against the model (function-graph
/// atoms f(x..)=y labelled separately), not/and/or against S on the
/// immediate subformulas, and forall v / exists v against S on the body
/// under every beta that agrees with alpha off v.
ClauseReport check_compositional(const SatOracle& s, const std::vector<Formula>& fs,
                                 const FiniteModel& m);

/// Table keyed by (code, assignment restricted to free variables).
using SatTable = std::map<std::pair<Natural, FiniteAssignment>, bool>;
/// The satisfaction table of the model on fs and all their subformulas.
SatTable satisfaction_table(const std::vector<Formula>& fs, const FiniteModel& m);
SatOracle oracle_from_table(const SatTable& table);
/// Adds the true entries with exactly `params` free variables as the coded
/// relation S(code, a1..ak), values in variable-name order.
void add_table_as_coded(FiniteModel& m, const std::string& name, const SatTable& table,
                        std::size_t params);

// ---- Indexed form for sweeping many models --------------------------------

/// fs closed under subformulas and encoded once. Nodes are in post-order,
/// so children precede parents.
class FormulaIndex {
 public:
  explicit FormulaIndex(const std::vector<Formula>& fs);
  std::size_t size() const { return formulas_.size(); }
  const Formula& formula(std::size_t i) const { return formulas_[i]; }
  const Natural& code(std::size_t i) const { return codes_[i]; }
  /// Free variables of node i, sorted.
  const std::vector<std::string>& vars(std::size_t i) const { return vars_[i]; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  /// Nodes having node i as an immediate subformula.
  const std::vector<std::size_t>& parents(std::size_t i) const { return parents_[i]; }
  /// For child k of node i, the position of each child variable among the
  /// node's variables; -1 marks the variable bound at node i.
  const std::vector<int>& slots(std::size_t i, std::size_t k) const { return slots_[i][k]; }
  std::optional<std::size_t> find(const Natural& code) const;
  /// Assignments of node i over a universe of n elements.
  std::size_t assignments(std::size_t i, int n) const;
  /// Assignment number a of node i: the first variable is least significant.
  FiniteAssignment assignment(std::size_t i, std::size_t a, int n) const;

 private:
  std::vector<Formula> formulas_;
  std::vector<Natural> codes_;
  std::vector<std::vector<std::string>> vars_;
  std::vector<std::vector<std::size_t>> children_, parents_;
  std::vector<std::vector<std::vector<int>>> slots_;
  std::map<Natural, std::size_t> by_code_;
};

/// values[i][a]: truth of node i under assignment number a.
struct DenseTable {
  int universe = 0;
  std::vector<std::vector<std::uint8_t>> values;
};

/// Every entry computed with eval_finite.
DenseTable dense_satisfaction(const FormulaIndex& ix, const FiniteModel& m);
/// Same clauses as the oracle form, read off the dense table.
ClauseReport check_compositional(const FormulaIndex& ix, const DenseTable& t, const FiniteModel& m);
/// Only the clauses that read entry (node, a): the node's own clause at a
/// and each parent clause instance that consults it.
ClauseReport check_entry(const FormulaIndex& ix, const DenseTable& t, const FiniteModel& m,
                         std::size_t node, std::size_t a);

// ---- Bounded arithmetic context -----------------------------------------

using NatSatOracle = std::function<std::optional<bool>(const Natural&, const NatAssignment&)>;

/// Same clauses over N with variables ranging below `bound`; quantifier
/// clauses are therefore a bounded approximation and the report says so.
ClauseReport check_compositional_nat(const NatSatOracle& s, const std::vector<Formula>& fs,
                                     unsigned long bound);

// ---- Truth for sentences of bounded depth -------------------------------

/// Map from sentence code to truth value with the domain it claims.
struct TruthOracle {
  std::map<Natural, bool> values;
  unsigned depth = 0;
  unsigned numeral_bound = 0;
};
/// [[code, bool], ...]; codes as decimal strings.
Json to_json(const TruthOracle& t);
TruthOracle truth_oracle_from_json(const Json& j);

/// Sentences over {=, not, or, exists} with numerals below b, depth <= x,
/// at most x variables and size <= size_cap (numerals weigh 1), closed
/// under the immediate subsentences the clauses consult (the existential
/// clause consults body(num y) for y < b).
struct CtCorpus {
  enum class Kind : std::uint8_t { Atom, Not, Or, Exists };
  unsigned depth = 0;
  unsigned numeral_bound = 0;
  std::vector<Formula> sentences;
  std::vector<Natural> codes;
  std::vector<Kind> kinds;
  /// Children of sentence i are child_index[child_begin[i] .. child_begin[i+1]).
  std::vector<std::uint32_t> child_begin;
  std::vector<std::uint32_t> child_index;
  /// For atoms, whether the two numerals have equal value.
  std::vector<std::uint8_t> atom_value;
  std::map<Natural, std::uint32_t> index;
};

CtCorpus build_ct_corpus(unsigned x, unsigned b, std::size_t size_cap = 8);

/// Truth in N of a corpus sentence (equality with numerals is decidable).
bool ct_exact_truth(const Formula& sentence, unsigned b);
std::vector<std::uint8_t> ct_exact_bits(const CtCorpus& corpus);
TruthOracle ct_exact_oracle(const CtCorpus& corpus);

/// CT1 atoms, CT2 or, CT3 not, CT4 exists (witnesses y < b, reported as a
/// bounded approximation). bits[i] is the oracle's value on sentence i.
ClauseReport check_ct(const CtCorpus& corpus, std::span<const std::uint8_t> bits);
/// Looks each corpus sentence up in the oracle; missing codes are gaps.
ClauseReport check_ct(const TruthOracle& t, unsigned x, unsigned b, std::size_t size_cap = 8);

}  // namespace metalogic
