#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "metalogic/coding.hpp"
#include "metalogic/model.hpp"
#include "metalogic/syntax.hpp"

namespace metalogic {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Truth { False, True, Unknown };
const char* to_string(Truth t);
inline Truth truth_of(bool b) { return b ? Truth::True : Truth::False; }

struct EvalBudget {
  /// Witnesses tried for a quantifier that is not of a bounded shape.
  unsigned long search_bound = 64;
  /// Largest bound a bounded quantifier is run to before giving up.
  unsigned long bounded_cap = 1'000'000;
  std::size_t max_depth = 512;
};

/// Interpretations of symbols beyond the arithmetic core, e.g. a truth
/// predicate T or a Skolem function H.
struct NatExpansion {
  std::map<std::string, std::function<bool(std::span<const Natural>)>> relations;
  std::map<std::string, std::function<Natural(std::span<const Natural>)>> functions;
};

using NatAssignment = std::map<std::string, Natural>;

struct NatVerdict {
  Truth value = Truth::Unknown;
  /// Definite, and every quantifier had a bounded shape.
  bool exact = false;
};

/// Throws EvalError on an unbound variable or an uninterpreted symbol.
Natural eval_term(const Term& t, const NatAssignment& asn = {}, const NatExpansion& ex = {});

/// Three-valued evaluation in the standard model. Never returns a definite
/// verdict that differs from the classical one.
NatVerdict eval_nat(const Formula& f, const NatAssignment& asn = {},
                    const EvalBudget& budget = {}, const NatExpansion& ex = {});

/// Recognizes exists x (x < t and psi) and forall x (not (x < t) or psi)
/// with x not free in t. Returns (x, t, psi).
struct BoundedShape {
  std::string var;
  Term bound;
  Formula body;
};
std::optional<BoundedShape> bounded_shape(const Formula& f);
bool all_quantifiers_bounded(const Formula& f);
Formula bounded_exists(const std::string& var, const Term& bound, const Formula& body);
Formula bounded_forall(const std::string& var, const Term& bound, const Formula& body);

using FiniteAssignment = std::map<std::string, int>;

/// Total evaluation in a finite model. Closed terms built from 0, 1, + and *
/// that the model does not interpret denote natural numbers (codes); they
/// may fill the first slot of a coded relation or be compared with "=".
/// Throws EvalError on a sort or signature mismatch.
bool eval_finite(const Formula& f, const FiniteModel& m, const FiniteAssignment& asn = {});

}  // namespace metalogic
