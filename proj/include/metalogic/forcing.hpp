#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metalogic/coding.hpp"
#include "metalogic/json_io.hpp"
#include "metalogic/syntax.hpp"

namespace metalogic {

class ForcingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Set formulas are arithmetic formulas with membership atoms (X t).
inline constexpr std::string_view kSetVariable = "X";
Signature set_signature();

/// A finite binary sequence; s[n] is the n-th bit.
using Condition = std::vector<bool>;
std::string to_string(const Condition& s);
/// Accepts a string of '0' and '1' (possibly empty).
Condition parse_condition(std::string_view text);
/// t extends s (s is a prefix of t).
bool extends(const Condition& t, const Condition& s);
/// Order used to pick the least extension: shorter first, then
/// lexicographic with 0 < 1.
bool length_lex_less(const Condition& a, const Condition& b);

/// 1 + the largest membership index the formula can consult, when every
/// quantifier is bounded (variables in membership arguments are bounded by
/// their quantifier's bound); 0 when X does not occur; nullopt otherwise.
std::optional<Natural> bit_bound(const Formula& f);

enum class Forcing { Forced, NotForced, Unknown };
const char* to_string(Forcing f);

/// Rewrites and/forall into not/or/exists, as the forcing clauses only
/// cover atoms, not, or and exists.
Formula forcing_normal_form(const Formula& f);

/// Exact decision for bit-bounded sentences: Forced or NotForced.
/// Throws ForcingError when bit_bound(f) is nullopt or f is not a sentence.
Forcing forces(const Condition& s, const Formula& f);

struct ForcingBudget {
  /// Witnesses tried for an unbounded existential.
  unsigned long witnesses = 32;
  /// Extra bits explored below a negation whose scope is not bit-bounded.
  unsigned extension_bits = 6;
};
/// Sound three-valued forcing for arbitrary sentences.
Forcing forces_budget(const Condition& s, const Formula& f, const ForcingBudget& budget);

struct Stage {
  std::size_t index = 0;
  /// phi_k at an even stage, xi_k at an odd one.
  std::size_t k = 0;
  bool even = true;
  Condition before, after;
  /// "forced", "no extension forces" or "truth bit".
  std::string justification;
};

struct StageTrace {
  std::vector<Stage> stages;
  Condition final_condition() const { return stages.empty() ? Condition{} : stages.back().after; }
};

using TruthFunction = std::function<bool(const Formula&)>;

/// Stage 2k extends to the least strict extension forcing phi_k, if any;
/// stage 2k+1 appends the truth bit of xi_k.
StageTrace build_generic(std::size_t stages, const std::vector<Formula>& phis,
                         const std::vector<Formula>& xis, const TruthFunction& truth);

/// Bit k is the digit appended at stage 2k+1. Throws ForcingError on a
/// malformed trace.
std::vector<bool> decode_truth(const StageTrace& trace);

struct AuditEntry {
  std::size_t k = 0;
  /// The final condition forces phi_k (true) or its negation (false).
  std::optional<bool> settled;
  std::size_t stage = 0;
};
struct AuditReport {
  std::vector<AuditEntry> entries;
  bool all_settled() const;
};
AuditReport audit_genericity(const StageTrace& trace, const std::vector<Formula>& phis);

Json to_json(const StageTrace& t, const std::vector<Formula>& phis, const std::vector<Formula>& xis);
StageTrace trace_from_json(const Json& j);
Json to_json(const AuditReport& r);

}  // namespace metalogic
