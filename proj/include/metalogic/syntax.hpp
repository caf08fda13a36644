#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metalogic {

/// Raised for formulas or terms that do not fit a signature (undeclared
/// symbol, arity mismatch, name clash).
class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbols of the arithmetic core {0, 1, +, *, <}.
namespace core {
inline constexpr std::string_view kZero = "0";
inline constexpr std::string_view kOne = "1";
inline constexpr std::string_view kPlus = "+";
inline constexpr std::string_view kTimes = "*";
inline constexpr std::string_view kLess = "<";
}  // namespace core

/// A first-order signature. Equality is builtin and never declared.
///
/// Names are unique across constants, functions and relations. Functions
/// have arity >= 1; relations have arity >= 0 (nullary relations act as
/// propositional letters). When `arithmetic` is set the core symbols are
/// present with arities 0/0/2/2/2.
struct Signature {
  std::vector<std::string> constants;
  std::map<std::string, int> functions;
  std::map<std::string, int> relations;
  bool arithmetic = false;

  static Signature empty();
  static Signature arithmetic_core();
  /// The language {in} of a single binary membership relation.
  static Signature membership();

  bool has_constant(std::string_view name) const;
  std::optional<int> function_arity(std::string_view name) const;
  std::optional<int> relation_arity(std::string_view name) const;
  bool declares(std::string_view name) const;

  /// Throws SignatureError when an invariant is broken.
  void validate() const;

  Signature with_constant(std::string name) const;
  Signature with_function(std::string name, int arity) const;
  Signature with_relation(std::string name, int arity) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

class Term {
 public:
  enum class Kind { Variable, Constant, Apply };

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  bool is_variable() const { return kind() == Kind::Variable; }
  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_apply() const { return kind() == Kind::Apply; }
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  /// Identity of the shared node; equal for copies of one term.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Desugared first-order formula: =, relation atoms, not, and, or, exists,
/// forall. Nodes are immutable and shared between copies.
class Formula {
 public:
  enum class Kind { Equal, Relation, Not, And, Or, Exists, Forall };

  static Formula equal(Term lhs, Term rhs);
  static Formula relation(std::string name, std::vector<Term> args);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  Kind kind() const { return node_->kind; }
  bool is_atomic() const {
    return kind() == Kind::Equal || kind() == Kind::Relation;
  }
  bool is_quantifier() const {
    return kind() == Kind::Exists || kind() == Kind::Forall;
  }
  bool is_binary() const { return kind() == Kind::And || kind() == Kind::Or; }

  /// Relation name (Relation) or bound variable (Exists/Forall).
  const std::string& name() const { return node_->name; }
  /// Arguments of an atom; for Equal, {lhs, rhs}.
  std::span<const Term> terms() const { return node_->terms; }
  /// Body of Not/Exists/Forall, left operand of And/Or.
  const Formula& body() const { return node_->children.front(); }
  const Formula& lhs() const { return node_->children.front(); }
  const Formula& rhs() const { return node_->children.back(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> terms;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Surface connectives; all of them expand into the core connectives.
Formula implies(const Formula& a, const Formula& b);
Formula iff(const Formula& a, const Formula& b);
/// exists x (phi(x) and forall z (not phi(z) or z = x)), z fresh.
Formula exists_unique(const std::string& var, const Formula& body);
/// Conjunction of the list; the empty conjunction is 0 = 0.
Formula conjunction_of(std::span<const Formula> parts);

using VarSet = std::set<std::string>;

VarSet free_vars(const Term& t);
VarSet free_vars(const Formula& f);
/// Every variable name occurring in f, free or bound.
VarSet all_vars(const Formula& f);
bool is_sentence(const Formula& f);
bool is_closed(const Term& t);

/// Smallest v<k> not in `avoid`.
std::string fresh_variable(const VarSet& avoid);

Term substitute(const Term& t, const std::string& var, const Term& replacement);
/// Capture-avoiding substitution of `replacement` for the free occurrences
/// of `var`. Bound variables are renamed only when a capture would occur.
Formula substitute(const Formula& f, const std::string& var,
                   const Term& replacement);
/// Simultaneous capture-avoiding substitution.
Formula substitute_all(const Formula& f,
                       const std::map<std::string, Term>& replacements);
Formula rename_bound(const Formula& f, const std::string& from,
                     const std::string& to);

bool alpha_equal(const Formula& a, const Formula& b);

/// Number of non-variable symbol occurrences: every connective, quantifier,
/// relation symbol, equality sign, constant and function symbol counts 1;
/// variables (free, bound or binding) count 0.
std::size_t ast_size(const Term& t);
std::size_t ast_size(const Formula& f);

/// Checks arities and declarations against `sig`; throws SignatureError.
void check_signature(const Formula& f, const Signature& sig);
void check_signature(const Term& t, const Signature& sig);

/// Relation and function symbols mentioned in f.
std::set<std::string> relation_symbols(const Formula& f);
std::set<std::string> function_symbols(const Formula& f);

}  // namespace metalogic
