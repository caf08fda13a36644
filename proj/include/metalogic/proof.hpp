#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "metalogic/json_io.hpp"
#include "metalogic/syntax.hpp"

namespace metalogic {

class ProofError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hilbert calculus. A -> B abbreviates (or (not A) B).
//
//   K        A -> (B -> A)
//   S        (A -> (B -> C)) -> ((A -> B) -> (A -> C))
//   N        (not B -> not A) -> ((not B -> A) -> B)
//   DN       not not A -> A
//   OR1      A -> (A or B)
//   OR2      B -> (A or B)
//   OR3      (A -> C) -> ((B -> C) -> ((A or B) -> C))
//   AND1     (A and B) -> A
//   AND2     (A and B) -> B
//   AND3     A -> (B -> (A and B))
//   ALL-INST (forall x A) -> A[t/x]          t free for x in A
//   EX-INTRO A[t/x] -> exists x A            t free for x in A
//   ALL-DIST (forall x (A -> B)) -> (A -> forall x B)    x not free in A
//   EX-ELIM  (forall x (A -> B)) -> ((exists x A) -> B)  x not free in B
//   EQ-REFL  t = t
//   EQ-SUB   s = t -> (A -> A')   A atomic, A' replaces some s in A by t
//
// Rules: mp (refs [i, j], line j is line i -> this line) and
// gen (refs [i], var x; x must not be free in a premise line i rests on).
// Line numbers are 1-based.

enum class Rule { Axiom, Premise, ModusPonens, Generalization };

struct ProofLine {
  Formula formula;
  Rule rule = Rule::Axiom;
  std::string scheme;
  std::vector<std::size_t> refs;
  std::string var;
  /// Optional instantiating term for ALL-INST / EX-INTRO.
  std::optional<Term> term;
};

struct Proof {
  Signature signature = Signature::arithmetic_core();
  std::vector<ProofLine> lines;
};

struct ProofVerdict {
  bool valid = false;
  /// First invalid line, 1-based.
  std::optional<std::size_t> line;
  std::string reason;
};

const std::vector<std::string>& scheme_ids();

/// Empty string when f is an instance of the scheme, else the reason.
std::string check_scheme(const std::string& scheme, const Formula& f,
                         const std::optional<Term>& term = std::nullopt);

ProofVerdict check_proof(const Proof& p, const std::vector<Formula>& premises);

// {"signature": {...}?, "lines": [{"formula": sexpr, "rule": "axiom"|"premise"|"mp"|"gen",
//   "scheme": id, "refs": [i, ...], "var": x, "term": sexpr}]}
Proof proof_from_json(const Json& j);
Json to_json(const Proof& p);
Json to_json(const ProofVerdict& v);

}  // namespace metalogic
