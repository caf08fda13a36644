#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "metalogic/syntax.hpp"

namespace metalogic {

using Natural = boost::multiprecision::cpp_int;

std::string to_string(const Natural& n);
/// Parses a decimal natural number; throws std::invalid_argument.
Natural parse_natural(std::string_view text);

/// decode() on a number outside the image of encode().
class NotACodeError : public std::runtime_error {
 public:
  NotACodeError(std::string layer, const std::string& what)
      : std::runtime_error("not a code at " + layer + ": " + what),
        layer_(std::move(layer)) {}
  /// Path of the first malformed layer, e.g. "root.body.lhs".
  const std::string& layer() const { return layer_; }

 private:
  std::string layer_;
};

/// Injective pairing on N with a self-delimiting bit layout:
/// pair(a, b) = "1" ++ E(a) ++ E(b), E an Elias-delta style prefix code of
/// a+1. Both components are strictly smaller than the pair and the code
/// length grows additively, so nested codes stay linear in the syntax size.
Natural pair(const Natural& a, const Natural& b);
/// Inverse of pair(); nullopt when `c` is not in its image.
std::optional<std::pair<Natural, Natural>> unpair(const Natural& c);

/// Injective code for symbol and variable names.
Natural encode_name(const std::string& name);
std::optional<std::string> decode_name(const Natural& code);

/// Goedel code of a term or formula. A proper subterm or subformula always
/// has a strictly smaller code than the whole.
Natural encode(const Term& t);
Natural encode(const Formula& f);

using Syntax = std::variant<Term, Formula>;
Syntax decode(const Natural& code);
Formula decode_formula(const Natural& code);
Term decode_term(const Natural& code);

/// Binary numeral a0 + 2*(a1 + 2*(... + 2*ak)) with 2 written (1+1).
Term numeral(const Natural& n);
Term numeral(unsigned long n);
/// Inverse of numeral(); nullopt for terms that are not numerals.
std::optional<Natural> numeral_value(const Term& t);

/// substitute(f, v, numeral(n)).
Formula dot_substitute(const Formula& f, const std::string& var, const Natural& n);

}  // namespace metalogic
