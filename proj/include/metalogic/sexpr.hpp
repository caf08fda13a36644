#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metalogic/syntax.hpp"

namespace metalogic {

/// Malformed surface text. `offset` is a byte offset into the input;
/// `line` and `column` are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line,
             std::size_t column);
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_, line_, column_;
};

// Surface grammar (';' starts a comment that runs to the end of the line):
//
//   formula := (= term term) | (R term ...) | R
//            | (not formula) | (and formula formula ...) | (or formula formula ...)
//            | (implies formula formula) | (iff formula formula)
//            | (exists var formula) | (forall var formula) | (exists! var formula)
//   term    := constant | var | (f term ...) | (num <decimal>)
//
// Bare identifiers in term position are constants when the signature
// declares them and variables otherwise. n-ary and/or nest to the right.
// implies, iff and exists! are expanded on the spot.

Formula parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);
/// Whitespace-separated sequence of formulas (e.g. a corpus file).
std::vector<Formula> parse_formulas(std::string_view text, const Signature& sig);

struct RenderOptions {
  /// Print numeral-shaped subterms of value >= 2 as (num n).
  bool compact_numerals = true;
};

std::string render(const Formula& f, RenderOptions opts = {});
std::string render(const Term& t, RenderOptions opts = {});

/// True for words the surface grammar reserves.
bool is_reserved_word(std::string_view word);

}  // namespace metalogic
