#include "metalogic/sexpr.hpp"

#include <array>
#include <cctype>
#include <optional>

#include "metalogic/coding.hpp"

namespace metalogic {

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::size_t line, std::size_t column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      offset_(offset),
      line_(line),
      column_(column) {}

namespace {

constexpr std::array<std::string_view, 10> kReserved = {
    "=", "not", "and", "or", "implies", "iff", "exists", "forall", "exists!", "num"};

struct Token {
  enum class Kind { Open, Close, Word, End } kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, offset, line, col);
  }

 private:
  void advance() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (pos_ < src_.size() && src_[pos_] == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= src_.size()) {
      current_ = {Token::Kind::End, {}, pos_};
      return;
    }
    const char c = src_[pos_];
    if (c == '(' || c == ')') {
      current_ = {c == '(' ? Token::Kind::Open : Token::Kind::Close,
                  src_.substr(pos_, 1), pos_};
      ++pos_;
      return;
    }
    const std::size_t start = pos_;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';')
      ++pos_;
    current_ = {Token::Kind::Word, src_.substr(start, pos_ - start), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::End, {}, 0};
};

bool valid_variable_name(std::string_view w) {
  if (w.empty()) return false;
  const auto c0 = static_cast<unsigned char>(w[0]);
  if (!std::isalpha(c0) && c0 != '_') return false;
  for (char c : w) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '\'') return false;
  }
  return !is_reserved_word(w);
}

class Parser {
 public:
  Parser(std::string_view src, const Signature& sig) : lex_(src), sig_(sig) {}

  bool at_end() const { return lex_.peek().kind == Token::Kind::End; }

  void expect_end() {
    if (!at_end()) lex_.fail("unexpected trailing input", lex_.peek().offset);
  }

  Formula formula() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::Word) {
      const std::string name(t.text);
      auto arity = sig_.relation_arity(name);
      if (!arity) lex_.fail("expected a formula, found '" + name + "'", t.offset);
      if (*arity != 0)
        lex_.fail("relation '" + name + "' expects " + std::to_string(*arity) +
                      " arguments",
                  t.offset);
      return Formula::relation(name, {});
    }
    if (t.kind != Token::Kind::Open) lex_.fail("expected a formula", t.offset);
    Token head = lex_.take();
    if (head.kind != Token::Kind::Word) lex_.fail("expected an operator", head.offset);
    const std::string_view op = head.text;
    Formula result = [&]() -> Formula {
      if (op == "=") {
        Term a = term();
        Term b = term();
        return Formula::equal(a, b);
      }
      if (op == "not") return Formula::negation(formula());
      if (op == "and" || op == "or") {
        std::vector<Formula> parts;
        parts.push_back(formula());
        parts.push_back(formula());
        while (lex_.peek().kind != Token::Kind::Close) parts.push_back(formula());
        Formula acc = parts.back();
        for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
          acc = op == "and" ? Formula::conjunction(*it, acc)
                            : Formula::disjunction(*it, acc);
        return acc;
      }
      if (op == "implies" || op == "iff") {
        Formula a = formula();
        Formula b = formula();
        return op == "implies" ? implies(a, b) : iff(a, b);
      }
      if (op == "exists" || op == "forall" || op == "exists!") {
        Token v = lex_.take();
        if (v.kind != Token::Kind::Word || !valid_variable_name(v.text) ||
            sig_.declares(v.text))
          lex_.fail("expected a variable after '" + std::string(op) + "'", v.offset);
        std::string var(v.text);
        Formula body = formula();
        if (op == "exists") return Formula::exists(var, body);
        if (op == "forall") return Formula::forall(var, body);
        return exists_unique(var, body);
      }
      const std::string name(op);
      auto arity = sig_.relation_arity(name);
      if (!arity) {
        if (sig_.declares(name))
          lex_.fail("'" + name + "' is not a relation symbol", head.offset);
        lex_.fail("undeclared relation '" + name + "'", head.offset);
      }
      std::vector<Term> args;
      while (lex_.peek().kind != Token::Kind::Close && lex_.peek().kind != Token::Kind::End)
        args.push_back(term());
      if (args.size() != static_cast<std::size_t>(*arity))
        lex_.fail("relation '" + name + "' expects " + std::to_string(*arity) +
                      " arguments, got " + std::to_string(args.size()),
                  head.offset);
      return Formula::relation(name, std::move(args));
    }();
    close(t.offset);
    return result;
  }

  Term term() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::Word) {
      const std::string name(t.text);
      if (sig_.has_constant(name)) return Term::constant(name);
      if (sig_.declares(name)) lex_.fail("'" + name + "' is not a constant", t.offset);
      if (!valid_variable_name(name)) {
        if (std::isdigit(static_cast<unsigned char>(name[0])))
          lex_.fail("undeclared constant '" + name + "' (use (num " + name + "))",
                    t.offset);
        lex_.fail("invalid variable name '" + name + "'", t.offset);
      }
      return Term::variable(name);
    }
    if (t.kind != Token::Kind::Open) lex_.fail("expected a term", t.offset);
    Token head = lex_.take();
    if (head.kind != Token::Kind::Word) lex_.fail("expected a function symbol", head.offset);
    if (head.text == "num") {
      Token n = lex_.take();
      if (n.kind != Token::Kind::Word) lex_.fail("expected a decimal number", n.offset);
      Natural value;
      try {
        value = parse_natural(n.text);
      } catch (const std::invalid_argument&) {
        lex_.fail("expected a decimal number", n.offset);
      }
      if (!has_numeral_symbols())
        lex_.fail("numerals need 0, 1, + and * in the signature", head.offset);
      close(t.offset);
      return numeral(value);
    }
    const std::string name(head.text);
    auto arity = sig_.function_arity(name);
    if (!arity) {
      if (sig_.declares(name))
        lex_.fail("'" + name + "' is not a function symbol", head.offset);
      lex_.fail("undeclared function '" + name + "'", head.offset);
    }
    std::vector<Term> args;
    while (lex_.peek().kind != Token::Kind::Close && lex_.peek().kind != Token::Kind::End)
      args.push_back(term());
    if (args.size() != static_cast<std::size_t>(*arity))
      lex_.fail("function '" + name + "' expects " + std::to_string(*arity) +
                    " arguments, got " + std::to_string(args.size()),
                head.offset);
    close(t.offset);
    return Term::apply(name, std::move(args));
  }

 private:
  bool has_numeral_symbols() const {
    return sig_.has_constant(core::kZero) && sig_.has_constant(core::kOne) &&
           sig_.function_arity(core::kPlus) == 2 && sig_.function_arity(core::kTimes) == 2;
  }

  void close(std::size_t open_offset) {
    Token c = lex_.take();
    if (c.kind != Token::Kind::Close) {
      if (c.kind == Token::Kind::End) lex_.fail("unbalanced '('", open_offset);
      lex_.fail("expected ')'", c.offset);
    }
  }

  Lexer lex_;
  const Signature& sig_;
};

void render_term(const Term& t, const RenderOptions& opts, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant:
      out += t.name();
      return;
    case Term::Kind::Apply:
      if (opts.compact_numerals && t.name() == core::kPlus) {
        if (auto v = numeral_value(t)) {
          out += "(num ";
          out += to_string(*v);
          out += ')';
          return;
        }
      }
      out += '(';
      out += t.name();
      for (const auto& a : t.args()) {
        out += ' ';
        render_term(a, opts, out);
      }
      out += ')';
      return;
  }
}

void render_formula(const Formula& f, const RenderOptions& opts, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      out += "(= ";
      render_term(f.terms()[0], opts, out);
      out += ' ';
      render_term(f.terms()[1], opts, out);
      out += ')';
      return;
    case Formula::Kind::Relation:
      if (f.terms().empty()) {
        out += f.name();
        return;
      }
      out += '(';
      out += f.name();
      for (const auto& t : f.terms()) {
        out += ' ';
        render_term(t, opts, out);
      }
      out += ')';
      return;
    case Formula::Kind::Not:
      out += "(not ";
      render_formula(f.body(), opts, out);
      out += ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out += f.kind() == Formula::Kind::And ? "(and " : "(or ";
      render_formula(f.lhs(), opts, out);
      out += ' ';
      render_formula(f.rhs(), opts, out);
      out += ')';
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind() == Formula::Kind::Exists ? "(exists " : "(forall ";
      out += f.name();
      out += ' ';
      render_formula(f.body(), opts, out);
      out += ')';
      return;
  }
}

}  // namespace

bool is_reserved_word(std::string_view word) {
  for (auto r : kReserved)
    if (r == word) return true;
  return false;
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Term t = p.term();
  p.expect_end();
  return t;
}

std::vector<Formula> parse_formulas(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  std::vector<Formula> out;
  while (!p.at_end()) out.push_back(p.formula());
  return out;
}

std::string render(const Formula& f, RenderOptions opts) {
  std::string out;
  render_formula(f, opts, out);
  return out;
}

std::string render(const Term& t, RenderOptions opts) {
  std::string out;
  render_term(t, opts, out);
  return out;
}

}  // namespace metalogic
