#include "metalogic/coding.hpp"

#include <array>

namespace metalogic {

namespace mp = boost::multiprecision;

std::string to_string(const Natural& n) { return n.str(); }

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  Natural n = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a decimal natural number: " + std::string(text));
    n = n * 10 + (c - '0');
  }
  return n;
}

// ------------------------------------------------------------------ pairing

namespace {

std::size_t bit_length(const Natural& n) {
  return n == 0 ? 0 : static_cast<std::size_t>(mp::msb(n)) + 1;
}

struct BitString {
  Natural value;
  std::size_t length = 0;
};

// Elias-delta style code of n + 1: gamma(L) followed by the L-1 low bits of
// m = n + 1, where L is the bit length of m.
BitString prefix_code(const Natural& n) {
  const Natural m = n + 1;
  const std::size_t len = bit_length(m);
  const std::size_t len_bits = bit_length(Natural(len));
  BitString out;
  // gamma(L): (len_bits - 1) zeros, then L itself.
  out.value = Natural(len);
  out.length = 2 * len_bits - 1;
  const Natural low = m - (Natural(1) << (len - 1));
  out.value = (out.value << (len - 1)) | low;
  out.length += len - 1;
  return out;
}

class BitReader {
 public:
  BitReader(const Natural& c, std::size_t length) : c_(c), pos_(length) {}
  bool done() const { return pos_ == 0; }
  std::optional<bool> next() {
    if (pos_ == 0) return std::nullopt;
    --pos_;
    return mp::bit_test(c_, static_cast<unsigned>(pos_));
  }
  std::optional<Natural> read(std::size_t count) {
    if (count > pos_) return std::nullopt;
    pos_ -= count;
    if (count == 0) return Natural(0);
    Natural v = c_ >> pos_;
    return Natural(v & ((Natural(1) << count) - 1));
  }
  std::optional<Natural> read_prefix_code() {
    std::size_t zeros = 0;
    for (;;) {
      auto b = next();
      if (!b) return std::nullopt;
      if (*b) break;
      ++zeros;
    }
    auto rest = read(zeros);
    if (!rest) return std::nullopt;
    const Natural len = (Natural(1) << zeros) | *rest;
    if (len > pos_ + 1) return std::nullopt;
    const auto l = len.convert_to<std::size_t>();
    auto low = read(l - 1);
    if (!low) return std::nullopt;
    return ((Natural(1) << (l - 1)) | *low) - 1;
  }

 private:
  const Natural& c_;
  std::size_t pos_;
};

}  // namespace

Natural pair(const Natural& a, const Natural& b) {
  const BitString ea = prefix_code(a);
  const BitString eb = prefix_code(b);
  Natural out = Natural(1) << (ea.length + eb.length);
  out |= ea.value << eb.length;
  out |= eb.value;
  return out;
}

std::optional<std::pair<Natural, Natural>> unpair(const Natural& c) {
  if (c <= 0) return std::nullopt;
  BitReader r(c, bit_length(c));
  r.next();  // leading 1
  auto a = r.read_prefix_code();
  if (!a) return std::nullopt;
  auto b = r.read_prefix_code();
  if (!b || !r.done()) return std::nullopt;
  return std::make_pair(std::move(*a), std::move(*b));
}

// -------------------------------------------------------------------- names

namespace {

constexpr std::array<std::string_view, 5> kCoreNames = {
    core::kZero, core::kOne, core::kPlus, core::kTimes, core::kLess};

std::optional<unsigned long> variable_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'v') return std::nullopt;
  if (name.size() > 2 && name[1] == '0') return std::nullopt;
  unsigned long k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    if (k > (~0UL - 9) / 10) return std::nullopt;
    k = k * 10 + static_cast<unsigned long>(name[i] - '0');
  }
  return k;
}

}  // namespace

Natural encode_name(const std::string& name) {
  for (std::size_t i = 0; i < kCoreNames.size(); ++i)
    if (name == kCoreNames[i]) return Natural(i);
  if (auto k = variable_index(name)) return Natural(5) + 2 * Natural(*k);
  Natural bytes = 1;
  for (unsigned char ch : name) bytes = (bytes << 8) | ch;
  return Natural(6) + 2 * bytes;
}

std::optional<std::string> decode_name(const Natural& code) {
  if (code < 5) return std::string(kCoreNames[code.convert_to<std::size_t>()]);
  if (mp::bit_test(code, 0)) {
    const Natural k = (code - 5) / 2;
    if (k > Natural(~0UL)) return std::nullopt;
    return "v" + k.str();
  }
  Natural bytes = (code - 6) / 2;
  if (bytes < 1) return std::nullopt;
  const std::size_t len = bit_length(bytes);
  if ((len - 1) % 8 != 0) return std::nullopt;
  std::string out((len - 1) / 8, '\0');
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<char>(static_cast<unsigned>(bytes & 0xFF));
    bytes >>= 8;
  }
  // Names that have a dedicated short code never use the byte encoding.
  if (encode_name(out) != code) return std::nullopt;
  return out;
}

// ------------------------------------------------------------------ encoding

namespace {

enum Tag : unsigned {
  kTagVariable = 1,
  kTagConstant = 2,
  kTagApply = 3,
  kTagEqual = 4,
  kTagRelation = 5,
  kTagNot = 6,
  kTagAnd = 7,
  kTagOr = 8,
  kTagExists = 9,
  kTagForall = 10,
};

Natural encode_list(std::span<const Term> items) {
  Natural acc = 0;
  for (auto it = items.rbegin(); it != items.rend(); ++it) acc = pair(encode(*it), acc);
  return acc;
}

}  // namespace

Natural encode(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return pair(kTagVariable, encode_name(t.name()));
    case Term::Kind::Constant:
      return pair(kTagConstant, encode_name(t.name()));
    case Term::Kind::Apply:
      return pair(kTagApply, pair(encode_name(t.name()), encode_list(t.args())));
  }
  return 0;
}

Natural encode(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      return pair(kTagEqual, encode_list(f.terms()));
    case Formula::Kind::Relation:
      return pair(kTagRelation, pair(encode_name(f.name()), encode_list(f.terms())));
    case Formula::Kind::Not:
      return pair(kTagNot, encode(f.body()));
    case Formula::Kind::And:
      return pair(kTagAnd, pair(encode(f.lhs()), encode(f.rhs())));
    case Formula::Kind::Or:
      return pair(kTagOr, pair(encode(f.lhs()), encode(f.rhs())));
    case Formula::Kind::Exists:
      return pair(kTagExists, pair(encode_name(f.name()), encode(f.body())));
    case Formula::Kind::Forall:
      return pair(kTagForall, pair(encode_name(f.name()), encode(f.body())));
  }
  return 0;
}

// ------------------------------------------------------------------ decoding

namespace {

// `layer` is the path of the node being decoded; children append to it
// and restore it, so the happy path allocates no strings.
struct Path {
  std::string& s;
  std::size_t mark;
  Path(std::string& str, std::string_view part) : s(str), mark(str.size()) { s += part; }
  ~Path() { s.resize(mark); }
};

std::pair<Natural, Natural> expect_pair(const Natural& c, const std::string& layer) {
  auto p = unpair(c);
  if (!p) throw NotACodeError(layer, to_string(c) + " is not a pair");
  return std::move(*p);
}

std::string expect_name(const Natural& c, std::string& layer, std::string_view part) {
  auto n = decode_name(c);
  if (!n) {
    Path here(layer, part);
    throw NotACodeError(layer, to_string(c) + " is not a name code");
  }
  return *n;
}

Syntax decode_at(const Natural& code, std::string& layer);

Term decode_term_at(const Natural& code, std::string& layer) {
  Syntax s = decode_at(code, layer);
  if (auto* t = std::get_if<Term>(&s)) return *t;
  throw NotACodeError(layer, "expected a term, found a formula");
}

Formula decode_formula_at(const Natural& code, std::string& layer) {
  Syntax s = decode_at(code, layer);
  if (auto* f = std::get_if<Formula>(&s)) return *f;
  throw NotACodeError(layer, "expected a formula, found a term");
}

Formula decode_child(const Natural& code, std::string& layer, std::string_view part) {
  Path here(layer, part);
  return decode_formula_at(code, layer);
}

std::vector<Term> decode_list(Natural code, std::string& layer) {
  std::vector<Term> out;
  while (code != 0) {
    Path here(layer, ".arg" + std::to_string(out.size()));
    auto [head, tail] = expect_pair(code, layer);
    out.push_back(decode_term_at(head, layer));
    code = std::move(tail);
  }
  return out;
}

Syntax decode_at(const Natural& code, std::string& layer) {
  auto [tag_code, payload] = expect_pair(code, layer);
  if (tag_code < kTagVariable || tag_code > kTagForall)
    throw NotACodeError(layer, "unknown tag " + to_string(tag_code));
  const auto tag = tag_code.convert_to<unsigned>();
  switch (tag) {
    case kTagVariable:
      return Term::variable(expect_name(payload, layer, ".name"));
    case kTagConstant:
      return Term::constant(expect_name(payload, layer, ".name"));
    case kTagApply: {
      auto [name, args] = expect_pair(payload, layer);
      auto list = decode_list(args, layer);
      if (list.empty()) throw NotACodeError(layer, "function application without arguments");
      return Term::apply(expect_name(name, layer, ".name"), std::move(list));
    }
    case kTagEqual: {
      auto list = decode_list(payload, layer);
      if (list.size() != 2)
        throw NotACodeError(layer, "equality with " + std::to_string(list.size()) +
                                       " arguments");
      return Formula::equal(list[0], list[1]);
    }
    case kTagRelation: {
      auto [name, args] = expect_pair(payload, layer);
      std::string rel = expect_name(name, layer, ".name");
      return Formula::relation(std::move(rel), decode_list(args, layer));
    }
    case kTagNot:
      return Formula::negation(decode_child(payload, layer, ".body"));
    case kTagAnd:
    case kTagOr: {
      auto [l, r] = expect_pair(payload, layer);
      Formula a = decode_child(l, layer, ".lhs");
      Formula b = decode_child(r, layer, ".rhs");
      return tag == kTagAnd ? Formula::conjunction(a, b) : Formula::disjunction(a, b);
    }
    case kTagExists:
    case kTagForall: {
      auto [v, body] = expect_pair(payload, layer);
      std::string var = expect_name(v, layer, ".var");
      Formula b = decode_child(body, layer, ".body");
      return tag == kTagExists ? Formula::exists(var, b) : Formula::forall(var, b);
    }
    default:
      break;
  }
  throw NotACodeError(layer, "unknown tag " + to_string(tag_code));
}

}  // namespace

Syntax decode(const Natural& code) {
  std::string layer = "root";
  return decode_at(code, layer);
}
Formula decode_formula(const Natural& code) {
  std::string layer = "root";
  return decode_formula_at(code, layer);
}
Term decode_term(const Natural& code) {
  std::string layer = "root";
  return decode_term_at(code, layer);
}

// ----------------------------------------------------------------- numerals

Term numeral(const Natural& n) {
  const Term zero = Term::constant(std::string(core::kZero));
  const Term one = Term::constant(std::string(core::kOne));
  if (n == 0) return zero;
  if (n == 1) return one;
  const Term two = Term::apply(std::string(core::kPlus), {one, one});
  const std::size_t top = bit_length(n) - 1;
  Term acc = one;  // a_k = 1
  for (std::size_t i = top; i-- > 0;) {
    const Term digit = mp::bit_test(n, static_cast<unsigned>(i)) ? one : zero;
    acc = Term::apply(std::string(core::kPlus),
                      {digit, Term::apply(std::string(core::kTimes), {two, acc})});
  }
  return acc;
}

Term numeral(unsigned long n) { return numeral(Natural(n)); }

std::optional<Natural> numeral_value(const Term& t) {
  auto digit = [](const Term& d) -> std::optional<int> {
    if (!d.is_constant()) return std::nullopt;
    if (d.name() == core::kZero) return 0;
    if (d.name() == core::kOne) return 1;
    return std::nullopt;
  };
  if (auto d = digit(t)) return Natural(*d);
  // Walk the spine iteratively; numerals of large codes are deep.
  std::vector<int> digits;
  const Term* cur = &t;
  for (;;) {
    if (auto d = digit(*cur)) {
      if (*d != 1) return std::nullopt;  // leading digit
      break;
    }
    if (!cur->is_apply() || cur->name() != core::kPlus || cur->args().size() != 2)
      return std::nullopt;
    auto d = digit(cur->args()[0]);
    if (!d) return std::nullopt;
    const Term& prod = cur->args()[1];
    if (!prod.is_apply() || prod.name() != core::kTimes || prod.args().size() != 2)
      return std::nullopt;
    const Term& two = prod.args()[0];
    if (!two.is_apply() || two.name() != core::kPlus || two.args().size() != 2 ||
        digit(two.args()[0]) != 1 || digit(two.args()[1]) != 1)
      return std::nullopt;
    digits.push_back(*d);
    cur = &prod.args()[1];
  }
  Natural v = 1;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = 2 * v + *it;
  return v;
}

Formula dot_substitute(const Formula& f, const std::string& var, const Natural& n) {
  return substitute(f, var, numeral(n));
}

}  // namespace metalogic
