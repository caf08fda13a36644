#pragma once

#include <json.hpp>

#include "metalogic/syntax.hpp"

namespace metalogic {

using Json = nlohmann::ordered_json;

// JSON mirror of the AST. Terms:
//   {"kind":"var","name":"x"} {"kind":"const","name":"0"}
//   {"kind":"app","fn":"+","args":[...]}
// Formulas:
//   {"kind":"eq","args":[t,t]} {"kind":"rel","name":"R","args":[...]}
//   {"kind":"not","body":f} {"kind":"and"|"or","args":[f,f]}
//   {"kind":"exists"|"forall","var":"x","body":f}

Json to_json(const Term& t);
Json to_json(const Formula& f);
/// Throws SignatureError on malformed input or signature mismatch.
Term term_from_json(const Json& j, const Signature& sig);
Formula formula_from_json(const Json& j, const Signature& sig);

// {"constants":[...],"functions":{"f":1},"relations":{"R":2},"arithmetic":true}
// With "arithmetic": true the core symbols are implied.
Json to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

}  // namespace metalogic
