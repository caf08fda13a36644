#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "metalogic/coding.hpp"
#include "metalogic/json_io.hpp"
#include "metalogic/syntax.hpp"

namespace metalogic {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite structure with elements 0..n-1 (names kept for I/O).
///
/// Coded relations take a natural number (a Goedel code) in their first
/// slot and elements in the rest; they hold satisfaction-style tables such
/// as S(code, x) over a model that does not itself contain arithmetic.
struct FiniteModel {
  std::vector<std::string> universe;
  std::map<std::string, int> relation_arity;
  std::map<std::string, std::set<std::vector<int>>> relations;
  std::map<std::string, int> function_arity;
  std::map<std::string, std::map<std::vector<int>, int>> functions;
  std::map<std::string, int> constants;
  std::map<std::string, int> coded_arity;
  std::map<std::string, std::set<std::pair<Natural, std::vector<int>>>> coded;

  int size() const { return static_cast<int>(universe.size()); }
  /// Element index by name; throws ModelError.
  int element(const std::string& name) const;

  /// The model's own signature (coded relations excluded).
  Signature signature() const;
  /// Throws ModelError when a table is partial or out of range.
  void validate() const;

  void add_relation(const std::string& name, int arity);
  void add_coded(const std::string& name, int arity);

  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;
};

// {"universe":["a","b"],
//  "relations":{"in":{"arity":2,"tuples":[["a","b"]]}},
//  "functions":{"f":{"arity":1,"table":[["a","b"],["b","a"]]}},
//  "constants":{"c":"a"},
//  "coded":{"S":{"arity":2,"tuples":[["17","a"]]}}}
Json to_json(const FiniteModel& m);
FiniteModel model_from_json(const Json& j);

}  // namespace metalogic
