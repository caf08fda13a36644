#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "metalogic/coding.hpp"
#include "metalogic/json_io.hpp"
#include "metalogic/syntax.hpp"

namespace metalogic {

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One generated axiom and the signature it lives in.
struct SchemaInstance {
  Formula formula;
  Signature signature;
};

/// The signature plus numeral symbols 0, 1, + and * where absent.
Signature with_numerals(const Signature& sig);

/// T(num code(phi)) iff phi; phi a sentence not mentioning T.
SchemaInstance tb_axiom(const Formula& phi, const Signature& sig, const std::string& t = "T");

/// forall x (S(num code(phi), x) iff phi(x)); phi has one free variable.
SchemaInstance usb_axiom(const Formula& phi, const Signature& sig, const std::string& s = "S");

/// forall y (D(num code(phi), y) iff (exists! x phi(x) and phi(y))).
SchemaInstance def_axiom(const Formula& phi, const Signature& sig, const std::string& d = "D");

/// T(num code(phi(t))) iff phi(num val(t)); t closed, its value computed
/// here instead of by an internal val function.
SchemaInstance utb_term_instance(const Formula& phi, const Term& t, const Signature& sig,
                                 const std::string& name = "T");

/// exists x phi(x) -> phi(H(num code(phi))).
SchemaInstance skolem_axiom(const Formula& phi, const Signature& sig, const std::string& h = "H");

/// forall y (exists x phi(x, y) -> phi(H(num code(phi), y), y)); phi has
/// exactly the free variables x and one parameter.
SchemaInstance us_axiom(const Formula& phi, const std::string& x, const Signature& sig,
                        const std::string& h = "H");

/// (T1(num code(phi)) iff phi) or (T2(num code(psi)) iff psi).
SchemaInstance twotb_axiom(const Formula& phi, const Formula& psi, const Signature& sig,
                           const std::string& t1 = "T1", const std::string& t2 = "T2");

struct RsatInstances {
  Signature signature;
  /// OP_1 .. OP_m for m = min(n, |ptype|), then NE.
  std::vector<Formula> op;
  Formula ne;
};

/// Optimality and nonemptiness axioms for the realizer R of the type
/// ptype = [phi_1(x, y..), ...] under code p. With several parameters they
/// are packed into one by nested Cantor pairing, see tuple_formula().
RsatInstances rsat_instances(const std::vector<Formula>& ptype, const std::string& x,
                             const std::vector<std::string>& params, const Natural& p,
                             std::size_t n, const Signature& sig, const std::string& r = "R");

/// z = <a, b> for the Cantor pairing, as (z + z) = (a + b)(a + b + 1) + (b + b).
Formula cantor_pair_formula(const Term& z, const Term& a, const Term& b);
/// z codes <<y1, y2>, y3> ... ; intermediate values are existentially bound.
Formula tuple_formula(const std::string& z, const std::vector<std::string>& ys);

/// Replaces every R(t1..tk) by defn(t1..tk) with the distinguished
/// variables `params` (capture-avoiding).
Formula translate_predicate(const Formula& phi, const std::string& r,
                            const std::vector<std::string>& params, const Formula& defn);

/// The schema identifiers accepted by the CLI.
const std::vector<std::string>& schema_ids();

}  // namespace metalogic
