#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wqo/kernel.hpp"

namespace wqo {

/// Input was not in the expected normal form.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// ---- Finite quasi-orders ---------------------------------------------------

struct FiniteQoSpec {
  std::vector<std::string> symbols;
  /// (a, b) means a <= b; the reflexive-transitive closure is taken.
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// Every ideal of a finite QO is principal; ideals are represented by the
/// least symbol (in the term order) of the equivalence class of their top.
PresentationPtr finite_qo(const FiniteQoSpec& spec);

/// Discrete alphabet {a, b, ...} ordered by equality.
PresentationPtr discrete(const std::vector<std::string>& symbols);

// ---- Naturals --------------------------------------------------------------

/// Ideals are Nat(n) for the principal ideal of n, and Omega for all of N.
PresentationPtr naturals();

// ---- Ordinals below epsilon_0 ----------------------------------------------

struct CnfTerm;

/// Cantor normal form: sum of w^exponent * coefficient, exponents strictly
/// decreasing, coefficients positive. No terms is the ordinal 0.
struct CnfOrdinal {
  std::vector<CnfTerm> terms;

  static CnfOrdinal zero() { return {}; }
  static CnfOrdinal finite(std::uint64_t n);
  static CnfOrdinal omega_power(CnfOrdinal exponent,
                                std::uint64_t coefficient = 1);

  bool is_zero() const { return terms.empty(); }
};

struct CnfTerm {
  CnfOrdinal exponent;
  std::uint64_t coefficient = 1;
};

bool is_normal(const CnfOrdinal& a);
/// Structural CNF comparison; both arguments assumed normal.
std::strong_ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b);
/// Throws ValidationError on non-normal input.
bool cnf_leq(const CnfOrdinal& a, const CnfOrdinal& b);
bool operator==(const CnfOrdinal& a, const CnfOrdinal& b);

CnfOrdinal successor(const CnfOrdinal& a);
/// Size measure used by the enumerators: sum of coefficient*(1+rank(exp)).
std::uint64_t rank(const CnfOrdinal& a);

Term to_term(const CnfOrdinal& a);
/// Throws KindError when t is not an Ord term, ValidationError when not
/// normal.
CnfOrdinal ordinal_from_term(const Term& t);

/// All normal-form ordinals of the given rank whose leading exponent is at
/// most `max_exponent` (any exponent when absent), in a fixed order.
std::vector<CnfOrdinal> ordinals_of_rank(std::uint64_t r,
                                         const CnfOrdinal* max_exponent);

/// The ordinal alpha = {beta | beta < alpha}. Ideals are Cut(gamma) with
/// 0 < gamma <= alpha, denoting {beta | beta < gamma}.
PresentationPtr ordinal(const CnfOrdinal& alpha);

}  // namespace wqo
