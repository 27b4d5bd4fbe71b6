#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqo {

/// Node tags of the tagged-tree encoding shared by elements and ideals.
///
/// The declaration order is the primary key of the total syntactic order,
/// so `Nat` sorts before `Omega` (finite bounds before the unbounded ideal).
enum class Kind : std::uint8_t {
  Nat,      // num = value
  Omega,    // unbounded ideal of the naturals
  Sym,      // sym = name
  Ord,      // kids = OrdTerm list, strictly decreasing exponents
  OrdTerm,  // num = coefficient, kids = {exponent (Ord)}
  Cut,      // kids = {Ord}; ideal {beta | beta < gamma}
  Pair,     // kids = {left, right}
  Tagged,   // num = side (1 or 2), kids = {value}
  Seq,      // kids = elements
  Set,      // kids = sorted, structurally distinct elements
  Bag,      // kids = sorted elements (repetitions kept)
  Star,     // kids = ideals of the base WQO (a canonical DownSet)
  One,      // kids = {ideal of the base WQO}
  Product,  // kids = atoms (Star / One); empty = {epsilon}
  Pf,       // kids = ideals of the base WQO (a canonical DownSet)
};

const char* kind_name(Kind k);

/// Immutable tagged tree. Copies share structure.
class Term {
 public:
  Term();

  static Term nat(std::uint64_t n);
  static Term omega();
  static Term sym(std::string name);
  static Term pair(Term left, Term right);
  static Term tagged(int side, Term value);
  static Term seq(std::vector<Term> items);
  /// Sorts and removes structural duplicates.
  static Term set(std::vector<Term> items);
  /// Sorts, keeps repetitions.
  static Term bag(std::vector<Term> items);
  static Term star(std::vector<Term> ideals);
  static Term one(Term ideal);
  static Term product(std::vector<Term> atoms);
  static Term pf(std::vector<Term> ideals);
  static Term cut(Term ordinal);
  static Term make(Kind kind, std::uint64_t num, std::string sym,
                   std::vector<Term> kids);

  Kind kind() const;
  std::uint64_t num() const;
  const std::string& sym() const;
  std::span<const Term> kids() const;
  const Term& kid(std::size_t i) const;
  std::size_t arity() const { return kids().size(); }
  bool is(Kind k) const { return kind() == k; }

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Debug rendering, independent of any type expression.
std::string debug_string(const Term& t);

using Element = Term;
using Ideal = Term;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value of the wrong shape was handed to a presentation.
class KindError : public Error {
 public:
  using Error::Error;
};

/// Up/down polarity mismatch between closed sets.
class PolarityError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction data (dangling symbols, missing enumerator, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace wqo
