#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wqo/termlang.hpp"

namespace wqo {

/// Enumeration bounds: at most `max_elements` elements, each of structural
/// size at most `max_size`.
struct Budget {
  std::size_t max_elements = 40;
  std::size_t max_size = 8;
};

/// Structural size: Nat n is n, a symbol 0, an ordinal its CNF rank, a pair
/// the sum of its sides, a tagged value its value, and a sequence, set or
/// multiset the sum of (1 + size) over its items.
std::size_t structural_size(const Term& x);

/// Elements of type t by increasing structural size, the term order within
/// one size. Independent of the presentations under test.
std::vector<Element> enumerate(const TypeExpr& t, const Budget& b);

/// The members of `universe` in S, from the definitions: Up through OD
/// only, Down through ID(PI(x), I).
std::vector<Element> extension_of(const Presentation& X, const ClosedSet& S,
                                  const std::vector<Element>& universe);

struct Finding {
  std::string op;        // e.g. "CF"
  std::string property;  // e.g. "complement/extensional"
  std::vector<std::string> inputs;
  std::string expected;
  std::string got;
};

struct Report {
  std::string subject;
  std::uint64_t seed = 0;
  std::size_t universe_size = 0;
  std::size_t checks = 0;
  std::vector<Finding> failures;
  /// Semi-checks that found no witness within the enlarged budget.
  std::vector<Finding> inconclusive;

  bool passed() const { return failures.empty(); }
  std::string text() const;
  std::string json_lines() const;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Sampled inputs per operation.
  std::size_t samples = 24;
};

/// Renders elements (is_ideal false) and ideals (true) in reports.
using TermPrinter = std::function<std::string(const Term&, bool is_ideal)>;

/// Runs the property suite over the universe enumerate(t, b); directedness
/// witnesses are searched in a 4x enlarged budget.
Report check_presentation(const Presentation& X, const TypeExpr& t,
                          const Budget& b, const CheckOptions& opts = {});

/// Same suite over explicit universes, for presentations without a type
/// expression (e.g. induced subspaces).
Report check_presentation(const Presentation& X, const std::string& subject,
                          const std::vector<Element>& universe,
                          const std::vector<Element>& wide_universe,
                          const CheckOptions& opts, const TermPrinter& print);

/// Mutation hook: a copy of X whose named procedure ("cf", "ci", "if",
/// "ii", "pi", "od", "id") returns wrong answers.
PresentationPtr corrupt(PresentationPtr X, const std::string& op);

}  // namespace wqo
