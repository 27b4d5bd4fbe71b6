#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "wqo/base.hpp"

namespace wqo {

/// Syntax error at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A literal did not fit its type. `path` locates the offending component,
/// e.g. "$.1[2]" for the third letter of the second tuple component.
class TypeMismatch : public Error {
 public:
  TypeMismatch(std::string path, std::string expected, std::string found,
               std::size_t line, std::size_t column);
  const std::string& path() const { return path_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string path_;
  std::string expected_;
  std::string found_;
  std::size_t line_;
  std::size_t column_;
};

enum class TypeOp {
  Nat, Ord, Fin, Sum, LexSum, Prod, Star, Stutter, Conj, Pset, Mset
};

struct TypeExpr {
  TypeOp op = TypeOp::Nat;
  CnfOrdinal alpha;  // Ord
  FiniteQoSpec fin;  // Fin
  std::vector<TypeExpr> args;
};

bool operator==(const TypeExpr& a, const TypeExpr& b);

struct SetExpr {
  enum class Op { Up, Down, Comp, And, Or, Full, Empty, In, Subset };
  Op op = Op::Empty;
  Term term;  // Up: element, Down: ideal, In: element
  std::vector<SetExpr> args;
  std::size_t line = 0;  // operator position for And, Or and Subset
  std::size_t column = 0;
};

TypeExpr parse_type(std::string_view text);
CnfOrdinal parse_ordinal(std::string_view text);
Element parse_value(std::string_view text, const TypeExpr& t);
Ideal parse_ideal(std::string_view text, const TypeExpr& t);
SetExpr parse_set_expr(std::string_view text, const TypeExpr& t);

/// Prod(A,B,C) is built as product(A, product(B, C)); its elements are
/// right-nested pairs.
PresentationPtr build_presentation(const TypeExpr& t);

/// Polarity of a set expression, or nothing when it is built from
/// full/empty only. Throws PolarityError on mixed polarities, prefixed with
/// the offending operator's "line:column: " when known.
std::optional<Polarity> infer_polarity(const SetExpr& e);

/// A closed set, or a truth value for in(...) and subset(...). Undetermined
/// polarities default to Up.
using EvalResult = std::variant<ClosedSet, bool>;
EvalResult evaluate(const Presentation& X, const SetExpr& e);

std::string render(const TypeExpr& t);
std::string render_ordinal(const CnfOrdinal& a);
std::string render_value(const Element& x, const TypeExpr& t);
std::string render_ideal(const Ideal& I, const TypeExpr& t);
/// "empty", "up(x) | up(y)" or "I1 | I2", components in the term order.
std::string render_set(const ClosedSet& S, const TypeExpr& t);
std::string render_result(const EvalResult& r, const TypeExpr& t);

}  // namespace wqo
