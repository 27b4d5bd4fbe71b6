#include "wqo/termlang.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "wqo/sequences.hpp"
#include "wqo/sets_multisets.hpp"
#include "wqo/sum_product.hpp"

namespace wqo {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

TypeMismatch::TypeMismatch(std::string path, std::string expected,
                           std::string found, std::size_t line,
                           std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) +
            ": type mismatch at " + path + ": expected " + expected +
            ", found " + found),
      path_(std::move(path)),
      expected_(std::move(expected)),
      found_(std::move(found)),
      line_(line),
      column_(column) {}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  return a.op == b.op && a.alpha == b.alpha &&
         a.fin.symbols == b.fin.symbols && a.fin.pairs == b.fin.pairs &&
         a.args == b.args;
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool looking_at(std::string_view s) {
    skip_ws();
    return text_.substr(pos_).starts_with(s);
  }

  bool accept(std::string_view s) {
    if (!looking_at(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s))
      fail("expected '" + std::string(s) + "', found " + found());
  }

  bool looking_at_word(std::string_view w) {
    if (!looking_at(w)) return false;
    std::size_t end = pos_ + w.size();
    return end >= text_.size() || !ident_char(text_[end]);
  }

  bool accept_word(std::string_view w) {
    if (!looking_at_word(w)) return false;
    pos_ += w.size();
    return true;
  }

  bool at_ident() { return ident_start(peek()); }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::string ident() {
    if (!at_ident()) fail("expected an identifier, found " + found());
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    if (!at_digit()) fail("expected a number, found " + found());
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::string found() {
    skip_ws();
    if (pos_ >= text_.size()) return "end of input";
    std::size_t end = pos_;
    if (ident_char(text_[end])) {
      while (end < text_.size() && ident_char(text_[end])) ++end;
    } else {
      ++end;
    }
    return "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
  }

  std::pair<std::size_t, std::size_t> line_col() const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& message) const {
    auto [line, col] = line_col();
    throw ParseError(message, line, col);
  }

  [[noreturn]] void mismatch(const std::string& path,
                             const std::string& expected) {
    std::string what = found();
    auto [line, col] = line_col();
    throw TypeMismatch(path, expected, what, line, col);
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input " + found());
  }

  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  void reset(std::size_t pos) { pos_ = pos; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---- Ordinals --------------------------------------------------------------

CnfOrdinal ordinal_sum(Cursor& c);

CnfOrdinal ordinal_exponent(Cursor& c) {
  if (c.at_digit()) return CnfOrdinal::finite(c.number());
  if (c.accept("(")) {
    auto e = ordinal_sum(c);
    c.expect(")");
    return e;
  }
  if (c.accept_word("w")) {
    CnfOrdinal e = CnfOrdinal::finite(1);
    if (c.accept("^")) e = ordinal_exponent(c);
    return CnfOrdinal::omega_power(e);
  }
  c.fail("malformed CNF literal: expected an exponent, found " + c.found());
}

CnfOrdinal ordinal_sum(Cursor& c) {
  CnfOrdinal out;
  std::size_t start = c.pos();
  do {
    if (c.at_digit()) {
      std::uint64_t v = c.number();
      if (v == 0) {
        if (!out.is_zero() || c.looking_at("+"))
          c.fail("malformed CNF literal: 0 inside a sum");
        return out;
      }
      out.terms.push_back(CnfTerm{CnfOrdinal::zero(), v});
    } else if (c.accept_word("w")) {
      CnfTerm t{CnfOrdinal::finite(1), 1};
      if (c.accept("^")) t.exponent = ordinal_exponent(c);
      if (c.accept("*")) {
        t.coefficient = c.number();
        if (t.coefficient == 0) c.fail("malformed CNF literal: zero coefficient");
      }
      out.terms.push_back(std::move(t));
    } else {
      c.fail("malformed CNF literal: found " + c.found());
    }
  } while (c.accept("+"));
  if (!is_normal(out)) {
    c.reset(start);
    c.fail("malformed CNF literal: exponents must strictly decrease");
  }
  return out;
}

bool is_successor(const CnfOrdinal& a) {
  return !a.is_zero() && a.terms.back().exponent.is_zero();
}

CnfOrdinal predecessor(CnfOrdinal a) {
  if (--a.terms.back().coefficient == 0) a.terms.pop_back();
  return a;
}

// ---- Types -----------------------------------------------------------------

std::size_t arity_of(TypeOp op) {
  switch (op) {
    case TypeOp::Sum:
    case TypeOp::LexSum:
      return 2;
    case TypeOp::Prod:
      return 0;  // two or more
    default:
      return 1;
  }
}

TypeExpr type_expr(Cursor& c) {
  static const std::vector<std::pair<std::string, TypeOp>> ctors = {
      {"Sum", TypeOp::Sum},       {"LexSum", TypeOp::LexSum},
      {"Prod", TypeOp::Prod},     {"Star", TypeOp::Star},
      {"Stutter", TypeOp::Stutter}, {"Conj", TypeOp::Conj},
      {"Pset", TypeOp::Pset},     {"Mset", TypeOp::Mset}};
  std::size_t start = c.pos();
  std::string name = c.ident();
  TypeExpr t;
  if (name == "Nat") {
    t.op = TypeOp::Nat;
    return t;
  }
  if (name == "Ord") {
    t.op = TypeOp::Ord;
    c.expect("[");
    t.alpha = ordinal_sum(c);
    if (t.alpha.is_zero()) c.fail("Ord needs a positive ordinal");
    c.expect("]");
    return t;
  }
  if (name == "Fin") {
    t.op = TypeOp::Fin;
    c.expect("{");
    std::set<std::string> seen;
    if (c.at_ident()) {
      do {
        std::size_t at = c.pos();
        auto s = c.ident();
        if (!seen.insert(s).second) {
          c.reset(at);
          c.fail("duplicate symbol '" + s + "'");
        }
        t.fin.symbols.push_back(s);
      } while (c.accept(","));
    }
    if (c.accept("|")) {
      do {
        std::size_t at = c.pos();
        auto a = c.ident();
        if (!c.accept("<=")) c.expect("<");
        auto b = c.ident();
        if (!seen.count(a) || !seen.count(b)) {
          c.reset(at);
          c.fail("relation uses an undeclared symbol");
        }
        t.fin.pairs.emplace_back(a, b);
      } while (c.accept(","));
    }
    c.expect("}");
    if (t.fin.symbols.empty()) c.fail("Fin needs at least one symbol");
    return t;
  }
  auto it = std::find_if(ctors.begin(), ctors.end(),
                         [&](const auto& p) { return p.first == name; });
  if (it == ctors.end()) {
    c.reset(start);
    c.fail("unknown constructor '" + name + "'");
  }
  t.op = it->second;
  c.expect("(");
  do {
    t.args.push_back(type_expr(c));
  } while (c.accept(","));
  std::size_t want = arity_of(t.op);
  if (want ? t.args.size() != want : t.args.size() < 2) {
    c.reset(start);
    c.fail(name + " expects " + (want ? std::to_string(want) : "at least 2") +
           " arguments, got " + std::to_string(t.args.size()));
  }
  c.expect(")");
  return t;
}

// ---- Values ----------------------------------------------------------------

std::string describe(const TypeExpr& t) {
  switch (t.op) {
    case TypeOp::Nat: return "a natural number";
    case TypeOp::Ord: return "an ordinal below " + render_ordinal(t.alpha);
    case TypeOp::Fin: {
      std::string out = "one of ";
      for (std::size_t k = 0; k < t.fin.symbols.size(); ++k)
        out += (k ? "," : "") + t.fin.symbols[k];
      return out;
    }
    case TypeOp::Sum:
    case TypeOp::LexSum: return "L:x or R:x";
    case TypeOp::Prod: return "a " + std::to_string(t.args.size()) + "-tuple";
    case TypeOp::Star:
    case TypeOp::Stutter:
    case TypeOp::Conj: return "a sequence [x,...]";
    case TypeOp::Pset: return "a finite set {x,...}";
    case TypeOp::Mset: return "a multiset {|x,...|}";
  }
  return "a value";
}

Term nest_pairs(std::vector<Term> xs) {
  Term acc = xs.back();
  for (std::size_t k = xs.size() - 1; k-- > 0;) acc = Term::pair(xs[k], acc);
  return acc;
}

std::vector<Term> unnest_pairs(const Term& t, std::size_t n) {
  std::vector<Term> out;
  Term cur = t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!cur.is(Kind::Pair)) throw KindError("expected a pair: " + debug_string(t));
    out.push_back(cur.kid(0));
    cur = cur.kid(1);
  }
  out.push_back(cur);
  return out;
}

// Comma-separated items up to `close`, each read by `item(index)`.
template <class F>
std::vector<Term> list_until(Cursor& c, std::string_view close, F item) {
  std::vector<Term> out;
  if (c.accept(close)) return out;
  do {
    out.push_back(item(out.size()));
  } while (c.accept(","));
  c.expect(close);
  return out;
}

Term value(Cursor& c, const TypeExpr& t, const std::string& path) {
  switch (t.op) {
    case TypeOp::Nat:
      if (!c.at_digit()) c.mismatch(path, describe(t));
      return Term::nat(c.number());
    case TypeOp::Ord: {
      if (!c.at_digit() && !c.looking_at_word("w")) c.mismatch(path, describe(t));
      std::size_t at = c.pos();
      auto a = ordinal_sum(c);
      if (!(cnf_compare(a, t.alpha) < 0)) {
        c.reset(at);
        c.mismatch(path, describe(t));
      }
      return to_term(a);
    }
    case TypeOp::Fin: {
      if (!c.at_ident()) c.mismatch(path, describe(t));
      std::size_t at = c.pos();
      auto s = c.ident();
      if (std::find(t.fin.symbols.begin(), t.fin.symbols.end(), s) ==
          t.fin.symbols.end()) {
        c.reset(at);
        c.mismatch(path, describe(t));
      }
      return Term::sym(s);
    }
    case TypeOp::Sum:
    case TypeOp::LexSum: {
      int side = c.accept_word("L") ? 1 : c.accept_word("R") ? 2 : 0;
      if (!side) c.mismatch(path, describe(t));
      c.expect(":");
      return Term::tagged(side, value(c, t.args[side - 1],
                                      path + (side == 1 ? ".L" : ".R")));
    }
    case TypeOp::Prod: {
      if (!c.accept("(")) c.mismatch(path, describe(t));
      std::vector<Term> xs;
      for (std::size_t k = 0; k < t.args.size(); ++k) {
        if (k && !c.accept(",")) c.mismatch(path, describe(t));
        xs.push_back(value(c, t.args[k], path + "." + std::to_string(k)));
      }
      if (!c.accept(")")) c.mismatch(path, describe(t));
      return nest_pairs(std::move(xs));
    }
    case TypeOp::Star:
    case TypeOp::Stutter:
    case TypeOp::Conj: {
      if (!c.accept("[")) c.mismatch(path, describe(t));
      return Term::seq(list_until(c, "]", [&](std::size_t k) {
        return value(c, t.args[0], path + "[" + std::to_string(k) + "]");
      }));
    }
    case TypeOp::Pset: {
      if (c.looking_at("{|") || !c.accept("{")) c.mismatch(path, describe(t));
      return Term::set(list_until(c, "}", [&](std::size_t k) {
        return value(c, t.args[0], path + "{" + std::to_string(k) + "}");
      }));
    }
    case TypeOp::Mset: {
      if (!c.accept("{|")) c.mismatch(path, describe(t));
      return Term::bag(list_until(c, "|}", [&](std::size_t k) {
        return value(c, t.args[0], path + "{|" + std::to_string(k) + "|}");
      }));
    }
  }
  c.mismatch(path, "a value");
}

// ---- Ideals ----------------------------------------------------------------

// The ideal written dw(inner): inner is a value in which Nat components
// may be `omega`.
Term inner_ideal(Cursor& c, const TypeExpr& t, const std::string& path) {
  switch (t.op) {
    case TypeOp::Nat:
      if (c.accept_word("omega")) return Term::omega();
      return value(c, t, path);
    case TypeOp::Ord:
      return Term::cut(to_term(successor(ordinal_from_term(value(c, t, path)))));
    case TypeOp::Fin:
      return build_presentation(t)->pi(value(c, t, path));
    case TypeOp::Sum:
    case TypeOp::LexSum: {
      int side = c.accept_word("L") ? 1 : c.accept_word("R") ? 2 : 0;
      if (!side) c.mismatch(path, describe(t));
      c.expect(":");
      return Term::tagged(side, inner_ideal(c, t.args[side - 1],
                                            path + (side == 1 ? ".L" : ".R")));
    }
    case TypeOp::Prod: {
      if (!c.accept("(")) c.mismatch(path, describe(t));
      std::vector<Term> xs;
      for (std::size_t k = 0; k < t.args.size(); ++k) {
        if (k && !c.accept(",")) c.mismatch(path, describe(t));
        xs.push_back(inner_ideal(c, t.args[k], path + "." + std::to_string(k)));
      }
      if (!c.accept(")")) c.mismatch(path, describe(t));
      return nest_pairs(std::move(xs));
    }
    case TypeOp::Star:
    case TypeOp::Stutter:
    case TypeOp::Conj: {
      if (!c.accept("[")) c.mismatch(path, describe(t));
      auto items = list_until(c, "]", [&](std::size_t k) {
        return inner_ideal(c, t.args[0], path + "[" + std::to_string(k) + "]");
      });
      std::vector<Term> atoms;
      for (auto& I : items) atoms.push_back(Term::one(I));
      return Term::product(std::move(atoms));
    }
    case TypeOp::Pset: {
      if (c.looking_at("{|") || !c.accept("{")) c.mismatch(path, describe(t));
      auto items = list_until(c, "}", [&](std::size_t k) {
        return inner_ideal(c, t.args[0], path + "{" + std::to_string(k) + "}");
      });
      auto base = build_presentation(t.args[0]);
      return Term::pf(canonize(*base, DownSet{items}).ideals);
    }
    case TypeOp::Mset: {
      if (!c.accept("{|")) c.mismatch(path, describe(t));
      auto items = list_until(c, "|}", [&](std::size_t k) {
        return inner_ideal(c, t.args[0], path + "{|" + std::to_string(k) + "|}");
      });
      std::sort(items.begin(), items.end());
      std::vector<Term> atoms;
      for (auto& I : items) atoms.push_back(Term::one(I));
      return Term::product(std::move(atoms));
    }
  }
  c.mismatch(path, "an ideal");
}

Term ideal(Cursor& c, const TypeExpr& t, const std::string& path);

std::vector<Term> ideal_alternatives(Cursor& c, const TypeExpr& t,
                                     const std::string& path,
                                     std::string_view close) {
  std::vector<Term> out;
  if (c.accept(close)) return out;
  do {
    out.push_back(ideal(c, t, path + "|" + std::to_string(out.size())));
  } while (c.accept("|"));
  c.expect(close);
  return out;
}

Term ideal(Cursor& c, const TypeExpr& t, const std::string& path) {
  if (c.accept_word("dw")) {
    c.expect("(");
    auto I = inner_ideal(c, t, path);
    c.expect(")");
    return I;
  }
  switch (t.op) {
    case TypeOp::Ord:
      if (c.accept_word("cut")) {
        c.expect("(");
        std::size_t at = c.pos();
        auto b = ordinal_sum(c);
        if (b.is_zero() || cnf_compare(b, t.alpha) > 0) {
          c.reset(at);
          c.mismatch(path, "a cut between 1 and " + render_ordinal(t.alpha));
        }
        c.expect(")");
        return Term::cut(to_term(b));
      }
      break;
    case TypeOp::Sum:
    case TypeOp::LexSum: {
      int side = c.accept_word("L") ? 1 : c.accept_word("R") ? 2 : 0;
      if (!side) break;
      c.expect(":");
      return Term::tagged(side, ideal(c, t.args[side - 1],
                                      path + (side == 1 ? ".L" : ".R")));
    }
    case TypeOp::Prod: {
      if (!c.accept("(")) break;
      std::vector<Term> xs;
      for (std::size_t k = 0; k < t.args.size(); ++k) {
        if (k) c.expect(",");
        xs.push_back(ideal(c, t.args[k], path + "." + std::to_string(k)));
      }
      c.expect(")");
      return nest_pairs(std::move(xs));
    }
    case TypeOp::Star:
    case TypeOp::Stutter:
    case TypeOp::Conj:
    case TypeOp::Mset: {
      if (!c.looking_at_word("star") && !c.looking_at_word("one")) break;
      auto base = build_presentation(t.args[0]);
      std::vector<Term> atoms;
      do {
        std::string at = path + "." + std::to_string(atoms.size());
        if (c.accept_word("star")) {
          c.expect("(");
          auto body = ideal_alternatives(c, t.args[0], at, ")");
          atoms.push_back(Term::star(canonize(*base, DownSet{body}).ideals));
        } else if (c.accept_word("one")) {
          c.expect("(");
          atoms.push_back(Term::one(ideal(c, t.args[0], at)));
          c.expect(")");
        } else {
          c.mismatch(at, "an atom star(...) or one(...)");
        }
      } while (c.accept("."));
      return seq_reduce(*base, Term::product(std::move(atoms)));
    }
    case TypeOp::Pset:
      if (c.accept_word("pf")) {
        c.expect("(");
        auto body = ideal_alternatives(c, t.args[0], path, ")");
        auto base = build_presentation(t.args[0]);
        return Term::pf(canonize(*base, DownSet{body}).ideals);
      }
      break;
    default:
      break;
  }
  c.mismatch(path, "an ideal literal for " + render(t));
}

// ---- Set expressions -------------------------------------------------------

class SetParser {
 public:
  SetParser(Cursor& c, const TypeExpr& t) : c_(c), t_(t) {}

  SetExpr top() {
    if (c_.accept_word("in")) {
      c_.expect("(");
      SetExpr e{SetExpr::Op::In, value(c_, t_, "$"), {}};
      c_.expect(",");
      e.args.push_back(expr());
      c_.expect(")");
      return e;
    }
    c_.pos();
    auto [line, col] = c_.line_col();
    if (c_.accept_word("subset")) {
      c_.expect("(");
      SetExpr e{SetExpr::Op::Subset, Term(), {}, line, col};
      e.args.push_back(expr());
      c_.expect(",");
      e.args.push_back(expr());
      c_.expect(")");
      return e;
    }
    return expr();
  }

 private:
  SetExpr expr() {
    SetExpr e = conj();
    for (;;) {
      c_.pos();
      auto [line, col] = c_.line_col();
      if (!c_.accept("|")) return e;
      e = SetExpr{SetExpr::Op::Or, Term(), {e, conj()}, line, col};
    }
  }

  SetExpr conj() {
    SetExpr e = factor();
    for (;;) {
      c_.pos();
      auto [line, col] = c_.line_col();
      if (!c_.accept("&")) return e;
      e = SetExpr{SetExpr::Op::And, Term(), {e, factor()}, line, col};
    }
  }

  SetExpr factor() {
    if (c_.accept_word("comp")) {
      c_.expect("(");
      SetExpr e{SetExpr::Op::Comp, Term(), {expr()}};
      c_.expect(")");
      return e;
    }
    if (c_.accept_word("full")) return SetExpr{SetExpr::Op::Full, Term(), {}};
    if (c_.accept_word("empty")) return SetExpr{SetExpr::Op::Empty, Term(), {}};
    if (c_.accept_word("up")) {
      c_.expect("(");
      SetExpr e{SetExpr::Op::Up, value(c_, t_, "$"), {}};
      while (c_.accept(","))
        e = SetExpr{SetExpr::Op::Or, Term(),
                    {e, SetExpr{SetExpr::Op::Up, value(c_, t_, "$"), {}}}};
      c_.expect(")");
      return e;
    }
    if (c_.peek() == '(') {
      // A parenthesised expression, unless this is a tuple ideal.
      std::size_t at = c_.pos();
      if (t_.op == TypeOp::Prod) {
        try {
          return down(ideal(c_, t_, "$"));
        } catch (const Error&) {
          c_.reset(at);
        }
      }
      c_.expect("(");
      SetExpr e = expr();
      c_.expect(")");
      return e;
    }
    if (!c_.at_ident()) c_.fail("expected a set expression, found " + c_.found());
    return down(ideal(c_, t_, "$"));
  }

  SetExpr down(Term I) {
    auto X = presentation();
    if (X->is_ideal && !X->is_ideal(I))
      throw TypeMismatch("$", "an ideal of " + render(t_), debug_string(I),
                         c_.line_col().first, c_.line_col().second);
    return SetExpr{SetExpr::Op::Down, std::move(I), {}};
  }

  PresentationPtr presentation() {
    if (!X_) X_ = build_presentation(t_);
    return X_;
  }

  Cursor& c_;
  const TypeExpr& t_;
  PresentationPtr X_;
};

ClosedSet eval_set(const Presentation& X, const SetExpr& e, Polarity p) {
  switch (e.op) {
    case SetExpr::Op::Up:
      return canonize(X, UpSet{{e.term}});
    case SetExpr::Op::Down:
      return canonize(X, DownSet{{e.term}});
    case SetExpr::Op::Comp:
      return complement(X, eval_set(X, e.args[0], flip(p)));
    case SetExpr::Op::And:
      return intersect(X, eval_set(X, e.args[0], p), eval_set(X, e.args[1], p));
    case SetExpr::Op::Or:
      return unite(X, eval_set(X, e.args[0], p), eval_set(X, e.args[1], p));
    case SetExpr::Op::Full:
      return full_set(X, p);
    case SetExpr::Op::Empty:
      return empty_set(p);
    default:
      throw Error("a predicate cannot be used as a set");
  }
}

std::optional<Polarity> merge(const SetExpr& at, std::optional<Polarity> a,
                              std::optional<Polarity> b) {
  if (a && b && *a != *b) {
    std::string where;
    if (at.line > 0)
      where = std::to_string(at.line) + ":" + std::to_string(at.column) + ": ";
    throw PolarityError(where + "cannot combine an upward-closed and a downward-closed set");
  }
  return a ? a : b;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::optional<std::string> render_inner(const Ideal& I, const TypeExpr& t) {
  switch (t.op) {
    case TypeOp::Nat:
      return I.is(Kind::Omega) ? std::string("omega") : std::to_string(I.num());
    case TypeOp::Ord: {
      auto b = ordinal_from_term(I.kid(0));
      if (!is_successor(b)) return std::nullopt;
      return render_ordinal(predecessor(b));
    }
    case TypeOp::Fin:
      return I.sym();
    case TypeOp::Sum:
    case TypeOp::LexSum: {
      auto s = render_inner(I.kid(0), t.args[I.num() - 1]);
      if (!s) return std::nullopt;
      return (I.num() == 1 ? "L:" : "R:") + *s;
    }
    case TypeOp::Prod: {
      auto parts = unnest_pairs(I, t.args.size());
      std::vector<std::string> out;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        auto s = render_inner(parts[k], t.args[k]);
        if (!s) return std::nullopt;
        out.push_back(*s);
      }
      return "(" + join(out, ",") + ")";
    }
    case TypeOp::Star:
    case TypeOp::Stutter:
    case TypeOp::Conj:
    case TypeOp::Mset: {
      std::vector<std::string> out;
      std::vector<Term> ones;
      for (const auto& A : I.kids()) {
        if (!A.is(Kind::One)) return std::nullopt;
        auto s = render_inner(A.kid(0), t.args[0]);
        if (!s) return std::nullopt;
        out.push_back(*s);
        ones.push_back(A.kid(0));
      }
      if (t.op != TypeOp::Mset) return "[" + join(out, ",") + "]";
      if (!std::is_sorted(ones.begin(), ones.end())) return std::nullopt;
      return "{|" + join(out, ",") + "|}";
    }
    case TypeOp::Pset: {
      std::vector<std::string> out;
      for (const auto& J : I.kids()) {
        auto s = render_inner(J, t.args[0]);
        if (!s) return std::nullopt;
        out.push_back(*s);
      }
      return "{" + join(out, ",") + "}";
    }
  }
  return std::nullopt;
}

}  // namespace

// ---- Public entry points ---------------------------------------------------

TypeExpr parse_type(std::string_view text) {
  Cursor c(text);
  auto t = type_expr(c);
  c.finish();
  return t;
}

CnfOrdinal parse_ordinal(std::string_view text) {
  Cursor c(text);
  auto a = ordinal_sum(c);
  c.finish();
  return a;
}

Element parse_value(std::string_view text, const TypeExpr& t) {
  Cursor c(text);
  auto x = value(c, t, "$");
  c.finish();
  return x;
}

Ideal parse_ideal(std::string_view text, const TypeExpr& t) {
  Cursor c(text);
  auto I = ideal(c, t, "$");
  c.finish();
  auto X = build_presentation(t);
  if (X->is_ideal && !X->is_ideal(I)) {
    auto [line, col] = c.line_col();
    throw TypeMismatch("$", "an ideal of " + render(t), debug_string(I), line, col);
  }
  return I;
}

SetExpr parse_set_expr(std::string_view text, const TypeExpr& t) {
  Cursor c(text);
  SetParser p(c, t);
  auto e = p.top();
  c.finish();
  infer_polarity(e);
  return e;
}

PresentationPtr build_presentation(const TypeExpr& t) {
  switch (t.op) {
    case TypeOp::Nat: return naturals();
    case TypeOp::Ord: return ordinal(t.alpha);
    case TypeOp::Fin: return finite_qo(t.fin);
    case TypeOp::Sum:
      return disjoint_sum(build_presentation(t.args[0]),
                          build_presentation(t.args[1]));
    case TypeOp::LexSum:
      return lex_sum(build_presentation(t.args[0]), build_presentation(t.args[1]));
    case TypeOp::Prod: {
      auto acc = build_presentation(t.args.back());
      for (std::size_t k = t.args.size() - 1; k-- > 0;)
        acc = product(build_presentation(t.args[k]), acc);
      return acc;
    }
    case TypeOp::Star: return higman(build_presentation(t.args[0]));
    case TypeOp::Stutter: return stuttering(build_presentation(t.args[0]));
    case TypeOp::Conj: return conjugacy(build_presentation(t.args[0]));
    case TypeOp::Pset: return powerset_fin(build_presentation(t.args[0]));
    case TypeOp::Mset: return multiset(build_presentation(t.args[0]));
  }
  throw ConstructionError("unknown type");
}

std::optional<Polarity> infer_polarity(const SetExpr& e) {
  switch (e.op) {
    case SetExpr::Op::Up: return Polarity::Up;
    case SetExpr::Op::Down: return Polarity::Down;
    case SetExpr::Op::Comp: {
      auto p = infer_polarity(e.args[0]);
      if (p) return flip(*p);
      return std::nullopt;
    }
    case SetExpr::Op::And:
    case SetExpr::Op::Or:
      return merge(e, infer_polarity(e.args[0]), infer_polarity(e.args[1]));
    case SetExpr::Op::Full:
    case SetExpr::Op::Empty: return std::nullopt;
    case SetExpr::Op::In: return infer_polarity(e.args[0]);
    case SetExpr::Op::Subset:
      return merge(e, infer_polarity(e.args[0]), infer_polarity(e.args[1]));
  }
  return std::nullopt;
}

EvalResult evaluate(const Presentation& X, const SetExpr& e) {
  Polarity p = infer_polarity(e).value_or(Polarity::Up);
  if (e.op == SetExpr::Op::In)
    return member(X, e.term, eval_set(X, e.args[0], p));
  if (e.op == SetExpr::Op::Subset)
    return subset(X, eval_set(X, e.args[0], p), eval_set(X, e.args[1], p));
  return eval_set(X, e, p);
}

std::string render(const TypeExpr& t) {
  switch (t.op) {
    case TypeOp::Nat: return "Nat";
    case TypeOp::Ord: return "Ord[" + render_ordinal(t.alpha) + "]";
    case TypeOp::Fin: {
      std::string out = "Fin{" + join(t.fin.symbols, ",");
      if (!t.fin.pairs.empty()) {
        std::vector<std::string> rel;
        for (const auto& [a, b] : t.fin.pairs) rel.push_back(a + "<" + b);
        out += " | " + join(rel, ",");
      }
      return out + "}";
    }
    default: break;
  }
  static const char* names[] = {"Nat",  "Ord",     "Fin",  "Sum",  "LexSum", "Prod",
                                "Star", "Stutter", "Conj", "Pset", "Mset"};
  std::vector<std::string> args;
  for (const auto& a : t.args) args.push_back(render(a));
  return std::string(names[static_cast<int>(t.op)]) + "(" + join(args, ",") + ")";
}

std::string render_ordinal(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : a.terms) {
    if (t.exponent.is_zero()) {
      parts.push_back(std::to_string(t.coefficient));
      continue;
    }
    std::string s = "w";
    if (!(t.exponent == CnfOrdinal::finite(1))) {
      const auto& e = t.exponent;
      bool simple = e.terms.size() == 1 &&
                    (e.terms[0].exponent.is_zero() || e.terms[0].coefficient == 1);
      s += "^" + (simple ? render_ordinal(e) : "(" + render_ordinal(e) + ")");
    }
    if (t.coefficient != 1) s += "*" + std::to_string(t.coefficient);
    parts.push_back(s);
  }
  return join(parts, "+");
}

std::string render_value(const Element& x, const TypeExpr& t) {
  auto each = [&](const Term& v, const TypeExpr& et) {
    std::vector<std::string> out;
    for (const auto& y : v.kids()) out.push_back(render_value(y, et));
    return join(out, ",");
  };
  switch (t.op) {
    case TypeOp::Nat: return std::to_string(x.num());
    case TypeOp::Ord: return render_ordinal(ordinal_from_term(x));
    case TypeOp::Fin: return x.sym();
    case TypeOp::Sum:
    case TypeOp::LexSum:
      return (x.num() == 1 ? "L:" : "R:") +
             render_value(x.kid(0), t.args[x.num() - 1]);
    case TypeOp::Prod: {
      auto parts = unnest_pairs(x, t.args.size());
      std::vector<std::string> out;
      for (std::size_t k = 0; k < parts.size(); ++k)
        out.push_back(render_value(parts[k], t.args[k]));
      return "(" + join(out, ",") + ")";
    }
    case TypeOp::Star:
    case TypeOp::Stutter:
    case TypeOp::Conj: return "[" + each(x, t.args[0]) + "]";
    case TypeOp::Pset: return "{" + each(x, t.args[0]) + "}";
    case TypeOp::Mset: return "{|" + each(x, t.args[0]) + "|}";
  }
  return debug_string(x);
}

std::string render_ideal(const Ideal& I, const TypeExpr& t) {
  if (auto s = render_inner(I, t)) return "dw(" + *s + ")";
  auto alternatives = [&](const Term& A, const TypeExpr& et) {
    std::vector<std::string> out;
    for (const auto& J : A.kids()) out.push_back(render_ideal(J, et));
    return join(out, "|");
  };
  switch (t.op) {
    case TypeOp::Ord:
      return "cut(" + render_ordinal(ordinal_from_term(I.kid(0))) + ")";
    case TypeOp::Sum:
    case TypeOp::LexSum:
      return (I.num() == 1 ? "L:" : "R:") +
             render_ideal(I.kid(0), t.args[I.num() - 1]);
    case TypeOp::Prod: {
      auto parts = unnest_pairs(I, t.args.size());
      std::vector<std::string> out;
      for (std::size_t k = 0; k < parts.size(); ++k)
        out.push_back(render_ideal(parts[k], t.args[k]));
      return "(" + join(out, ",") + ")";
    }
    case TypeOp::Star:
    case TypeOp::Stutter:
    case TypeOp::Conj:
    case TypeOp::Mset: {
      std::vector<std::string> out;
      for (const auto& A : I.kids())
        out.push_back(A.is(Kind::Star)
                          ? "star(" + alternatives(A, t.args[0]) + ")"
                          : "one(" + render_ideal(A.kid(0), t.args[0]) + ")");
      return join(out, ".");
    }
    case TypeOp::Pset: return "pf(" + alternatives(I, t.args[0]) + ")";
    default: break;
  }
  return debug_string(I);
}

std::string render_set(const ClosedSet& S, const TypeExpr& t) {
  if (S.empty()) return "empty";
  std::vector<std::string> out;
  if (S.is_up()) {
    for (const auto& g : S.up().generators)
      out.push_back("up(" + render_value(g, t) + ")");
  } else {
    for (const auto& I : S.down().ideals) out.push_back(render_ideal(I, t));
  }
  return join(out, " | ");
}

std::string render_result(const EvalResult& r, const TypeExpr& t) {
  if (const bool* b = std::get_if<bool>(&r)) return *b ? "true" : "false";
  return render_set(std::get<ClosedSet>(r), t);
}

}  // namespace wqo
