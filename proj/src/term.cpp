#include "wqo/term.hpp"

#include <algorithm>
#include <sstream>

namespace wqo {

struct Term::Node {
  Kind kind;
  std::uint64_t num;
  std::string sym;
  std::vector<Term> kids;
};

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Nat: return "nat";
    case Kind::Omega: return "omega";
    case Kind::Sym: return "sym";
    case Kind::Ord: return "ord";
    case Kind::OrdTerm: return "ordterm";
    case Kind::Cut: return "cut";
    case Kind::Pair: return "pair";
    case Kind::Tagged: return "tagged";
    case Kind::Seq: return "seq";
    case Kind::Set: return "set";
    case Kind::Bag: return "bag";
    case Kind::Star: return "star";
    case Kind::One: return "one";
    case Kind::Product: return "product";
    case Kind::Pf: return "pf";
  }
  return "?";
}

Term::Term() : Term(make(Kind::Nat, 0, {}, {})) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::make(Kind kind, std::uint64_t num, std::string sym,
                std::vector<Term> kids) {
  return Term(std::make_shared<const Node>(
      Node{kind, num, std::move(sym), std::move(kids)}));
}

Term Term::nat(std::uint64_t n) { return make(Kind::Nat, n, {}, {}); }
Term Term::omega() { return make(Kind::Omega, 0, {}, {}); }
Term Term::sym(std::string name) {
  return make(Kind::Sym, 0, std::move(name), {});
}
Term Term::pair(Term left, Term right) {
  return make(Kind::Pair, 0, {}, {std::move(left), std::move(right)});
}
Term Term::tagged(int side, Term value) {
  return make(Kind::Tagged, static_cast<std::uint64_t>(side), {},
              {std::move(value)});
}
Term Term::seq(std::vector<Term> items) {
  return make(Kind::Seq, 0, {}, std::move(items));
}
Term Term::set(std::vector<Term> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return make(Kind::Set, 0, {}, std::move(items));
}
Term Term::bag(std::vector<Term> items) {
  std::sort(items.begin(), items.end());
  return make(Kind::Bag, 0, {}, std::move(items));
}
Term Term::star(std::vector<Term> ideals) {
  return make(Kind::Star, 0, {}, std::move(ideals));
}
Term Term::one(Term ideal) {
  return make(Kind::One, 0, {}, {std::move(ideal)});
}
Term Term::product(std::vector<Term> atoms) {
  return make(Kind::Product, 0, {}, std::move(atoms));
}
Term Term::pf(std::vector<Term> ideals) {
  return make(Kind::Pf, 0, {}, std::move(ideals));
}
Term Term::cut(Term ordinal) {
  return make(Kind::Cut, 0, {}, {std::move(ordinal)});
}

Kind Term::kind() const { return node_->kind; }
std::uint64_t Term::num() const { return node_->num; }
const std::string& Term::sym() const { return node_->sym; }
std::span<const Term> Term::kids() const { return node_->kids; }
const Term& Term::kid(std::size_t i) const { return node_->kids.at(i); }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.num <=> y.num; c != 0) return c;
  if (auto c = x.sym.compare(y.sym); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::lexicographical_compare_three_way(
      x.kids.begin(), x.kids.end(), y.kids.begin(), y.kids.end());
}

bool operator==(const Term& a, const Term& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string debug_string(const Term& t) {
  std::ostringstream out;
  auto list = [&](const char* open, const char* close) {
    out << open;
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) out << ",";
      out << debug_string(t.kid(i));
    }
    out << close;
  };
  switch (t.kind()) {
    case Kind::Nat: out << t.num(); break;
    case Kind::Omega: out << "omega"; break;
    case Kind::Sym: out << t.sym(); break;
    case Kind::Ord: list("ord(", ")"); break;
    case Kind::OrdTerm:
      out << "w^" << debug_string(t.kid(0)) << "*" << t.num();
      break;
    case Kind::Cut: list("cut(", ")"); break;
    case Kind::Pair: list("(", ")"); break;
    case Kind::Tagged:
      out << (t.num() == 1 ? "L:" : "R:") << debug_string(t.kid(0));
      break;
    case Kind::Seq: list("[", "]"); break;
    case Kind::Set: list("{", "}"); break;
    case Kind::Bag: list("{|", "|}"); break;
    case Kind::Star: list("star(", ")"); break;
    case Kind::One: list("one(", ")"); break;
    case Kind::Product: list("<", ">"); break;
    case Kind::Pf: list("pf(", ")"); break;
  }
  return out.str();
}

}  // namespace wqo
