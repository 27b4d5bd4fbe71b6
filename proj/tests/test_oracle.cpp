#include "doctest.h"
#include "printers.hpp"
#include "wqo/oracle.hpp"
#include "wqo/sequences.hpp"
#include "wqo/sum_product.hpp"

using namespace wqo;

namespace {

Term n(std::uint64_t v) { return Term::nat(v); }
Term pn(std::uint64_t a, std::uint64_t b) { return Term::pair(n(a), n(b)); }
Term w(const std::string& letters) {
  std::vector<Term> xs;
  for (char c : letters) xs.push_back(Term::sym(std::string(1, c)));
  return Term::seq(xs);
}

bool has_finding(const Report& r, const std::string& op, const std::string& property) {
  for (const auto& f : r.failures)
    if (f.op == op && f.property == property) return true;
  return false;
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(enumerate(parse_type("Nat"), Budget{4, 100}) ==
        std::vector<Term>{n(0), n(1), n(2), n(3)});
  CHECK(enumerate(parse_type("Star(Fin{a,b})"), Budget{100, 2}) ==
        std::vector<Term>{w(""), w("a"), w("b"), w("aa"), w("ab"), w("ba"), w("bb")});
  CHECK(enumerate(parse_type("Prod(Nat,Nat)"), Budget{6, 100}) ==
        std::vector<Term>{pn(0, 0), pn(0, 1), pn(1, 0), pn(0, 2), pn(1, 1), pn(2, 0)});
  auto ords = enumerate(parse_type("Ord[w*2]"), Budget{100, 4});
  std::vector<std::string> shown;
  for (const auto& x : ords) shown.push_back(render_ordinal(ordinal_from_term(x)));
  // Within one size the term order applies; it compares coefficients first.
  CHECK(shown == std::vector<std::string>{"0", "1", "w", "2", "w+1", "3", "w+2", "4"});
  CHECK(enumerate(parse_type("Fin{a,b,c}"), Budget{100, 50}).size() == 3);
  auto bags = enumerate(parse_type("Mset(Fin{a,b})"), Budget{100, 2});
  CHECK(bags.size() == 6);
  auto sets = enumerate(parse_type("Pset(Fin{a,b})"), Budget{100, 10});
  CHECK(sets.size() == 4);

  auto t = parse_type("Star(Sum(Nat,Pset(Fin{a,b})))");
  auto first = enumerate(t, Budget{200, 5});
  CHECK(first == enumerate(t, Budget{200, 5}));
  for (std::size_t k = 1; k < first.size(); ++k)
    CHECK(structural_size(first[k - 1]) <= structural_size(first[k]));
  auto X = build_presentation(t);
  for (const auto& x : first) CHECK(X->is_element(x));
}

TEST_CASE("extension of closed sets") {
  auto t = parse_type("Prod(Nat,Nat)");
  auto X = build_presentation(t);
  std::vector<Term> grid;
  for (std::uint64_t a = 0; a < 14; ++a)
    for (std::uint64_t b = 0; b < 14; ++b) grid.push_back(pn(a, b));
  UpSet U{{pn(3, 5), pn(4, 3), pn(5, 1), pn(6, 0)}};
  auto ext = extension_of(*X, ClosedSet(U), grid);
  std::size_t count = 0;
  for (const auto& p : grid) {
    auto a = p.kid(0).num();
    auto b = p.kid(1).num();
    bool in = (a >= 3 && b >= 5) || (a >= 4 && b >= 3) || (a >= 5 && b >= 1) || a >= 6;
    if (in) ++count;
  }
  CHECK(ext.size() == count);
  CHECK(extension_of(*X, ClosedSet(UpSet{}), grid).empty());
  CHECK(extension_of(*X, ClosedSet(DownSet{}), grid).empty());

  auto s = parse_type("Star(Fin{a,b,c})");
  auto S = build_presentation(s);
  auto words = enumerate(s, Budget{1000, 3});
  auto D = parse_ideal("star(dw(a)).star(dw(b))", s);
  auto got = extension_of(*S, ClosedSet(DownSet{{D}}), words);
  std::vector<Term> want;
  for (auto x : {"", "a", "b", "aa", "ab", "bb", "aaa", "aab", "abb", "bbb"})
    want.push_back(w(x));
  std::sort(want.begin(), want.end(), [&](const Term& x, const Term& y) {
    return std::find(words.begin(), words.end(), x) <
           std::find(words.begin(), words.end(), y);
  });
  CHECK(got == want);
}

TEST_CASE("check_presentation passes on sound presentations") {
  auto t = parse_type("Prod(Nat,Nat)");
  auto r = check_presentation(*build_presentation(t), t, Budget{});
  CHECK_MESSAGE(r.passed(), r.text());
  CHECK(r.checks > 100);

  auto chain = parse_type("Fin{a,b,c | a<b, b<c}");
  auto rc = check_presentation(*build_presentation(chain), chain, Budget{});
  CHECK_MESSAGE(rc.passed(), rc.text());
  CHECK(rc.universe_size == 3);
  CHECK(rc.inconclusive.empty());
}

TEST_CASE("mutations are caught") {
  auto t = parse_type("Prod(Nat,Nat)");
  auto X = build_presentation(t);
  auto r = check_presentation(*corrupt(X, "cf"), t, Budget{});
  CHECK_FALSE(r.passed());
  CHECK(has_finding(r, "CF", "complement/extensional"));
  CHECK(r.text().find("complement/extensional") != std::string::npos);
  CHECK(r.json_lines().find("\"complement/extensional\"") != std::string::npos);
  for (std::string op : {"ci", "if", "ii", "pi", "od", "id"})
    CHECK_MESSAGE(!check_presentation(*corrupt(X, op), t, Budget{}).passed(), op);
}

TEST_CASE("reports are reproducible") {
  auto t = parse_type("Star(Fin{a,b})");
  auto X = build_presentation(t);
  CheckOptions o;
  o.seed = 77;
  auto a = check_presentation(*X, t, Budget{30, 6}, o);
  auto b = check_presentation(*X, t, Budget{30, 6}, o);
  CHECK(a.text() == b.text());
  CHECK(a.json_lines() == b.json_lines());
  CHECK(a.text().find("seed=77") != std::string::npos);
  CHECK_MESSAGE(a.passed(), a.text());
}
