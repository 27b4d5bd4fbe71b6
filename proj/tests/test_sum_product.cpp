#include "doctest.h"
#include "printers.hpp"
#include "wqo/base.hpp"
#include "wqo/sum_product.hpp"

using namespace wqo;

namespace {

Term n(std::uint64_t v) { return Term::nat(v); }
Term w() { return Term::omega(); }
Term p(Term a, Term b) { return Term::pair(std::move(a), std::move(b)); }
Term pn(std::uint64_t a, std::uint64_t b) { return p(n(a), n(b)); }
Term s(const char* name) { return Term::sym(name); }

UpSet ups(std::initializer_list<std::pair<int, int>> gens) {
  UpSet u;
  for (auto [a, b] : gens) u.generators.push_back(pn(a, b));
  return u;
}

// Direct membership in N^2 from the ω-vector reading of ideals.
bool in_ideal2(std::uint64_t a, std::uint64_t b, const Term& I) {
  auto ok = [](std::uint64_t v, const Term& bound) {
    return bound.is(Kind::Omega) || v <= bound.num();
  };
  return ok(a, I.kid(0)) && ok(b, I.kid(1));
}

bool in_down2(std::uint64_t a, std::uint64_t b, const DownSet& D) {
  for (const auto& I : D.ideals)
    if (in_ideal2(a, b, I)) return true;
  return false;
}

bool in_up2(std::uint64_t a, std::uint64_t b, const UpSet& U) {
  for (const auto& g : U.generators)
    if (g.kid(0).num() <= a && g.kid(1).num() <= b) return true;
  return false;
}

const UpSet U_exi = ups({{3, 5}, {4, 3}, {5, 1}, {6, 0}});
const UpSet V_exi = ups({{0, 6}, {6, 5}, {8, 4}, {9, 3}, {10, 1}, {11, 0}});

}  // namespace

TEST_CASE("N^2 worked examples") {
  auto N2 = product(naturals(), naturals());
  CHECK_FALSE(member(*N2, pn(3, 5), V_exi));
  CHECK_FALSE(subset(*N2, U_exi, V_exi));
  CHECK(unite(*N2, U_exi, V_exi) ==
        ups({{0, 6}, {3, 5}, {4, 3}, {5, 1}, {6, 0}}));
  CHECK(intersect(*N2, U_exi, V_exi) ==
        ups({{3, 6}, {6, 5}, {8, 4}, {9, 3}, {10, 1}, {11, 0}}));
  CHECK(complement(*N2, U_exi) ==
        DownSet{{p(n(2), w()), pn(3, 4), pn(4, 2), pn(5, 0)}});
  CHECK(complement(*N2, DownSet{{pn(2, 3)}}) == ups({{0, 4}, {3, 0}}));
  CHECK(N2->if_(pn(3, 5), pn(4, 3)) == ups({{4, 5}}));
  CHECK(N2->cf(pn(3, 5)) == DownSet{{p(n(2), w()), p(w(), n(4))}});
  CHECK(N2->ii(pn(5, 5), pn(7, 4)) == DownSet{{pn(5, 4)}});
  CHECK(N2->xi == DownSet{{p(w(), w())}});
  CHECK(N2->xf == ups({{0, 0}}));
}

TEST_CASE("N^2 operations agree with the grid") {
  auto N2 = product(naturals(), naturals());
  std::vector<UpSet> ups_ = {U_exi, V_exi, {}, ups({{0, 0}}), ups({{2, 2}})};
  for (const auto& U : ups_) {
    auto D = complement(*N2, U);
    for (std::uint64_t a = 0; a < 14; ++a)
      for (std::uint64_t b = 0; b < 14; ++b)
        CHECK(in_down2(a, b, D) != in_up2(a, b, U));
    auto back = complement(*N2, D);
    CHECK(back == canonize(*N2, U));
  }
  for (const auto& U : ups_)
    for (const auto& V : ups_) {
      auto I = intersect(*N2, U, V);
      for (std::uint64_t a = 0; a < 14; ++a)
        for (std::uint64_t b = 0; b < 14; ++b)
          CHECK(in_up2(a, b, I) == (in_up2(a, b, U) && in_up2(a, b, V)));
    }
}

TEST_CASE("disjoint sum") {
  auto S = disjoint_sum(naturals(), naturals());
  auto L = [](Term t) { return Term::tagged(1, std::move(t)); };
  auto R = [](Term t) { return Term::tagged(2, std::move(t)); };
  CHECK(S->cf(L(n(2))) == DownSet{{L(n(1)), R(w())}});
  CHECK(S->if_(L(n(1)), R(n(1))).empty());
  CHECK(S->ii(L(n(3)), L(n(5))) == DownSet{{L(n(3))}});
  CHECK(S->ii(L(n(3)), R(n(5))).empty());
  CHECK_FALSE(S->od(L(n(0)), R(n(9))));
  CHECK(S->xi == DownSet{{L(w()), R(w())}});
  CHECK(S->xf == UpSet{{L(n(0)), R(n(0))}});
  CHECK(S->ci(L(n(3))) == UpSet{{L(n(4)), R(n(0))}});
}

TEST_CASE("lexicographic sum") {
  auto L = [](Term t) { return Term::tagged(1, std::move(t)); };
  auto R = [](Term t) { return Term::tagged(2, std::move(t)); };
  auto NN = lex_sum(naturals(), naturals());
  CHECK(NN->od(L(n(99)), R(n(0))));
  CHECK_FALSE(NN->od(R(n(0)), L(n(99))));
  CHECK(NN->xi == DownSet{{R(w())}});
  CHECK(NN->xf == UpSet{{L(n(0))}});
  CHECK(NN->cf(R(n(0))) == DownSet{{L(w())}});
  CHECK(NN->cf(R(n(3))) == DownSet{{R(n(2))}});
  CHECK(NN->ci(L(n(3))) == UpSet{{L(n(4))}});
  CHECK(NN->ci(R(n(3))) == UpSet{{R(n(4))}});
  CHECK(NN->if_(L(n(3)), R(n(1))) == UpSet{{R(n(1))}});

  auto A2 = discrete({"a", "b"});
  auto AN = lex_sum(A2, naturals());
  CHECK(AN->ii(R(n(0)), R(n(0))) == DownSet{{R(n(0))}});
  auto NA = lex_sum(naturals(), A2);
  CHECK(NA->ii(R(s("a")), R(s("b"))) == DownSet{{L(w())}});
  // Two side-1 filters meet in side 1 and in all of side 2.
  CHECK(NA->if_(L(n(1)), L(n(4))) == UpSet{{L(n(4))}});
  CHECK(AN->if_(L(s("a")), L(s("b"))) == UpSet{{R(n(0))}});
  CHECK(AN->ci(L(s("a"))) == UpSet{{L(s("b"))}});
  CHECK(AN->xf == UpSet{{L(s("a")), L(s("b"))}});
}

TEST_CASE("product levels are the diagonals") {
  auto N2 = product(naturals(), naturals());
  CHECK(N2->enumerate_level(0) == std::vector<Term>{pn(0, 0)});
  CHECK(N2->enumerate_level(2) ==
        std::vector<Term>{pn(0, 2), pn(1, 1), pn(2, 0)});
}
