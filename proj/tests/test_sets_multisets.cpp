#include <algorithm>
#include <random>

#include "doctest.h"
#include "printers.hpp"
#include "word_oracle.hpp"
#include "wqo/base.hpp"
#include "wqo/sequences.hpp"
#include "wqo/sets_multisets.hpp"

using namespace wqo;
using namespace oracle_words;

namespace {

Term n(std::uint64_t v) { return Term::nat(v); }
Term s(const char* name) { return Term::sym(name); }
Term nset(std::initializer_list<std::uint64_t> xs) {
  std::vector<Term> out;
  for (auto x : xs) out.push_back(n(x));
  return Term::set(out);
}

// A base WQO given by its order on elements and on (element, ideal).
struct BaseOracle {
  std::function<bool(const Term&, const Term&)> leq;
  std::function<bool(const Term&, const Term&)> in_ideal;
};

BaseOracle nat_oracle() {
  return {[](const Term& a, const Term& b) { return a.num() <= b.num(); },
          [](const Term& x, const Term& I) {
            return I.is(Kind::Omega) || x.num() <= I.num();
          }};
}

bool hoare(const BaseOracle& B, const Term& S, const Term& T) {
  for (const auto& x : S.kids())
    if (std::none_of(T.kids().begin(), T.kids().end(),
                     [&](const Term& y) { return B.leq(x, y); }))
      return false;
  return true;
}

bool in_pf(const BaseOracle& B, const Term& S, const Term& I) {
  for (const auto& x : S.kids())
    if (std::none_of(I.kids().begin(), I.kids().end(),
                     [&](const Term& J) { return B.in_ideal(x, J); }))
      return false;
  return true;
}

bool in_up(const BaseOracle& B, const Term& S, const UpSet& U) {
  return std::any_of(U.generators.begin(), U.generators.end(),
                     [&](const Term& g) { return hoare(B, g, S); });
}

bool in_down(const BaseOracle& B, const Term& S, const DownSet& D) {
  return std::any_of(D.ideals.begin(), D.ideals.end(),
                     [&](const Term& I) { return in_pf(B, S, I); });
}

std::vector<Term> all_subsets(const std::vector<Term>& universe) {
  std::vector<Term> out;
  for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
    std::vector<Term> xs;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if (mask >> k & 1) xs.push_back(universe[k]);
    out.push_back(Term::set(xs));
  }
  return out;
}

void check_powerset(PresentationPtr X, const BaseOracle& B,
                    const std::vector<Term>& universe,
                    const std::vector<Term>& base_ideals, std::uint64_t seed) {
  auto P = powerset_fin(X);
  auto sets = all_subsets(universe);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_set(0, sets.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_ideal(0, base_ideals.size() - 1);
  auto random_pf = [&] {
    std::vector<Term> D;
    for (int k = 0, m = int(rng() % 3); k < m; ++k)
      D.push_back(base_ideals[pick_ideal(rng)]);
    return Term::pf(canonize(*X, DownSet{D}).ideals);
  };
  for (int round = 0; round < 40; ++round) {
    auto S = sets[pick_set(rng)];
    auto T = sets[pick_set(rng)];
    auto I = random_pf();
    auto J = random_pf();
    CHECK(P->od(S, T) == hoare(B, S, T));
    auto cf = P->cf(S);
    auto ci = P->ci(I);
    auto ii = P->ii(I, J);
    auto if_ = P->if_(S, T);
    auto pi = P->pi(S);
    bool i_in_j = true;
    for (const auto& Z : sets) {
      CHECK(in_down(B, Z, cf) == !hoare(B, S, Z));
      CHECK(in_up(B, Z, ci) == !in_pf(B, Z, I));
      CHECK(in_down(B, Z, ii) == (in_pf(B, Z, I) && in_pf(B, Z, J)));
      CHECK(in_up(B, Z, if_) == (hoare(B, S, Z) && hoare(B, T, Z)));
      CHECK(in_pf(B, Z, pi) == hoare(B, Z, S));
      if (in_pf(B, Z, I) && !in_pf(B, Z, J)) i_in_j = false;
    }
    CHECK(P->id(I, J) == i_in_j);
  }
  for (const auto& Z : sets) {
    CHECK(in_down(B, Z, P->xi));
    CHECK(in_up(B, Z, P->xf));
  }
}

// Injective embedding of bag a into bag b, by trying every order of a as a
// subsequence of b.
bool bag_oracle(const BaseOracle& B, std::vector<Term> a,
                const std::vector<Term>& b) {
  std::sort(a.begin(), a.end());
  do {
    std::size_t j = 0;
    bool ok = true;
    for (const auto& x : a) {
      while (j < b.size() && !B.leq(x, b[j])) ++j;
      if (j == b.size()) {
        ok = false;
        break;
      }
      ++j;
    }
    if (ok) return true;
  } while (std::next_permutation(a.begin(), a.end()));
  return false;
}

Term bag(const std::string& letters) {
  std::vector<Term> xs;
  for (char c : letters) xs.push_back(Term::sym(std::string(1, c)));
  return Term::bag(xs);
}

BaseOracle discrete_oracle() {
  return {[](const Term& a, const Term& b) { return a == b; },
          [](const Term& x, const Term& I) { return x == I; }};
}

}  // namespace

TEST_CASE("finitary powerset examples") {
  auto P = powerset_fin(naturals());
  CHECK(P->if_(nset({2}), nset({5})) == UpSet{{nset({5})}});
  CHECK(equivalent(*P, P->if_(nset({2}), nset({5})), UpSet{{nset({2, 5})}}));
  CHECK(P->cf(nset({2})) == DownSet{{Term::pf({n(1)})}});
  CHECK(P->od(nset({}), nset({3})));
  CHECK(P->od(nset({}), nset({})));
  CHECK(P->od(nset({1, 3}), nset({4})));
  CHECK_FALSE(P->od(nset({5}), nset({1, 4})));
  CHECK(P->xi == DownSet{{Term::pf({Term::omega()})}});
  CHECK(P->xf == UpSet{{nset({})}});
  CHECK(P->pi(nset({1, 4})) == Term::pf({n(4)}));
  CHECK(P->ci(Term::pf({n(3)})) == UpSet{{nset({4})}});
  CHECK(P->ci(Term::pf({Term::omega()})).empty());

  auto A = powerset_fin(discrete({"a", "b"}));
  auto ab = Term::set({s("a"), s("b")});
  CHECK(A->if_(Term::set({s("a")}), Term::set({s("b")})) == UpSet{{ab}});
  CHECK(A->ci(Term::pf({s("a")})) == UpSet{{Term::set({s("b")})}});
}

TEST_CASE("finitary powerset agrees with the subset oracle") {
  std::vector<Term> universe;
  for (std::uint64_t k = 0; k < 8; ++k) universe.push_back(n(k));
  std::vector<Term> ideals = {n(0), n(2), n(3), n(5), Term::omega()};
  check_powerset(naturals(), nat_oracle(), universe, ideals, 11);

  auto X = finite_qo({{"a", "b", "c", "d", "e"},
                      {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}});
  auto leq = [](const Term& x, const Term& y) {
    const auto& a = x.sym();
    const auto& b = y.sym();
    if (a == b) return true;
    if (a == "a") return b != "e";
    return (a == "b" || a == "c") && b == "d";
  };
  BaseOracle B{leq, leq};
  check_powerset(X, B, {s("a"), s("b"), s("c"), s("d"), s("e")},
                 {s("a"), s("b"), s("c"), s("d"), s("e")}, 12);
}

TEST_CASE("hoare order is the ideal order of principal ideals") {
  auto N = naturals();
  auto P = powerset_fin(N);
  std::vector<Term> universe;
  for (std::uint64_t k = 0; k < 5; ++k) universe.push_back(n(k));
  auto sets = all_subsets(universe);
  for (const auto& S : sets)
    for (const auto& T : sets)
      CHECK(member(*P, S, DownSet{{P->pi(T)}}) == P->od(S, T));
}

TEST_CASE("powerset levels") {
  auto P = powerset_fin(discrete({"a", "b"}));
  CHECK(P->enumerate_level(0) == std::vector<Term>{Term::set({})});
  CHECK(P->enumerate_level(1) ==
        std::vector<Term>{Term::set({s("a")}), Term::set({s("b")})});
  CHECK(P->enumerate_level(2) ==
        std::vector<Term>{Term::set({s("a"), s("b")})});
  CHECK(P->enumerate_level(3).empty());
}

TEST_CASE("multiset examples") {
  auto AB = discrete({"a", "b"});
  auto M = multiset(AB);
  CHECK(M->od(bag("ab"), bag("ba")));
  CHECK(M->od(bag("ba"), bag("ab")));
  auto a = Term::one(s("a"));
  auto b = Term::one(s("b"));
  CHECK(bag_closure(*AB, Term::product({a, b})) ==
        DownSet{{Term::product({a, b}), Term::product({b, a})}});
  CHECK(permutations(w("ab")) == std::vector<Term>{w("ab"), w("ba")});

  auto MN = multiset(naturals());
  auto nb = [](std::initializer_list<std::uint64_t> xs) {
    std::vector<Term> out;
    for (auto x : xs) out.push_back(Term::nat(x));
    return Term::bag(out);
  };
  CHECK(MN->od(nb({1, 1, 1}), nb({2, 1, 1})));
  CHECK_FALSE(MN->od(nb({1, 1, 1}), nb({2})));
  CHECK(MN->xf == UpSet{{Term::bag({})}});
}

TEST_CASE("multiset embedding agrees with permutation brute force") {
  for (std::string sigma : {"ab", "abc"}) {
    std::vector<std::string> ns;
    for (char c : sigma) ns.push_back(std::string(1, c));
    auto X = discrete(ns);
    auto M = multiset(X);
    auto words = all_words(sigma, 4);
    auto B = discrete_oracle();
    for (const auto& u : words)
      for (const auto& v : words) {
        auto a = bag(u);
        auto b = bag(v);
        std::vector<Term> as(a.kids().begin(), a.kids().end());
        std::vector<Term> bs(b.kids().begin(), b.kids().end());
        CHECK(M->od(a, b) == bag_oracle(B, as, bs));
      }
  }
  auto MN = multiset(naturals());
  auto B = nat_oracle();
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    std::vector<Term> as;
    std::vector<Term> bs;
    for (int k = 0, m = int(rng() % 5); k < m; ++k) as.push_back(n(rng() % 4));
    for (int k = 0, m = int(rng() % 5); k < m; ++k) bs.push_back(n(rng() % 4));
    CHECK(MN->od(Term::bag(as), Term::bag(bs)) == bag_oracle(B, as, bs));
  }
}

TEST_CASE("multiset operations agree with bag semantics") {
  auto AB = discrete({"a", "b"});
  auto M = multiset(AB);
  auto B = discrete_oracle();
  std::vector<Term> bags;
  for (const auto& x : all_words("ab", 5))
    if (std::is_sorted(x.begin(), x.end())) bags.push_back(bag(x));
  auto word_of = [](const Term& t) {
    std::string out;
    for (const auto& x : t.kids()) out += x.sym();
    return out;
  };
  auto embeds = [&](const Term& a, const Term& b) {
    std::vector<Term> as(a.kids().begin(), a.kids().end());
    std::vector<Term> bs(b.kids().begin(), b.kids().end());
    return bag_oracle(B, as, bs);
  };
  // A bag lies in the ideal of P when some ordering of it lies in P.
  auto in_ideal = [&](const Term& a, const Term& P) {
    std::string x = word_of(a);
    std::sort(x.begin(), x.end());
    do {
      if (in_product(x, P)) return true;
    } while (std::next_permutation(x.begin(), x.end()));
    return false;
  };
  auto in_down = [&](const Term& a, const DownSet& D) {
    return std::any_of(D.ideals.begin(), D.ideals.end(),
                       [&](const Term& P) { return in_ideal(a, P); });
  };
  auto in_up = [&](const Term& a, const UpSet& U) {
    return std::any_of(U.generators.begin(), U.generators.end(),
                       [&](const Term& g) { return embeds(g, a); });
  };
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    auto P = random_product(rng, "ab", 3);
    auto Q = random_product(rng, "ab", 3);
    std::string us = str(random_word(rng, "ab", 3));
    std::string vs = str(random_word(rng, "ab", 3));
    std::sort(us.begin(), us.end());
    std::sort(vs.begin(), vs.end());
    auto u = bag(us);
    auto v = bag(vs);
    auto cf = M->cf(u);
    auto ci = M->ci(P);
    auto ii = M->ii(P, Q);
    auto if_ = M->if_(u, v);
    bool p_in_q = true;
    for (const auto& z : bags) {
      CHECK(in_down(z, cf) == !embeds(u, z));
      CHECK(in_up(z, ci) == !in_ideal(z, P));
      CHECK(in_down(z, ii) == (in_ideal(z, P) && in_ideal(z, Q)));
      CHECK(in_up(z, if_) == (embeds(u, z) && embeds(v, z)));
      CHECK(in_ideal(z, M->pi(u)) == embeds(z, u));
      if (in_ideal(z, P) && !in_ideal(z, Q)) p_in_q = false;
    }
    CHECK(M->id(P, Q) == p_in_q);
  }
}
