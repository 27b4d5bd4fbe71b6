#include "wqo/sum_product.hpp"

namespace wqo {

namespace {

bool accepts(const std::function<bool(const Term&)>& check, const Term& t) {
  return !check || check(t);
}

std::vector<Term> tag(int side, const std::vector<Term>& values) {
  std::vector<Term> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(Term::tagged(side, v));
  return out;
}

std::vector<Term> concat(std::vector<Term> a, const std::vector<Term>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int side_of(const Term& t) {
  if (!t.is(Kind::Tagged) || t.arity() != 1 || (t.num() != 1 && t.num() != 2))
    throw KindError("expected a tagged sum value: " + debug_string(t));
  return static_cast<int>(t.num());
}

std::function<bool(const Term&)> tagged_check(
    std::function<bool(const Term&)> c1, std::function<bool(const Term&)> c2) {
  return [c1, c2](const Term& t) {
    if (!t.is(Kind::Tagged) || t.arity() != 1) return false;
    if (t.num() == 1) return accepts(c1, t.kid(0));
    if (t.num() == 2) return accepts(c2, t.kid(0));
    return false;
  };
}

LevelEnumerator sum_levels(PresentationPtr X1, PresentationPtr X2) {
  if (!X1->enumerate_level || !X2->enumerate_level) return nullptr;
  return [X1, X2](std::size_t level) {
    return concat(tag(1, X1->enumerate_level(level)),
                  tag(2, X2->enumerate_level(level)));
  };
}

}  // namespace

PresentationPtr disjoint_sum(PresentationPtr X1, PresentationPtr X2) {
  auto p = std::make_shared<Presentation>();
  p->name = "sum";
  p->is_element = tagged_check(X1->is_element, X2->is_element);
  p->is_ideal = tagged_check(X1->is_ideal, X2->is_ideal);
  auto part = [X1, X2](int side) { return side == 1 ? X1 : X2; };
  p->od = [part](const Element& x, const Element& y) {
    int i = side_of(x);
    return i == side_of(y) && part(i)->od(x.kid(0), y.kid(0));
  };
  p->id = [part](const Ideal& I, const Ideal& J) {
    int i = side_of(I);
    return i == side_of(J) && part(i)->id(I.kid(0), J.kid(0));
  };
  p->pi = [part](const Element& x) {
    int i = side_of(x);
    return Term::tagged(i, part(i)->pi(x.kid(0)));
  };
  Order od = p->od;
  Order id = p->id;
  p->cf = [part, id](const Element& x) {
    int i = side_of(x);
    int other = 3 - i;
    return canonical_down(concat(tag(i, part(i)->cf(x.kid(0)).ideals),
                                 tag(other, part(other)->xi.ideals)),
                          id);
  };
  p->ci = [part, od](const Ideal& I) {
    int i = side_of(I);
    int other = 3 - i;
    return canonical_up(concat(tag(i, part(i)->ci(I.kid(0)).generators),
                               tag(other, part(other)->xf.generators)),
                        od);
  };
  p->if_ = [part, od](const Element& x, const Element& y) {
    int i = side_of(x);
    if (i != side_of(y)) return UpSet{};
    return canonical_up(tag(i, part(i)->if_(x.kid(0), y.kid(0)).generators),
                        od);
  };
  p->ii = [part, id](const Ideal& I, const Ideal& J) {
    int i = side_of(I);
    if (i != side_of(J)) return DownSet{};
    return canonical_down(tag(i, part(i)->ii(I.kid(0), J.kid(0)).ideals), id);
  };
  p->xi = canonical_down(concat(tag(1, X1->xi.ideals), tag(2, X2->xi.ideals)),
                         id);
  p->xf = canonical_up(
      concat(tag(1, X1->xf.generators), tag(2, X2->xf.generators)), od);
  p->enumerate_level = sum_levels(X1, X2);
  return p;
}

PresentationPtr lex_sum(PresentationPtr X1, PresentationPtr X2) {
  auto p = std::make_shared<Presentation>();
  p->name = "lexsum";
  p->is_element = tagged_check(X1->is_element, X2->is_element);
  p->is_ideal = tagged_check(X1->is_ideal, X2->is_ideal);
  auto part = [X1, X2](int side) { return side == 1 ? X1 : X2; };
  p->od = [part](const Element& x, const Element& y) {
    int i = side_of(x);
    int j = side_of(y);
    return i < j || (i == j && part(i)->od(x.kid(0), y.kid(0)));
  };
  // Side-2 ideals contain all of side 1.
  p->id = [part](const Ideal& I, const Ideal& J) {
    int i = side_of(I);
    int j = side_of(J);
    return i < j || (i == j && part(i)->id(I.kid(0), J.kid(0)));
  };
  p->pi = [part](const Element& x) {
    int i = side_of(x);
    return Term::tagged(i, part(i)->pi(x.kid(0)));
  };
  Order od = p->od;
  Order id = p->id;
  // {1} x X1, as a list of side-1 ideals.
  auto all_first = tag(1, X1->xi.ideals);
  p->cf = [X1, X2, id, all_first](const Element& x) {
    if (side_of(x) == 1)
      return canonical_down(tag(1, X1->cf(x.kid(0)).ideals), id);
    auto rest = X2->cf(x.kid(0));
    if (rest.empty()) return canonical_down(all_first, id);
    return canonical_down(tag(2, rest.ideals), id);
  };
  p->ci = [X1, X2, od](const Ideal& I) {
    if (side_of(I) == 2)
      return canonical_up(tag(2, X2->ci(I.kid(0)).generators), od);
    return canonical_up(concat(tag(1, X1->ci(I.kid(0)).generators),
                               tag(2, X2->xf.generators)),
                        od);
  };
  p->if_ = [X1, X2, od](const Element& x, const Element& y) {
    int i = side_of(x);
    int j = side_of(y);
    if (i != j) return UpSet{{i > j ? x : y}};
    if (i == 2)
      return canonical_up(tag(2, X2->if_(x.kid(0), y.kid(0)).generators), od);
    return canonical_up(concat(tag(1, X1->if_(x.kid(0), y.kid(0)).generators),
                               tag(2, X2->xf.generators)),
                        od);
  };
  p->ii = [X1, X2, id, all_first](const Ideal& I, const Ideal& J) {
    int i = side_of(I);
    int j = side_of(J);
    if (i != j) return DownSet{{i < j ? I : J}};
    if (i == 1)
      return canonical_down(tag(1, X1->ii(I.kid(0), J.kid(0)).ideals), id);
    auto both = X2->ii(I.kid(0), J.kid(0));
    if (both.empty()) return canonical_down(all_first, id);
    return canonical_down(tag(2, both.ideals), id);
  };
  p->xi = X2->xi.empty() ? canonical_down(all_first, id)
                         : canonical_down(tag(2, X2->xi.ideals), id);
  p->xf = canonical_up(
      concat(tag(1, X1->xf.generators), tag(2, X2->xf.generators)), od);
  p->enumerate_level = sum_levels(X1, X2);
  return p;
}

namespace {

void check_pair(const Term& t) {
  if (!t.is(Kind::Pair) || t.arity() != 2)
    throw KindError("expected a pair: " + debug_string(t));
}

std::vector<Term> pairs(const std::vector<Term>& left,
                        const std::vector<Term>& right) {
  std::vector<Term> out;
  out.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) out.push_back(Term::pair(a, b));
  return out;
}

}  // namespace

PresentationPtr product(PresentationPtr X1, PresentationPtr X2) {
  auto p = std::make_shared<Presentation>();
  p->name = "prod";
  auto pair_check = [](std::function<bool(const Term&)> c1,
                       std::function<bool(const Term&)> c2) {
    return [c1, c2](const Term& t) {
      return t.is(Kind::Pair) && t.arity() == 2 && accepts(c1, t.kid(0)) &&
             accepts(c2, t.kid(1));
    };
  };
  p->is_element = pair_check(X1->is_element, X2->is_element);
  p->is_ideal = pair_check(X1->is_ideal, X2->is_ideal);
  p->od = [X1, X2](const Element& x, const Element& y) {
    check_pair(x);
    check_pair(y);
    return X1->od(x.kid(0), y.kid(0)) && X2->od(x.kid(1), y.kid(1));
  };
  p->id = [X1, X2](const Ideal& I, const Ideal& J) {
    check_pair(I);
    check_pair(J);
    return X1->id(I.kid(0), J.kid(0)) && X2->id(I.kid(1), J.kid(1));
  };
  p->pi = [X1, X2](const Element& x) {
    check_pair(x);
    return Term::pair(X1->pi(x.kid(0)), X2->pi(x.kid(1)));
  };
  Order od = p->od;
  Order id = p->id;
  p->cf = [X1, X2, id](const Element& x) {
    check_pair(x);
    return canonical_down(concat(pairs(X1->cf(x.kid(0)).ideals, X2->xi.ideals),
                                 pairs(X1->xi.ideals, X2->cf(x.kid(1)).ideals)),
                          id);
  };
  p->ci = [X1, X2, od](const Ideal& I) {
    check_pair(I);
    return canonical_up(
        concat(pairs(X1->ci(I.kid(0)).generators, X2->xf.generators),
               pairs(X1->xf.generators, X2->ci(I.kid(1)).generators)),
        od);
  };
  p->if_ = [X1, X2, od](const Element& x, const Element& y) {
    check_pair(x);
    check_pair(y);
    return canonical_up(pairs(X1->if_(x.kid(0), y.kid(0)).generators,
                              X2->if_(x.kid(1), y.kid(1)).generators),
                        od);
  };
  p->ii = [X1, X2, id](const Ideal& I, const Ideal& J) {
    check_pair(I);
    check_pair(J);
    return canonical_down(pairs(X1->ii(I.kid(0), J.kid(0)).ideals,
                                X2->ii(I.kid(1), J.kid(1)).ideals),
                          id);
  };
  p->xi = canonical_down(pairs(X1->xi.ideals, X2->xi.ideals), id);
  p->xf = canonical_up(pairs(X1->xf.generators, X2->xf.generators), od);
  if (X1->enumerate_level && X2->enumerate_level) {
    p->enumerate_level = [X1, X2](std::size_t level) {
      std::vector<Element> out;
      for (std::size_t i = 0; i <= level; ++i) {
        auto left = X1->enumerate_level(i);
        if (left.empty()) continue;
        auto right = X2->enumerate_level(level - i);
        auto part = pairs(left, right);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    };
  }
  return p;
}

}  // namespace wqo
