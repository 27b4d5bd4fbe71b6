#include "wqo/kernel.hpp"

#include <algorithm>

namespace wqo {

const UpSet& ClosedSet::up() const {
  if (auto* u = std::get_if<UpSet>(&body_)) return *u;
  throw PolarityError("expected an upward-closed set");
}

const DownSet& ClosedSet::down() const {
  if (auto* d = std::get_if<DownSet>(&body_)) return *d;
  throw PolarityError("expected a downward-closed set");
}

bool ClosedSet::empty() const {
  return is_up() ? up().empty() : down().empty();
}

std::vector<Term> sorted_unique(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

namespace {

// Keeps x[i] unless some other x[j] dominates it strictly, or equivalently
// with a smaller index. `above(a, b)` means b is subsumed by a.
template <typename Above>
std::vector<Term> keep_maximal(std::vector<Term> xs, Above above) {
  xs = sorted_unique(std::move(xs));
  std::vector<Term> kept;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < xs.size() && !dominated; ++j) {
      if (j == i || !above(xs[j], xs[i])) continue;
      dominated = j < i || !above(xs[i], xs[j]);
    }
    if (!dominated) kept.push_back(xs[i]);
  }
  return kept;
}

void check_element(const Presentation& X, const Element& x) {
  if (X.is_element && !X.is_element(x))
    throw KindError("not an element of " + X.name + ": " + debug_string(x));
}

void check_ideal(const Presentation& X, const Ideal& I) {
  if (X.is_ideal && !X.is_ideal(I))
    throw KindError("not an ideal of " + X.name + ": " + debug_string(I));
}

void check_set(const Presentation& X, const ClosedSet& S) {
  if (S.is_up()) {
    for (const auto& g : S.up().generators) check_element(X, g);
  } else {
    for (const auto& I : S.down().ideals) check_ideal(X, I);
  }
}

void check_same_polarity(const ClosedSet& S, const ClosedSet& T) {
  if (S.polarity() != T.polarity())
    throw PolarityError("closed sets of different polarities");
}

}  // namespace

bool member(const Presentation& X, const Element& x, const UpSet& U) {
  return std::any_of(U.generators.begin(), U.generators.end(),
                     [&](const Element& g) { return X.od(g, x); });
}

bool member(const Presentation& X, const Element& x, const DownSet& D) {
  if (D.empty()) return false;
  return ideal_within(X, X.pi(x), D);
}

bool ideal_within(const Presentation& X, const Ideal& I, const DownSet& D) {
  return std::any_of(D.ideals.begin(), D.ideals.end(),
                     [&](const Ideal& J) { return X.id(I, J); });
}

UpSet canonical_up(std::vector<Element> generators, const Order& od) {
  return {keep_maximal(std::move(generators),
                       [&](const Term& a, const Term& b) { return od(a, b); })};
}

DownSet canonical_down(std::vector<Ideal> ideals, const Order& id) {
  return {keep_maximal(std::move(ideals),
                       [&](const Term& a, const Term& b) { return id(b, a); })};
}

UpSet canonize(const Presentation& X, UpSet U) {
  return canonical_up(std::move(U.generators), X.od);
}

DownSet canonize(const Presentation& X, DownSet D) {
  return canonical_down(std::move(D.ideals), X.id);
}

bool subset(const Presentation& X, const UpSet& U, const UpSet& V) {
  return std::all_of(U.generators.begin(), U.generators.end(),
                     [&](const Element& g) { return member(X, g, V); });
}

bool subset(const Presentation& X, const DownSet& D, const DownSet& E) {
  return std::all_of(D.ideals.begin(), D.ideals.end(),
                     [&](const Ideal& I) { return ideal_within(X, I, E); });
}

UpSet unite(const Presentation& X, const UpSet& U, const UpSet& V) {
  UpSet all = U;
  all.generators.insert(all.generators.end(), V.generators.begin(),
                        V.generators.end());
  return canonize(X, std::move(all));
}

DownSet unite(const Presentation& X, const DownSet& D, const DownSet& E) {
  DownSet all = D;
  all.ideals.insert(all.ideals.end(), E.ideals.begin(), E.ideals.end());
  return canonize(X, std::move(all));
}

UpSet intersect(const Presentation& X, const UpSet& U, const UpSet& V) {
  UpSet out;
  for (const auto& x : U.generators)
    for (const auto& y : V.generators) {
      auto part = X.if_(x, y);
      out.generators.insert(out.generators.end(), part.generators.begin(),
                            part.generators.end());
    }
  return canonize(X, std::move(out));
}

DownSet intersect(const Presentation& X, const DownSet& D, const DownSet& E) {
  DownSet out;
  for (const auto& I : D.ideals)
    for (const auto& J : E.ideals) {
      auto part = X.ii(I, J);
      out.ideals.insert(out.ideals.end(), part.ideals.begin(),
                        part.ideals.end());
    }
  return canonize(X, std::move(out));
}

DownSet complement(const Presentation& X, const UpSet& U) {
  if (U.empty()) return canonize(X, X.xi);
  DownSet acc = canonize(X, X.cf(U.generators.front()));
  for (std::size_t i = 1; i < U.generators.size() && !acc.empty(); ++i)
    acc = intersect(X, acc, X.cf(U.generators[i]));
  return acc;
}

UpSet complement(const Presentation& X, const DownSet& D) {
  if (D.empty()) return canonize(X, X.xf);
  UpSet acc = canonize(X, X.ci(D.ideals.front()));
  for (std::size_t i = 1; i < D.ideals.size() && !acc.empty(); ++i)
    acc = intersect(X, acc, X.ci(D.ideals[i]));
  return acc;
}

bool equivalent(const Presentation& X, const UpSet& U, const UpSet& V) {
  return subset(X, U, V) && subset(X, V, U);
}

bool equivalent(const Presentation& X, const DownSet& D, const DownSet& E) {
  return subset(X, D, E) && subset(X, E, D);
}

bool member(const Presentation& X, const Element& x, const ClosedSet& S) {
  check_element(X, x);
  check_set(X, S);
  return S.is_up() ? member(X, x, S.up()) : member(X, x, S.down());
}

bool subset(const Presentation& X, const ClosedSet& S, const ClosedSet& T) {
  check_same_polarity(S, T);
  check_set(X, S);
  check_set(X, T);
  return S.is_up() ? subset(X, S.up(), T.up()) : subset(X, S.down(), T.down());
}

ClosedSet canonize(const Presentation& X, const ClosedSet& S) {
  check_set(X, S);
  if (S.is_up()) return canonize(X, S.up());
  return canonize(X, S.down());
}

ClosedSet unite(const Presentation& X, const ClosedSet& S, const ClosedSet& T) {
  check_same_polarity(S, T);
  check_set(X, S);
  check_set(X, T);
  if (S.is_up()) return unite(X, S.up(), T.up());
  return unite(X, S.down(), T.down());
}

ClosedSet intersect(const Presentation& X, const ClosedSet& S,
                    const ClosedSet& T) {
  check_same_polarity(S, T);
  check_set(X, S);
  check_set(X, T);
  if (S.is_up()) return intersect(X, S.up(), T.up());
  return intersect(X, S.down(), T.down());
}

ClosedSet complement(const Presentation& X, const ClosedSet& S) {
  check_set(X, S);
  if (S.is_up()) return complement(X, S.up());
  return complement(X, S.down());
}

bool equivalent(const Presentation& X, const ClosedSet& S, const ClosedSet& T) {
  return subset(X, S, T) && subset(X, T, S);
}

ClosedSet empty_set(Polarity p) {
  if (p == Polarity::Up) return UpSet{};
  return DownSet{};
}

ClosedSet full_set(const Presentation& X, Polarity p) {
  if (p == Polarity::Up) return canonize(X, X.xf);
  return canonize(X, X.xi);
}

ShortPresentation shorten(const Presentation& X) {
  return {X.name, X.is_element, X.is_ideal, X.id,
          X.pi,   X.cf,         X.ii,         X.xi,
          X.enumerate_level};
}

namespace {

// The part of a presentation available from a short one; enough for
// canonize / intersect / complement of UpSets / subset of DownSets.
Presentation partial_from_short(const ShortPresentation& s) {
  Presentation p;
  p.name = s.name;
  p.is_element = s.is_element;
  p.is_ideal = s.is_ideal;
  p.id = s.id;
  p.pi = s.pi;
  p.cf = s.cf;
  p.ii = s.ii;
  p.xi = s.xi;
  p.enumerate_level = s.enumerate_level;
  auto id = s.id;
  auto pi = s.pi;
  p.od = [id, pi](const Element& x, const Element& y) {
    return id(pi(x), pi(y));
  };
  return p;
}

UpSet saturate(const Presentation& partial, const DownSet& D) {
  UpSet U;
  for (std::size_t round = 0; round < kComplementLoopCap; ++round) {
    DownSet not_u = complement(partial, U);
    if (subset(partial, not_u, D)) return canonize(partial, std::move(U));
    std::optional<Element> witness;
    for (std::size_t level = 0; level < kWitnessLevelCap && !witness; ++level) {
      for (const auto& x : partial.enumerate_level(level)) {
        if (!member(partial, x, U) && !member(partial, x, D)) {
          witness = x;
          break;
        }
      }
    }
    if (!witness)
      throw Error("complement loop found no witness within the level cap");
    U.generators.push_back(*witness);
    U = canonize(partial, std::move(U));
  }
  throw Error("complement loop exceeded its iteration cap");
}

}  // namespace

UpSet complement_by_saturation(const ShortPresentation& shortp,
                               const DownSet& D) {
  if (!shortp.enumerate_level)
    throw ConstructionError("short presentation without an enumerator");
  return saturate(partial_from_short(shortp), D);
}

PresentationPtr derive_full_presentation(ShortPresentation shortp) {
  if (!shortp.enumerate_level)
    throw ConstructionError("short presentation of " + shortp.name +
                            " has no enumerator");
  auto partial =
      std::make_shared<const Presentation>(partial_from_short(shortp));
  Presentation full = *partial;
  full.name = shortp.name;
  full.ci = [partial](const Ideal& I) {
    return saturate(*partial, DownSet{{I}});
  };
  full.if_ = [partial](const Element& x, const Element& y) {
    DownSet both = unite(*partial, partial->cf(x), partial->cf(y));
    return saturate(*partial, both);
  };
  full.xf = saturate(*partial, DownSet{});
  return std::make_shared<const Presentation>(std::move(full));
}

}  // namespace wqo
