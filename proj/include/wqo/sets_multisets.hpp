#pragma once

#include "wqo/kernel.hpp"

namespace wqo {

/// Finite subsets of X (Set terms) under the Hoare order. Ideals are Pf(D)
/// for canonical DownSets D of X.
PresentationPtr powerset_fin(PresentationPtr X);

/// Whether every member of S lies below some member of T.
bool hoare_leq(const Presentation& X, const Element& S, const Element& T);

/// Finite multisets of X (Bag terms) under multiset embedding. Ideals are
/// Higman products standing for their permutation closure.
PresentationPtr multiset(PresentationPtr X);

/// Whether the bag a embeds injectively into the bag b.
bool bag_embeds(const Presentation& X, const Element& a, const Element& b);

/// Permutation closure of a product: with D the union of the Star bodies
/// and I1..Ip the One ideals, the union over orders of
/// Star(D) One(I_s1) Star(D) ... One(I_sp) Star(D). Exponential in p.
DownSet bag_closure(const Presentation& X, const Ideal& P);

/// Distinct permutations of a word, sorted.
std::vector<Element> permutations(const Element& w);

}  // namespace wqo
