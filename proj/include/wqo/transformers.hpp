#pragma once

#include "wqo/kernel.hpp"

namespace wqo {

/// Closures under a larger order (or an equivalence), expressed in the base
/// presentation: `ci(I)` is the closure of the base ideal I as a base
/// DownSet, `cf(x)` the closure of the base filter of x as a base UpSet.
struct ClosureFns {
  std::function<DownSet(const Ideal&)> ci;
  std::function<UpSet(const Element&)> cf;
};

/// The base WQO under the extended order. Ideals are base ideals I standing
/// for the closure of I; two representatives may denote the same ideal.
PresentationPtr extend(PresentationPtr X, ClosureFns fns,
                       std::string name = "extend");

/// Like extend, for closures under an equivalence compatible with the base
/// order. Intersections call the closure function once instead of twice.
PresentationPtr quotient(PresentationPtr X, ClosureFns fns,
                         std::string name = "quotient");

/// A subset Y of the base, described by membership, the two restriction
/// maps s_i(I) = down-closure of (I n Y) and s_f(x) = up-closure of
/// (up(x) n Y), and an enumerator of Y.
struct SubspaceFns {
  std::function<bool(const Element&)> member_y;
  std::function<DownSet(const Ideal&)> s_i;
  std::function<UpSet(const Element&)> s_f;
  LevelEnumerator enum_y;
};

/// Ideals are the base ideals in the adherence of Y, i.e. those with
/// s_i(I) canonically equal to [I].
PresentationPtr induce(PresentationPtr X, SubspaceFns fns,
                       std::string name = "induce");

/// Whether the base ideal I is in the adherence of Y.
bool adherent(const Presentation& X, const SubspaceFns& fns, const Ideal& I);

/// Subspace functions for a finite subset Y given extensionally.
SubspaceFns finite_subspace(PresentationPtr X, std::vector<Element> ys);

/// Subspace functions for a downward-closed Y given by its decomposition.
SubspaceFns downward_subspace(PresentationPtr X, DownSet Y);

}  // namespace wqo
