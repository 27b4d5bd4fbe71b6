#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wqo/term.hpp"

namespace wqo {

/// Finite union of principal filters. Canonical when the generators are
/// pairwise incomparable and sorted by the term order.
struct UpSet {
  std::vector<Element> generators;

  bool empty() const { return generators.empty(); }
  std::size_t size() const { return generators.size(); }
  friend bool operator==(const UpSet&, const UpSet&) = default;
};

/// Finite union of ideals. Canonical when the ideals are pairwise
/// incomparable for inclusion and sorted by the term order.
struct DownSet {
  std::vector<Ideal> ideals;

  bool empty() const { return ideals.empty(); }
  std::size_t size() const { return ideals.size(); }
  friend bool operator==(const DownSet&, const DownSet&) = default;
};

enum class Polarity { Up, Down };

inline Polarity flip(Polarity p) {
  return p == Polarity::Up ? Polarity::Down : Polarity::Up;
}

class ClosedSet {
 public:
  ClosedSet(UpSet up) : body_(std::move(up)) {}
  ClosedSet(DownSet down) : body_(std::move(down)) {}

  Polarity polarity() const {
    return std::holds_alternative<UpSet>(body_) ? Polarity::Up
                                                : Polarity::Down;
  }
  bool is_up() const { return polarity() == Polarity::Up; }
  const UpSet& up() const;
  const DownSet& down() const;
  bool empty() const;

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

 private:
  std::variant<UpSet, DownSet> body_;
};

/// Elements of rank exactly `level`; every level is finite and the
/// concatenation over all levels is a fair enumeration of the WQO.
using LevelEnumerator = std::function<std::vector<Element>(std::size_t level)>;

/// An ideally effective WQO: the seven procedures plus the two
/// decompositions of the whole space.
///
/// Every procedure must be pure. `is_element` / `is_ideal` are shape checks
/// used to reject ill-typed arguments at the kernel boundary.
struct Presentation {
  std::string name;
  std::function<bool(const Term&)> is_element;
  std::function<bool(const Term&)> is_ideal;

  std::function<bool(const Element&, const Element&)> od;
  std::function<bool(const Ideal&, const Ideal&)> id;
  std::function<Ideal(const Element&)> pi;
  std::function<DownSet(const Element&)> cf;
  std::function<UpSet(const Element&, const Element&)> if_;
  std::function<UpSet(const Ideal&)> ci;
  std::function<DownSet(const Ideal&, const Ideal&)> ii;
  DownSet xi;
  UpSet xf;

  /// Optional; required by derive_full_presentation and induced WQOs.
  LevelEnumerator enumerate_level;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// The reduced bundle from which a full presentation can be derived.
struct ShortPresentation {
  std::string name;
  std::function<bool(const Term&)> is_element;
  std::function<bool(const Term&)> is_ideal;
  std::function<bool(const Ideal&, const Ideal&)> id;
  std::function<Ideal(const Element&)> pi;
  std::function<DownSet(const Element&)> cf;
  std::function<DownSet(const Ideal&, const Ideal&)> ii;
  DownSet xi;
  LevelEnumerator enumerate_level;
};

// Sorts by the term order and drops structural duplicates.
std::vector<Term> sorted_unique(std::vector<Term> terms);

using Order = std::function<bool(const Term&, const Term&)>;

/// Canonical UpSet of the given generators under the element order `od`.
UpSet canonical_up(std::vector<Element> generators, const Order& od);
/// Canonical DownSet of the given ideals under the inclusion order `id`.
DownSet canonical_down(std::vector<Ideal> ideals, const Order& id);

// ---- Algebra over UpSet / DownSet -----------------------------------------

bool member(const Presentation& X, const Element& x, const UpSet& U);
bool member(const Presentation& X, const Element& x, const DownSet& D);
/// Whether the ideal is included in one of the ideals of D (D's ideals are
/// down primes, so this is inclusion in the union).
bool ideal_within(const Presentation& X, const Ideal& I, const DownSet& D);

/// Keeps the minimal generators; among equivalent generators the least in
/// the term order survives. Output is sorted.
UpSet canonize(const Presentation& X, UpSet U);
DownSet canonize(const Presentation& X, DownSet D);

bool subset(const Presentation& X, const UpSet& U, const UpSet& V);
bool subset(const Presentation& X, const DownSet& D, const DownSet& E);

UpSet unite(const Presentation& X, const UpSet& U, const UpSet& V);
DownSet unite(const Presentation& X, const DownSet& D, const DownSet& E);

UpSet intersect(const Presentation& X, const UpSet& U, const UpSet& V);
DownSet intersect(const Presentation& X, const DownSet& D, const DownSet& E);

DownSet complement(const Presentation& X, const UpSet& U);
UpSet complement(const Presentation& X, const DownSet& D);

bool equivalent(const Presentation& X, const UpSet& U, const UpSet& V);
bool equivalent(const Presentation& X, const DownSet& D, const DownSet& E);

// ---- ClosedSet front end ---------------------------------------------------

bool member(const Presentation& X, const Element& x, const ClosedSet& S);
bool subset(const Presentation& X, const ClosedSet& S, const ClosedSet& T);
ClosedSet canonize(const Presentation& X, const ClosedSet& S);
ClosedSet unite(const Presentation& X, const ClosedSet& S, const ClosedSet& T);
ClosedSet intersect(const Presentation& X, const ClosedSet& S,
                    const ClosedSet& T);
ClosedSet complement(const Presentation& X, const ClosedSet& S);
bool equivalent(const Presentation& X, const ClosedSet& S, const ClosedSet& T);

/// The empty set / whole space with the given polarity, canonized.
ClosedSet empty_set(Polarity p);
ClosedSet full_set(const Presentation& X, Polarity p);

// ---- Short presentations ---------------------------------------------------

ShortPresentation shorten(const Presentation& X);

/// Upper bound on the additions to U in one complement-of-downset loop, and
/// on the enumeration levels scanned for a single witness.
inline constexpr std::size_t kComplementLoopCap = 100000;
inline constexpr std::size_t kWitnessLevelCap = 4096;

/// Rebuilds OD, CI, IF and XF from a short presentation, the missing
/// complements coming from a Valk-Jantzen style saturation loop.
/// Throws ConstructionError when the enumerator is missing.
PresentationPtr derive_full_presentation(ShortPresentation shortp);

/// Complement of an arbitrary downward-closed set, computed only from the
/// short-presentation procedures. Exposed for testing.
UpSet complement_by_saturation(const ShortPresentation& shortp,
                               const DownSet& D);

}  // namespace wqo
