#pragma once

#include "wqo/kernel.hpp"

namespace wqo {

// Elements of X* are Seq terms. Ideals are Product terms whose atoms are
// Star(D) (D* for a canonical DownSet D of X, with Star() = {epsilon}) or
// One(I) (I + epsilon). The empty product is {epsilon}.

/// Higman's subword order over X.
PresentationPtr higman(PresentationPtr X);

/// Subword embedding, by leftmost embedding search.
bool seq_embeds(const Presentation& X, const Element& u, const Element& v);

/// Inclusion between atoms of X*.
bool atom_subset(const Presentation& X, const Term& A, const Term& B);

/// Inclusion between products of atoms; linear number of atom tests.
bool seq_ideal_subset(const Presentation& X, const Ideal& P, const Ideal& Q);

/// Reduced form: drops Star() and every atom contained in an adjacent Star
/// atom, until nothing changes. Star contents are canonized.
Ideal seq_reduce(const Presentation& X, const Ideal& P);

/// Complement of the filter of w, as a canonical DownSet of X*.
DownSet seq_complement_filter(const Presentation& X, const Element& w);

DownSet seq_intersect_ideals(const Presentation& X, const Ideal& P,
                             const Ideal& Q);

UpSet seq_intersect_filters(const Presentation& X, const Element& u,
                            const Element& v);

/// F (.) G = complement of (complement F . complement G), on principal
/// filters and, distributing, on UpSets.
UpSet seq_odot(const Presentation& X, const Element& u, const Element& v);
UpSet seq_odot(const Presentation& X, const UpSet& F, const UpSet& G);

UpSet seq_complement_ideal(const Presentation& X, const Ideal& P);

/// Sequences under the stuttering order: positions of the embedding may
/// repeat. Ideals are Higman ideals standing for their stuttering closure.
PresentationPtr stuttering(PresentationPtr X);

/// Sequences under subwords up to rotation.
PresentationPtr conjugacy(PresentationPtr X);

/// All rotations of w, and the closure of an ideal under rotation.
std::vector<Element> rotations(const Element& w);
DownSet conjugacy_closure(const Presentation& X, const Ideal& P);

}  // namespace wqo
