#include "wqo/sequences.hpp"

#include <map>

#include "wqo/transformers.hpp"

namespace wqo {

namespace {

using Atoms = std::vector<Term>;

bool is_star(const Term& A) { return A.is(Kind::Star); }

DownSet star_body(const Term& A) {
  return DownSet{std::vector<Term>(A.kids().begin(), A.kids().end())};
}

Atoms atoms_of(const Term& P) {
  if (!P.is(Kind::Product))
    throw KindError("expected a product of atoms: " + debug_string(P));
  return Atoms(P.kids().begin(), P.kids().end());
}

std::vector<Term> letters(const Term& w) {
  if (!w.is(Kind::Seq)) throw KindError("expected a sequence: " + debug_string(w));
  return std::vector<Term>(w.kids().begin(), w.kids().end());
}

Term product_of(Atoms atoms) { return Term::product(std::move(atoms)); }

Term star_of(const Presentation& X, DownSet D) {
  return Term::star(canonize(X, std::move(D)).ideals);
}

Order embeds_order(const Presentation& X) {
  return [&X](const Term& u, const Term& v) { return seq_embeds(X, u, v); };
}

Order subset_order(const Presentation& X) {
  return [&X](const Term& P, const Term& Q) {
    return seq_ideal_subset(X, P, Q);
  };
}

DownSet canon_products(const Presentation& X, std::vector<Term> products) {
  for (auto& P : products) P = seq_reduce(X, P);
  return canonical_down(std::move(products), subset_order(X));
}

UpSet canon_words(const Presentation& X, std::vector<Term> words) {
  return canonical_up(std::move(words), embeds_order(X));
}

// Every product of `prefixes` (as atom lists) followed by every product in
// `tails`.
std::vector<Term> concat_all(const std::vector<Atoms>& prefixes,
                             const std::vector<Term>& tails) {
  std::vector<Term> out;
  for (const auto& pre : prefixes)
    for (const auto& tail : tails) {
      Atoms atoms = pre;
      atoms.insert(atoms.end(), tail.kids().begin(), tail.kids().end());
      out.push_back(product_of(std::move(atoms)));
    }
  return out;
}

// (K + epsilon) for a DownSet K, as alternative atom prefixes.
std::vector<Atoms> plus_epsilon(const DownSet& K) {
  if (K.empty()) return {Atoms{}};
  std::vector<Atoms> out;
  for (const auto& I : K.ideals) out.push_back({Term::one(I)});
  return out;
}

std::vector<Term> join(std::vector<Term> a, const std::vector<Term>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Term word(std::vector<Term> xs) { return Term::seq(std::move(xs)); }

Term cat(const std::vector<Term>& a, std::size_t a_from, std::size_t a_to,
         const std::vector<Term>& mid, const std::vector<Term>& b,
         std::size_t b_from) {
  std::vector<Term> xs(a.begin() + a_from, a.begin() + a_to);
  xs.insert(xs.end(), mid.begin(), mid.end());
  xs.insert(xs.end(), b.begin() + b_from, b.end());
  return word(std::move(xs));
}

}  // namespace

bool seq_embeds(const Presentation& X, const Element& u, const Element& v) {
  auto us = letters(u);
  auto vs = letters(v);
  std::size_t j = 0;
  for (const auto& x : us) {
    while (j < vs.size() && !X.od(x, vs[j])) ++j;
    if (j == vs.size()) return false;
    ++j;
  }
  return true;
}

bool atom_subset(const Presentation& X, const Term& A, const Term& B) {
  if (!is_star(A) && !is_star(B)) return X.id(A.kid(0), B.kid(0));
  if (!is_star(A)) return ideal_within(X, A.kid(0), star_body(B));
  if (is_star(B)) return subset(X, star_body(A), star_body(B));
  return A.arity() == 0;
}

bool seq_ideal_subset(const Presentation& X, const Ideal& P, const Ideal& Q) {
  auto ps = atoms_of(P);
  auto qs = atoms_of(Q);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ps.size()) {
    if (j == qs.size()) {
      // The rest must be included in {epsilon}.
      for (; i < ps.size(); ++i)
        if (!is_star(ps[i]) || ps[i].arity() != 0) return false;
      return true;
    }
    const Term& A = ps[i];
    const Term& B = qs[j];
    if (!atom_subset(X, A, B)) {
      ++j;
    } else if (!is_star(A) && !is_star(B)) {
      ++i;
      ++j;
    } else {
      ++i;
    }
  }
  return true;
}

Ideal seq_reduce(const Presentation& X, const Ideal& P) {
  Atoms atoms;
  for (const auto& A : atoms_of(P)) {
    if (is_star(A)) {
      auto body = canonize(X, star_body(A));
      if (!body.empty()) atoms.push_back(Term::star(body.ideals));
    } else if (A.is(Kind::One) && A.arity() == 1) {
      atoms.push_back(A);
    } else {
      throw KindError("not an atom: " + debug_string(A));
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < atoms.size() && !changed; ++i) {
      bool redundant =
          (i + 1 < atoms.size() && is_star(atoms[i + 1]) &&
           atom_subset(X, atoms[i], atoms[i + 1])) ||
          (i > 0 && is_star(atoms[i - 1]) &&
           atom_subset(X, atoms[i], atoms[i - 1]));
      if (redundant) {
        atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  return product_of(std::move(atoms));
}

DownSet seq_complement_filter(const Presentation& X, const Element& w) {
  auto xs = letters(w);
  std::vector<Atoms> x_or_eps = plus_epsilon(canonize(X, X.xi));
  // Built from the last letter backwards: rest = complement of the suffix.
  DownSet rest;
  for (std::size_t k = xs.size(); k-- > 0;) {
    Term head = star_of(X, X.cf(xs[k]));
    if (k + 1 == xs.size()) {
      rest = canon_products(X, {product_of({head})});
      continue;
    }
    std::vector<Atoms> prefixes;
    for (const auto& mid : x_or_eps) {
      Atoms pre{head};
      pre.insert(pre.end(), mid.begin(), mid.end());
      prefixes.push_back(std::move(pre));
    }
    rest = canon_products(X, concat_all(prefixes, rest.ideals));
  }
  return rest;
}

DownSet seq_intersect_ideals(const Presentation& X, const Ideal& P,
                             const Ideal& Q) {
  const Atoms ps = atoms_of(P);
  const Atoms qs = atoms_of(Q);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> memo;
  const Term epsilon = product_of({});
  std::function<const std::vector<Term>&(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t j) -> const std::vector<Term>& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Term> out;
    if (i == ps.size() || j == qs.size()) {
      out = {epsilon};
    } else {
      const Term& A = ps[i];
      const Term& B = qs[j];
      if (is_star(A) && is_star(B)) {
        Term both = star_of(X, intersect(X, star_body(A), star_body(B)));
        out = concat_all({Atoms{both}}, join(go(i, j + 1), go(i + 1, j)));
      } else if (!is_star(A) && !is_star(B)) {
        out = join(go(i, j + 1), go(i + 1, j));
        out = join(out, concat_all(plus_epsilon(X.ii(A.kid(0), B.kid(0))),
                                   go(i + 1, j + 1)));
      } else if (is_star(A)) {
        auto meet = intersect(X, star_body(A), DownSet{{B.kid(0)}});
        out = join(go(i + 1, j), concat_all(plus_epsilon(meet), go(i, j + 1)));
      } else {
        auto meet = intersect(X, star_body(B), DownSet{{A.kid(0)}});
        out = join(go(i, j + 1), concat_all(plus_epsilon(meet), go(i + 1, j)));
      }
      out = canon_products(X, std::move(out)).ideals;
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return canon_products(X, go(0, 0));
}

UpSet seq_intersect_filters(const Presentation& X, const Element& u,
                            const Element& v) {
  const auto us = letters(u);
  const auto vs = letters(v);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> memo;
  std::function<const std::vector<Term>&(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t j) -> const std::vector<Term>& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Term> out;
    if (i == us.size()) {
      out = {cat(vs, j, vs.size(), {}, {}, 0)};
    } else if (j == vs.size()) {
      out = {cat(us, i, us.size(), {}, {}, 0)};
    } else {
      auto prepend = [](const Term& x, const std::vector<Term>& ws) {
        std::vector<Term> r;
        for (const auto& w : ws) {
          std::vector<Term> xs{x};
          xs.insert(xs.end(), w.kids().begin(), w.kids().end());
          r.push_back(word(std::move(xs)));
        }
        return r;
      };
      out = prepend(us[i], go(i + 1, j));
      out = join(out, prepend(vs[j], go(i, j + 1)));
      for (const auto& z : X.if_(us[i], vs[j]).generators)
        out = join(out, prepend(z, go(i + 1, j + 1)));
      out = canon_words(X, std::move(out)).generators;
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return canon_words(X, go(0, 0));
}

UpSet seq_odot(const Presentation& X, const Element& u, const Element& v) {
  auto vs = letters(u);  // v a
  auto ws = letters(v);  // b w
  if (vs.empty() || ws.empty()) return UpSet{{word({})}};
  std::vector<Term> out;
  out.push_back(cat(vs, 0, vs.size(), {}, ws, 0));
  for (const auto& z : X.if_(vs.back(), ws.front()).generators)
    out.push_back(cat(vs, 0, vs.size() - 1, {z}, ws, 1));
  return canon_words(X, std::move(out));
}

UpSet seq_odot(const Presentation& X, const UpSet& F, const UpSet& G) {
  std::vector<Term> out;
  for (const auto& u : F.generators)
    for (const auto& v : G.generators) {
      auto part = seq_odot(X, u, v);
      out.insert(out.end(), part.generators.begin(), part.generators.end());
    }
  return canon_words(X, std::move(out));
}

namespace {

UpSet complement_atom(const Presentation& X, const Term& A) {
  std::vector<Term> out;
  if (is_star(A)) {
    for (const auto& a : complement(X, star_body(A)).generators)
      out.push_back(word({a}));
  } else {
    auto bottoms = canonize(X, X.xf).generators;
    for (const auto& a : bottoms)
      for (const auto& b : bottoms) out.push_back(word({a, b}));
    for (const auto& b : X.ci(A.kid(0)).generators) out.push_back(word({b}));
  }
  return canon_words(X, std::move(out));
}

}  // namespace

UpSet seq_complement_ideal(const Presentation& X, const Ideal& P) {
  auto atoms = atoms_of(P);
  if (atoms.empty()) {
    std::vector<Term> out;
    for (const auto& a : canonize(X, X.xf).generators) out.push_back(word({a}));
    return canon_words(X, std::move(out));
  }
  UpSet acc = complement_atom(X, atoms.front());
  for (std::size_t k = 1; k < atoms.size() && !acc.empty(); ++k)
    acc = seq_odot(X, acc, complement_atom(X, atoms[k]));
  return acc;
}

namespace {

LevelEnumerator word_levels(PresentationPtr X) {
  if (!X->enumerate_level) return nullptr;
  return [X](std::size_t level) {
    // words[s] = words of rank s; a letter of rank r adds r + 1.
    std::vector<std::vector<Term>> words(level + 1);
    words[0] = {word({})};
    std::vector<std::vector<Term>> base(level);
    for (std::size_t r = 0; r < level; ++r) base[r] = X->enumerate_level(r);
    for (std::size_t s = 1; s <= level; ++s)
      for (std::size_t r = 0; r + 1 <= s; ++r)
        for (const auto& x : base[r])
          for (const auto& rest : words[s - 1 - r]) {
            std::vector<Term> xs{x};
            xs.insert(xs.end(), rest.kids().begin(), rest.kids().end());
            words[s].push_back(word(std::move(xs)));
          }
    return words[level];
  };
}

bool accepts(const std::function<bool(const Term&)>& check, const Term& t) {
  return !check || check(t);
}

}  // namespace

PresentationPtr higman(PresentationPtr X) {
  auto p = std::make_shared<Presentation>();
  p->name = "star";
  auto elem = X->is_element;
  auto ideal = X->is_ideal;
  p->is_element = [elem](const Term& t) {
    if (!t.is(Kind::Seq)) return false;
    for (const auto& x : t.kids())
      if (!accepts(elem, x)) return false;
    return true;
  };
  p->is_ideal = [ideal](const Term& t) {
    if (!t.is(Kind::Product)) return false;
    for (const auto& A : t.kids()) {
      if (A.is(Kind::One)) {
        if (A.arity() != 1 || !accepts(ideal, A.kid(0))) return false;
      } else if (A.is(Kind::Star)) {
        for (const auto& I : A.kids())
          if (!accepts(ideal, I)) return false;
      } else {
        return false;
      }
    }
    return true;
  };
  p->od = [X](const Element& u, const Element& v) {
    return seq_embeds(*X, u, v);
  };
  p->id = [X](const Ideal& P, const Ideal& Q) {
    return seq_ideal_subset(*X, P, Q);
  };
  p->pi = [X](const Element& w) {
    Atoms atoms;
    for (const auto& x : letters(w)) atoms.push_back(Term::one(X->pi(x)));
    return product_of(std::move(atoms));
  };
  p->cf = [X](const Element& w) { return seq_complement_filter(*X, w); };
  p->if_ = [X](const Element& u, const Element& v) {
    return seq_intersect_filters(*X, u, v);
  };
  p->ci = [X](const Ideal& P) { return seq_complement_ideal(*X, P); };
  p->ii = [X](const Ideal& P, const Ideal& Q) {
    return seq_intersect_ideals(*X, P, Q);
  };
  p->xi = DownSet{{seq_reduce(*X, product_of({star_of(*X, X->xi)}))}};
  p->xf = UpSet{{word({})}};
  p->enumerate_level = word_levels(X);
  return p;
}

// ---- Stuttering ------------------------------------------------------------

namespace {

UpSet stutter_closure(const Presentation& X, const Element& u) {
  auto xs = letters(u);
  if (xs.empty()) return UpSet{{u}};
  const std::size_t n = xs.size();
  std::vector<Term> out;
  // Bit k of `cuts` set: a piece ends after letter k.
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<std::vector<Term>> choices;
    UpSet piece{{xs[0]}};
    for (std::size_t k = 1; k <= n; ++k) {
      bool ends = k == n || ((cuts >> (k - 1)) & 1);
      if (ends) {
        choices.push_back(piece.generators);
        if (k < n) piece = UpSet{{xs[k]}};
      } else {
        piece = intersect(X, piece, UpSet{{xs[k]}});
      }
    }
    std::vector<std::vector<Term>> partial = {{}};
    for (const auto& ch : choices) {
      std::vector<std::vector<Term>> next;
      for (const auto& pre : partial)
        for (const auto& y : ch) {
          auto w = pre;
          w.push_back(y);
          next.push_back(std::move(w));
        }
      partial = std::move(next);
    }
    for (auto& w : partial) out.push_back(word(std::move(w)));
  }
  return canon_words(X, std::move(out));
}

}  // namespace

PresentationPtr stuttering(PresentationPtr X) {
  ClosureFns fns;
  fns.ci = [X](const Ideal& P) {
    Atoms atoms;
    for (const auto& A : atoms_of(P))
      atoms.push_back(is_star(A) ? A : Term::star({A.kid(0)}));
    return DownSet{{seq_reduce(*X, product_of(std::move(atoms)))}};
  };
  fns.cf = [X](const Element& u) { return stutter_closure(*X, u); };
  return extend(higman(X), fns, "stutter");
}

// ---- Conjugacy -------------------------------------------------------------

std::vector<Element> rotations(const Element& w) {
  auto xs = letters(w);
  if (xs.empty()) return {w};
  std::vector<Element> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Term> r(xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end());
    r.insert(r.end(), xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(word(std::move(r)));
  }
  return sorted_unique(std::move(out));
}

DownSet conjugacy_closure(const Presentation& X, const Ideal& P) {
  auto atoms = atoms_of(P);
  if (atoms.empty()) return DownSet{{P}};
  std::vector<Term> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Atoms r(atoms.begin() + static_cast<std::ptrdiff_t>(i), atoms.end());
    r.insert(r.end(), atoms.begin(),
             atoms.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_star(atoms[i])) r.push_back(atoms[i]);
    out.push_back(product_of(std::move(r)));
  }
  return canon_products(X, std::move(out));
}

PresentationPtr conjugacy(PresentationPtr X) {
  ClosureFns fns;
  fns.ci = [X](const Ideal& P) { return conjugacy_closure(*X, P); };
  fns.cf = [X](const Element& w) { return canon_words(*X, rotations(w)); };
  return quotient(higman(X), fns, "conj");
}

}  // namespace wqo
