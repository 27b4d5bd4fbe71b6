#include "wqo/sets_multisets.hpp"

#include <algorithm>

#include "wqo/sequences.hpp"
#include "wqo/transformers.hpp"

namespace wqo {

namespace {

std::vector<Term> members(const Term& t, Kind k) {
  if (!t.is(k))
    throw KindError(std::string("expected a ") + kind_name(k) + ": " +
                    debug_string(t));
  return std::vector<Term>(t.kids().begin(), t.kids().end());
}

bool accepts(const std::function<bool(const Term&)>& check, const Term& t) {
  return !check || check(t);
}

DownSet pf_body(const Term& I) { return DownSet{members(I, Kind::Pf)}; }

// Subsets of `items` (with weights) of total weight exactly `target`, each
// listed in increasing item order.
void weighted_subsets(const std::vector<std::pair<Term, std::size_t>>& items,
                      std::size_t from, std::size_t target,
                      std::vector<Term>& chosen, std::vector<Term>& out) {
  if (target == 0) {
    out.push_back(Term::set(chosen));
    return;
  }
  for (std::size_t k = from; k < items.size(); ++k) {
    if (items[k].second > target) continue;
    chosen.push_back(items[k].first);
    weighted_subsets(items, k + 1, target - items[k].second, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

bool hoare_leq(const Presentation& X, const Element& S, const Element& T) {
  auto ts = members(T, Kind::Set);
  for (const auto& x : members(S, Kind::Set))
    if (std::none_of(ts.begin(), ts.end(),
                     [&](const Term& y) { return X.od(x, y); }))
      return false;
  return true;
}

PresentationPtr powerset_fin(PresentationPtr X) {
  auto p = std::make_shared<Presentation>();
  p->name = "pset";
  auto elem = X->is_element;
  auto ideal = X->is_ideal;
  p->is_element = [elem](const Term& t) {
    if (!t.is(Kind::Set)) return false;
    for (const auto& x : t.kids())
      if (!accepts(elem, x)) return false;
    return true;
  };
  p->is_ideal = [ideal](const Term& t) {
    if (!t.is(Kind::Pf)) return false;
    for (const auto& I : t.kids())
      if (!accepts(ideal, I)) return false;
    return true;
  };
  p->od = [X](const Element& S, const Element& T) {
    return hoare_leq(*X, S, T);
  };
  p->id = [X](const Ideal& I, const Ideal& J) {
    return subset(*X, pf_body(I), pf_body(J));
  };
  auto pf = [X](DownSet D) { return Term::pf(canonize(*X, std::move(D)).ideals); };
  p->pi = [X, pf](const Element& S) {
    DownSet D;
    for (const auto& x : members(S, Kind::Set)) D.ideals.push_back(X->pi(x));
    return pf(std::move(D));
  };
  Order id = p->id;
  Order od = p->od;
  p->cf = [X, pf, id](const Element& S) {
    std::vector<Term> out;
    for (const auto& x : members(S, Kind::Set)) out.push_back(pf(X->cf(x)));
    return canonical_down(std::move(out), id);
  };
  p->ii = [X, pf](const Ideal& I, const Ideal& J) {
    return DownSet{{pf(intersect(*X, pf_body(I), pf_body(J)))}};
  };
  p->if_ = [X](const Element& S, const Element& T) {
    auto both = members(S, Kind::Set);
    auto ts = members(T, Kind::Set);
    both.insert(both.end(), ts.begin(), ts.end());
    // Hoare-equivalent to its maximal members.
    auto top = canonical_up(std::move(both), [X](const Term& a, const Term& b) {
      return X->od(b, a);
    });
    return UpSet{{Term::set(top.generators)}};
  };
  p->ci = [X, od](const Ideal& I) {
    std::vector<Term> out;
    for (const auto& x : complement(*X, pf_body(I)).generators)
      out.push_back(Term::set({x}));
    return canonical_up(std::move(out), od);
  };
  p->xi = DownSet{{pf(X->xi)}};
  p->xf = UpSet{{Term::set({})}};
  if (X->enumerate_level) {
    p->enumerate_level = [X](std::size_t level) {
      std::vector<std::pair<Term, std::size_t>> items;
      for (std::size_t r = 0; r < level; ++r)
        for (const auto& x : X->enumerate_level(r)) items.emplace_back(x, r + 1);
      std::sort(items.begin(), items.end());
      std::vector<Term> chosen;
      std::vector<Term> out;
      weighted_subsets(items, 0, level, chosen, out);
      return sorted_unique(std::move(out));
    };
  }
  return p;
}

// ---- Multisets -------------------------------------------------------------

bool bag_embeds(const Presentation& X, const Element& a, const Element& b) {
  auto as = members(a, Kind::Bag);
  auto bs = members(b, Kind::Bag);
  if (as.size() > bs.size()) return false;
  // Bipartite matching of as into bs along X's order.
  std::vector<int> owner(bs.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> grow =
      [&](std::size_t i, std::vector<bool>& seen) {
        for (std::size_t j = 0; j < bs.size(); ++j) {
          if (seen[j] || !X.od(as[i], bs[j])) continue;
          seen[j] = true;
          if (owner[j] < 0 || grow(static_cast<std::size_t>(owner[j]), seen)) {
            owner[j] = static_cast<int>(i);
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::vector<bool> seen(bs.size(), false);
    if (!grow(i, seen)) return false;
  }
  return true;
}

std::vector<Element> permutations(const Element& w) {
  auto xs = members(w, Kind::Seq);
  std::sort(xs.begin(), xs.end());
  std::vector<Element> out;
  do {
    out.push_back(Term::seq(xs));
  } while (std::next_permutation(xs.begin(), xs.end()));
  return out;
}

DownSet bag_closure(const Presentation& X, const Ideal& P) {
  if (!P.is(Kind::Product))
    throw KindError("expected a product of atoms: " + debug_string(P));
  DownSet D;
  std::vector<Term> ones;
  for (const auto& A : P.kids()) {
    if (A.is(Kind::Star))
      D.ideals.insert(D.ideals.end(), A.kids().begin(), A.kids().end());
    else
      ones.push_back(A.kid(0));
  }
  Term star = Term::star(canonize(X, std::move(D)).ideals);
  std::sort(ones.begin(), ones.end());
  std::vector<Term> out;
  do {
    std::vector<Term> atoms{star};
    for (const auto& I : ones) {
      atoms.push_back(Term::one(I));
      atoms.push_back(star);
    }
    out.push_back(seq_reduce(X, Term::product(std::move(atoms))));
  } while (std::next_permutation(ones.begin(), ones.end()));
  return canonical_down(std::move(out), [&X](const Term& a, const Term& b) {
    return seq_ideal_subset(X, a, b);
  });
}

namespace {

Term as_word(const Term& bag) { return Term::seq(members(bag, Kind::Bag)); }

void split_atoms(const Term& P, std::vector<Term>& stars, std::vector<Term>& ones) {
  if (!P.is(Kind::Product))
    throw KindError("expected a product of atoms: " + debug_string(P));
  for (const auto& A : P.kids()) {
    if (A.is(Kind::Star))
      stars.insert(stars.end(), A.kids().begin(), A.kids().end());
    else
      ones.push_back(A.kid(0));
  }
}

// Bag ideals: every star ideal of P fits in a star ideal of Q, and the One
// atoms of P left over match injectively into the One atoms of Q.
bool bag_ideal_subset(const Presentation& X, const Term& P, const Term& Q) {
  std::vector<Term> ps, po, qs, qo;
  split_atoms(P, ps, po);
  split_atoms(Q, qs, qo);
  auto in_star = [&](const Term& I) {
    return std::any_of(qs.begin(), qs.end(),
                       [&](const Term& J) { return X.id(I, J); });
  };
  if (!std::all_of(ps.begin(), ps.end(), in_star)) return false;
  std::vector<Term> rest;
  for (const auto& I : po)
    if (!in_star(I)) rest.push_back(I);
  if (rest.size() > qo.size()) return false;
  std::vector<int> owner(qo.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> grow =
      [&](std::size_t i, std::vector<bool>& seen) {
        for (std::size_t j = 0; j < qo.size(); ++j) {
          if (seen[j] || !X.id(rest[i], qo[j])) continue;
          seen[j] = true;
          if (owner[j] < 0 || grow(static_cast<std::size_t>(owner[j]), seen)) {
            owner[j] = static_cast<int>(i);
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<bool> seen(qo.size(), false);
    if (!grow(i, seen)) return false;
  }
  return true;
}

}  // namespace

PresentationPtr multiset(PresentationPtr X) {
  ClosureFns fns;
  fns.ci = [X](const Ideal& P) { return bag_closure(*X, P); };
  fns.cf = [X](const Element& w) { return UpSet{permutations(w)}; };
  auto Q = quotient(higman(X), fns, "mset");

  auto p = std::make_shared<Presentation>();
  p->name = "mset";
  auto elem = X->is_element;
  p->is_element = [elem](const Term& t) {
    if (!t.is(Kind::Bag)) return false;
    for (const auto& x : t.kids())
      if (!accepts(elem, x)) return false;
    return true;
  };
  p->is_ideal = Q->is_ideal;
  p->od = [X](const Element& a, const Element& b) {
    return bag_embeds(*X, a, b);
  };
  Order od = p->od;
  p->id = [X](const Ideal& P, const Ideal& Q) {
    return bag_ideal_subset(*X, P, Q);
  };
  Order id = p->id;
  p->pi = [Q](const Element& a) { return Q->pi(as_word(a)); };
  // b misses a when some sub-multiset H of a has fewer than |H| members of
  // b above it.
  p->cf = [X, id](const Element& a) {
    auto as = members(a, Kind::Bag);
    std::sort(as.begin(), as.end());
    std::vector<Term> out;
    std::vector<Term> H;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == as.size()) {
        if (H.empty()) return;
        Term star = Term::star(complement(*X, UpSet{H}).ideals);
        std::vector<Term> ones;
        std::function<void(std::size_t)> fill = [&](std::size_t from) {
          if (ones.size() + 1 == H.size()) {
            std::vector<Term> atoms{star};
            atoms.insert(atoms.end(), ones.begin(), ones.end());
            out.push_back(seq_reduce(*X, Term::product(std::move(atoms))));
            return;
          }
          for (std::size_t k = from; k < X->xi.ideals.size(); ++k) {
            ones.push_back(Term::one(X->xi.ideals[k]));
            fill(k);
            ones.pop_back();
          }
        };
        fill(0);
        return;
      }
      H.push_back(as[i]);
      go(i + 1);
      H.pop_back();
      std::size_t j = i;
      while (j < as.size() && as[j] == as[i]) ++j;
      go(j);
    };
    go(0);
    return canonical_down(std::move(out), id);
  };
  p->if_ = [X, od](const Element& a, const Element& b) {
    auto as = members(a, Kind::Bag);
    auto bs = members(b, Kind::Bag);
    // Each member of a either stands alone or shares a slot with an unused
    // member of b, occupied by a generator of their meet.
    std::vector<Term> out;
    std::vector<Term> cur;
    std::vector<bool> used(bs.size(), false);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == as.size()) {
        auto c = cur;
        for (std::size_t j = 0; j < bs.size(); ++j)
          if (!used[j]) c.push_back(bs[j]);
        std::sort(c.begin(), c.end());
        out.push_back(Term::bag(std::move(c)));
        return;
      }
      cur.push_back(as[i]);
      go(i + 1);
      cur.pop_back();
      for (std::size_t j = 0; j < bs.size(); ++j) {
        if (used[j] || (j > 0 && !used[j - 1] && bs[j] == bs[j - 1])) continue;
        used[j] = true;
        for (const auto& z : X->if_(as[i], bs[j]).generators) {
          cur.push_back(z);
          go(i + 1);
          cur.pop_back();
        }
        used[j] = false;
      }
    };
    go(0);
    return canonical_up(std::move(out), od);
  };
  // A bag leaves the ideal when, for some sub-multiset T of the One atoms,
  // |T| + 1 of its members avoid the stars and every One outside T.
  p->ci = [X, od](const Ideal& P) {
    std::vector<Term> ps, po;
    split_atoms(P, ps, po);
    std::sort(po.begin(), po.end());
    std::vector<std::pair<Term, std::size_t>> groups;
    for (const auto& I : po) {
      if (groups.empty() || groups.back().first != I) groups.emplace_back(I, 0);
      ++groups.back().second;
    }
    std::vector<Term> out;
    std::vector<std::size_t> take(groups.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t g) {
      if (g == groups.size()) {
        DownSet D{ps};
        std::size_t t = 0;
        for (std::size_t k = 0; k < groups.size(); ++k) {
          t += take[k];
          if (take[k] < groups[k].second) D.ideals.push_back(groups[k].first);
        }
        auto gens = complement(*X, D).generators;
        std::vector<Term> cur;
        std::function<void(std::size_t)> pick = [&](std::size_t from) {
          if (cur.size() == t + 1) {
            out.push_back(Term::bag(cur));
            return;
          }
          for (std::size_t k = from; k < gens.size(); ++k) {
            cur.push_back(gens[k]);
            pick(k);
            cur.pop_back();
          }
        };
        pick(0);
        return;
      }
      for (take[g] = 0; take[g] <= groups[g].second; ++take[g]) go(g + 1);
    };
    go(0);
    for (auto& b : out) {
      auto xs = members(b, Kind::Bag);
      std::sort(xs.begin(), xs.end());
      b = Term::bag(std::move(xs));
    }
    return canonical_up(std::move(out), od);
  };
  p->ii = [X, id](const Ideal& P, const Ideal& Q) {
    std::vector<Term> ps, po, qs, qo;
    split_atoms(P, ps, po);
    split_atoms(Q, qs, qo);
    DownSet SP = canonize(*X, DownSet{ps});
    DownSet SQ = canonize(*X, DownSet{qs});
    Term star = Term::star(intersect(*X, SP, SQ).ideals);
    // Slots for the One atoms: a matched pair meets, a lone atom meets the
    // other side's star.
    std::vector<Term> out;
    std::vector<Term> cur;
    std::vector<bool> used(qo.size(), false);
    auto place = [&](const DownSet& D, auto&& next) {
      if (D.empty()) return next();
      for (const auto& K : D.ideals) {
        cur.push_back(Term::one(K));
        next();
        cur.pop_back();
      }
    };
    std::function<void(std::size_t)> rest_q = [&](std::size_t j) {
      if (j == qo.size()) {
        std::vector<Term> atoms{star};
        auto ones = cur;
        std::sort(ones.begin(), ones.end());
        atoms.insert(atoms.end(), ones.begin(), ones.end());
        out.push_back(seq_reduce(*X, Term::product(std::move(atoms))));
        return;
      }
      if (used[j]) return rest_q(j + 1);
      place(intersect(*X, SP, DownSet{{qo[j]}}), [&] { rest_q(j + 1); });
    };
    std::sort(po.begin(), po.end());
    std::sort(qo.begin(), qo.end());
    auto absorbed = [&](const Term& I, const DownSet& S) {
      return std::any_of(S.ideals.begin(), S.ideals.end(),
                         [&](const Term& J) { return X->id(I, J); });
    };
    // Equal atoms of P take their partners in increasing order; qo.size()
    // stands for no partner.
    std::vector<std::size_t> choice(po.size(), qo.size());
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == po.size()) return rest_q(0);
      bool same = i > 0 && po[i] == po[i - 1];
      std::size_t from = same ? choice[i - 1] : 0;
      if (!absorbed(po[i], SQ))
        for (std::size_t j = from; j < qo.size(); ++j) {
          if (used[j] || (j > 0 && !used[j - 1] && qo[j] == qo[j - 1]) ||
              absorbed(qo[j], SP))
            continue;
          auto meet = X->ii(po[i], qo[j]);
          if (meet.empty()) continue;
          used[j] = true;
          choice[i] = j;
          place(meet, [&] { go(i + 1); });
          used[j] = false;
        }
      choice[i] = qo.size();
      place(intersect(*X, DownSet{{po[i]}}, SQ), [&] { go(i + 1); });
    };
    go(0);
    return canonical_down(std::move(out), id);
  };
  p->xi = Q->xi;
  p->xf = UpSet{{Term::bag({})}};
  if (Q->enumerate_level) {
    auto words = Q->enumerate_level;
    p->enumerate_level = [words](std::size_t level) {
      std::vector<Term> out;
      for (const auto& w : words(level)) {
        std::vector<Term> xs(w.kids().begin(), w.kids().end());
        if (std::is_sorted(xs.begin(), xs.end()))
          out.push_back(Term::bag(std::move(xs)));
      }
      return out;
    };
  }
  return p;
}

}  // namespace wqo
