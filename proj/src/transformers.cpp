#include "wqo/transformers.hpp"

#include <algorithm>

namespace wqo {

namespace {

std::shared_ptr<Presentation> extension_skeleton(PresentationPtr X,
                                                 const ClosureFns& fns,
                                                 std::string name) {
  if (!fns.ci || !fns.cf)
    throw ConstructionError("closure functions missing for " + name);
  auto p = std::make_shared<Presentation>();
  p->name = std::move(name);
  p->is_element = X->is_element;
  p->is_ideal = X->is_ideal;
  auto cf = fns.cf;
  auto ci = fns.ci;
  p->od = [X, cf](const Element& x, const Element& y) {
    return member(*X, y, cf(x));
  };
  p->id = [X, ci](const Ideal& I, const Ideal& J) {
    return ideal_within(*X, I, ci(J));
  };
  p->pi = X->pi;
  Order od = p->od;
  Order id = p->id;
  p->cf = [X, cf, id](const Element& x) {
    return canonical_down(complement(*X, cf(x)).ideals, id);
  };
  p->ci = [X, ci, od](const Ideal& I) {
    return canonical_up(complement(*X, ci(I)).generators, od);
  };
  p->xi = canonical_down(X->xi.ideals, id);
  p->xf = canonical_up(X->xf.generators, od);
  p->enumerate_level = X->enumerate_level;
  return p;
}

}  // namespace

PresentationPtr extend(PresentationPtr X, ClosureFns fns, std::string name) {
  auto p = extension_skeleton(X, fns, std::move(name));
  Order od = p->od;
  Order id = p->id;
  auto cf = fns.cf;
  auto ci = fns.ci;
  p->ii = [X, ci, id](const Ideal& I, const Ideal& J) {
    return canonical_down(intersect(*X, ci(I), ci(J)).ideals, id);
  };
  p->if_ = [X, cf, od](const Element& x, const Element& y) {
    return canonical_up(intersect(*X, cf(x), cf(y)).generators, od);
  };
  return p;
}

PresentationPtr quotient(PresentationPtr X, ClosureFns fns, std::string name) {
  auto p = extension_skeleton(X, fns, std::move(name));
  Order od = p->od;
  Order id = p->id;
  auto cf = fns.cf;
  auto ci = fns.ci;
  p->ii = [X, ci, id](const Ideal& I, const Ideal& J) {
    return canonical_down(intersect(*X, DownSet{{I}}, ci(J)).ideals, id);
  };
  p->if_ = [X, cf, od](const Element& x, const Element& y) {
    return canonical_up(intersect(*X, UpSet{{x}}, cf(y)).generators, od);
  };
  return p;
}

// ---- Induced sub-WQOs ------------------------------------------------------

bool adherent(const Presentation& X, const SubspaceFns& fns, const Ideal& I) {
  return canonize(X, fns.s_i(I)) == DownSet{{I}};
}

namespace {

DownSet restrict_down(const Presentation& X, const SubspaceFns& fns,
                      const DownSet& D) {
  DownSet out;
  for (const auto& I : D.ideals) {
    auto part = fns.s_i(I);
    out.ideals.insert(out.ideals.end(), part.ideals.begin(), part.ideals.end());
  }
  return canonize(X, std::move(out));
}

// Replaces each generator outside Y by an equivalent element of Y, found by
// enumeration (one exists when the generators form a canonical basis of an
// up-closure of a subset of Y).
UpSet restrict_up(const Presentation& X, const SubspaceFns& fns,
                  const UpSet& U) {
  UpSet closed;
  for (const auto& g : U.generators) {
    auto part = fns.s_f(g);
    closed.generators.insert(closed.generators.end(), part.generators.begin(),
                             part.generators.end());
  }
  closed = canonize(X, std::move(closed));
  UpSet out;
  for (const auto& g : closed.generators) {
    if (fns.member_y(g)) {
      out.generators.push_back(g);
      continue;
    }
    std::optional<Element> found;
    for (std::size_t level = 0; level < kWitnessLevelCap && !found; ++level)
      for (const auto& y : fns.enum_y(level))
        if (X.od(y, g) && X.od(g, y)) {
          found = y;
          break;
        }
    if (!found)
      throw Error("no element of the subspace equivalent to " +
                  debug_string(g));
    out.generators.push_back(*found);
  }
  return canonize(X, std::move(out));
}

}  // namespace

PresentationPtr induce(PresentationPtr X, SubspaceFns fns, std::string name) {
  if (!fns.member_y || !fns.s_i || !fns.s_f || !fns.enum_y)
    throw ConstructionError("incomplete subspace functions for " + name);
  auto p = std::make_shared<Presentation>();
  p->name = std::move(name);
  auto base_element = X->is_element;
  p->is_element = [base_element, fns](const Term& t) {
    return (!base_element || base_element(t)) && fns.member_y(t);
  };
  auto base_ideal = X->is_ideal;
  p->is_ideal = [X, base_ideal, fns](const Term& t) {
    return (!base_ideal || base_ideal(t)) && adherent(*X, fns, t);
  };
  auto in_y = [fns](const Element& x) {
    if (!fns.member_y(x))
      throw KindError("element outside the subspace: " + debug_string(x));
  };
  p->od = [X, in_y](const Element& x, const Element& y) {
    in_y(x);
    in_y(y);
    return X->od(x, y);
  };
  p->id = X->id;
  p->pi = [X, fns, in_y](const Element& y) {
    in_y(y);
    auto D = restrict_down(*X, fns, DownSet{{X->pi(y)}});
    if (D.size() != 1)
      throw Error("principal ideal restricts to " + std::to_string(D.size()) +
                  " ideals; subspace functions are inconsistent");
    return D.ideals.front();
  };
  p->cf = [X, fns, in_y](const Element& y) {
    in_y(y);
    return restrict_down(*X, fns, X->cf(y));
  };
  p->ci = [X, fns](const Ideal& I) {
    return restrict_up(*X, fns, X->ci(I));
  };
  p->ii = [X, fns](const Ideal& I, const Ideal& J) {
    return restrict_down(*X, fns, X->ii(I, J));
  };
  p->if_ = [X, fns, in_y](const Element& x, const Element& y) {
    in_y(x);
    in_y(y);
    return restrict_up(*X, fns, X->if_(x, y));
  };
  p->xi = restrict_down(*X, fns, X->xi);
  p->xf = restrict_up(*X, fns, X->xf);
  p->enumerate_level = fns.enum_y;
  return p;
}

SubspaceFns finite_subspace(PresentationPtr X, std::vector<Element> ys) {
  auto members = std::make_shared<const std::vector<Element>>(
      sorted_unique(std::move(ys)));
  SubspaceFns f;
  f.member_y = [members](const Element& x) {
    return std::binary_search(members->begin(), members->end(), x);
  };
  f.s_i = [X, members](const Ideal& I) {
    DownSet out;
    for (const auto& y : *members) {
      auto py = X->pi(y);
      if (X->id(py, I)) out.ideals.push_back(py);
    }
    return canonize(*X, std::move(out));
  };
  f.s_f = [X, members](const Element& x) {
    UpSet out;
    for (const auto& y : *members)
      if (X->od(x, y)) out.generators.push_back(y);
    return canonize(*X, std::move(out));
  };
  f.enum_y = [members](std::size_t level) {
    return level == 0 ? *members : std::vector<Element>{};
  };
  return f;
}

SubspaceFns downward_subspace(PresentationPtr X, DownSet Y) {
  auto y = std::make_shared<const DownSet>(canonize(*X, std::move(Y)));
  SubspaceFns f;
  f.member_y = [X, y](const Element& x) { return member(*X, x, *y); };
  f.s_i = [X, y](const Ideal& I) { return intersect(*X, DownSet{{I}}, *y); };
  // For downward-closed Y, up(x) n Y is empty exactly when x is outside Y.
  f.s_f = [X, y](const Element& x) {
    return member(*X, x, *y) ? UpSet{{x}} : UpSet{};
  };
  auto base = X->enumerate_level;
  if (base) {
    f.enum_y = [X, y, base](std::size_t level) {
      std::vector<Element> out;
      for (const auto& x : base(level))
        if (member(*X, x, *y)) out.push_back(x);
      return out;
    };
  }
  return f;
}

}  // namespace wqo
