#include "wqo/base.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace wqo {

// ---- Finite quasi-orders ---------------------------------------------------

namespace {

struct FiniteTable {
  std::vector<std::string> symbols;  // sorted
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<bool>> leq;

  std::size_t at(const Term& t) const {
    if (!t.is(Kind::Sym)) throw KindError("expected a symbol");
    auto it = index.find(t.sym());
    if (it == index.end()) throw KindError("unknown symbol " + t.sym());
    return it->second;
  }
  // Least symbol equivalent to symbols[i]; symbols are sorted so the first
  // hit is the least one.
  Term rep(std::size_t i) const {
    for (std::size_t j = 0; j < symbols.size(); ++j)
      if (leq[i][j] && leq[j][i]) return Term::sym(symbols[j]);
    return Term::sym(symbols[i]);
  }
};

}  // namespace

PresentationPtr finite_qo(const FiniteQoSpec& spec) {
  auto table = std::make_shared<FiniteTable>();
  table->symbols = spec.symbols;
  std::sort(table->symbols.begin(), table->symbols.end());
  if (std::adjacent_find(table->symbols.begin(), table->symbols.end()) !=
      table->symbols.end())
    throw ConstructionError("duplicate symbol in finite quasi-order");
  const std::size_t n = table->symbols.size();
  for (std::size_t i = 0; i < n; ++i) table->index[table->symbols[i]] = i;
  table->leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) table->leq[i][i] = true;
  for (const auto& [a, b] : spec.pairs) {
    auto ia = table->index.find(a);
    auto ib = table->index.find(b);
    if (ia == table->index.end() || ib == table->index.end())
      throw ConstructionError("order pair mentions an undeclared symbol: " +
                              a + " <= " + b);
    table->leq[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (table->leq[i][k] && table->leq[k][j]) table->leq[i][j] = true;

  auto p = std::make_shared<Presentation>();
  p->name = "finite";
  std::shared_ptr<const FiniteTable> t = table;
  auto known = [t](const Term& x) {
    return x.is(Kind::Sym) && t->index.count(x.sym()) > 0;
  };
  p->is_element = known;
  p->is_ideal = known;
  p->od = [t](const Element& x, const Element& y) {
    return t->leq[t->at(x)][t->at(y)];
  };
  p->id = p->od;
  p->pi = [t](const Element& x) { return t->rep(t->at(x)); };

  auto below_all = [t](const std::vector<std::size_t>& tops) {
    std::vector<Term> out;
    for (std::size_t z = 0; z < t->symbols.size(); ++z)
      if (std::all_of(tops.begin(), tops.end(),
                      [&](std::size_t i) { return t->leq[z][i]; }))
        out.push_back(t->rep(z));
    return out;
  };
  auto above_all = [t](const std::vector<std::size_t>& bottoms) {
    std::vector<Term> out;
    for (std::size_t z = 0; z < t->symbols.size(); ++z)
      if (std::all_of(bottoms.begin(), bottoms.end(),
                      [&](std::size_t i) { return t->leq[i][z]; }))
        out.push_back(t->rep(z));
    return out;
  };
  // Maximal / minimal among the given terms, by the table.
  auto maxima = [t](std::vector<Term> xs) {
    std::vector<Term> out;
    xs = sorted_unique(std::move(xs));
    for (const auto& x : xs) {
      bool dominated = std::any_of(xs.begin(), xs.end(), [&](const Term& y) {
        return t->leq[t->at(x)][t->at(y)] && !t->leq[t->at(y)][t->at(x)];
      });
      if (!dominated) out.push_back(x);
    }
    return out;
  };
  auto minima = [t](std::vector<Term> xs) {
    std::vector<Term> out;
    xs = sorted_unique(std::move(xs));
    for (const auto& x : xs) {
      bool dominated = std::any_of(xs.begin(), xs.end(), [&](const Term& y) {
        return t->leq[t->at(y)][t->at(x)] && !t->leq[t->at(x)][t->at(y)];
      });
      if (!dominated) out.push_back(x);
    }
    return out;
  };

  p->cf = [t, maxima](const Element& x) {
    std::size_t i = t->at(x);
    std::vector<Term> rest;
    for (std::size_t z = 0; z < t->symbols.size(); ++z)
      if (!t->leq[i][z]) rest.push_back(t->rep(z));
    return DownSet{maxima(std::move(rest))};
  };
  p->ci = [t, minima](const Ideal& I) {
    std::size_t i = t->at(I);
    std::vector<Term> rest;
    for (std::size_t z = 0; z < t->symbols.size(); ++z)
      if (!t->leq[z][i]) rest.push_back(t->rep(z));
    return UpSet{minima(std::move(rest))};
  };
  p->ii = [t, below_all, maxima](const Ideal& I, const Ideal& J) {
    return DownSet{maxima(below_all({t->at(I), t->at(J)}))};
  };
  p->if_ = [t, above_all, minima](const Element& x, const Element& y) {
    return UpSet{minima(above_all({t->at(x), t->at(y)}))};
  };
  p->xi = DownSet{maxima(below_all({}))};
  p->xf = UpSet{minima(above_all({}))};
  p->enumerate_level = [t](std::size_t level) {
    std::vector<Element> out;
    if (level == 0)
      for (const auto& s : t->symbols) out.push_back(Term::sym(s));
    return out;
  };
  return p;
}

PresentationPtr discrete(const std::vector<std::string>& symbols) {
  return finite_qo(FiniteQoSpec{symbols, {}});
}

// ---- Naturals --------------------------------------------------------------

PresentationPtr naturals() {
  auto p = std::make_shared<Presentation>();
  p->name = "nat";
  p->is_element = [](const Term& x) { return x.is(Kind::Nat); };
  p->is_ideal = [](const Term& I) {
    return I.is(Kind::Nat) || I.is(Kind::Omega);
  };
  p->od = [](const Element& x, const Element& y) { return x.num() <= y.num(); };
  // Nat sorts before Omega and Nat terms compare by value, so the term
  // order is exactly ideal inclusion.
  p->id = [](const Ideal& I, const Ideal& J) { return I <= J; };
  p->pi = [](const Element& x) { return x; };
  p->cf = [](const Element& x) {
    if (x.num() == 0) return DownSet{};
    return DownSet{{Term::nat(x.num() - 1)}};
  };
  p->if_ = [](const Element& x, const Element& y) {
    return UpSet{{std::max(x, y)}};
  };
  p->ci = [](const Ideal& I) {
    if (I.is(Kind::Omega)) return UpSet{};
    return UpSet{{Term::nat(I.num() + 1)}};
  };
  p->ii = [](const Ideal& I, const Ideal& J) {
    return DownSet{{std::min(I, J)}};
  };
  p->xi = DownSet{{Term::omega()}};
  p->xf = UpSet{{Term::nat(0)}};
  p->enumerate_level = [](std::size_t level) {
    return std::vector<Element>{Term::nat(level)};
  };
  return p;
}

// ---- Ordinals --------------------------------------------------------------

CnfOrdinal CnfOrdinal::finite(std::uint64_t n) {
  if (n == 0) return {};
  return omega_power(zero(), n);
}

CnfOrdinal CnfOrdinal::omega_power(CnfOrdinal exponent,
                                   std::uint64_t coefficient) {
  CnfOrdinal a;
  a.terms.push_back(CnfTerm{std::move(exponent), coefficient});
  return a;
}

std::strong_ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cnf_compare(a.terms[i].exponent, b.terms[i].exponent); c != 0)
      return c;
    if (auto c = a.terms[i].coefficient <=> b.terms[i].coefficient; c != 0)
      return c;
  }
  return a.terms.size() <=> b.terms.size();
}

bool is_normal(const CnfOrdinal& a) {
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].coefficient == 0 || !is_normal(a.terms[i].exponent))
      return false;
    if (i > 0 && cnf_compare(a.terms[i - 1].exponent, a.terms[i].exponent) <= 0)
      return false;
  }
  return true;
}

bool cnf_leq(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (!is_normal(a) || !is_normal(b))
    throw ValidationError("ordinal not in Cantor normal form");
  return cnf_compare(a, b) <= 0;
}

bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) {
  return cnf_compare(a, b) == 0;
}

CnfOrdinal successor(const CnfOrdinal& a) {
  CnfOrdinal s = a;
  if (!s.terms.empty() && s.terms.back().exponent.is_zero())
    ++s.terms.back().coefficient;
  else
    s.terms.push_back(CnfTerm{CnfOrdinal::zero(), 1});
  return s;
}

std::uint64_t rank(const CnfOrdinal& a) {
  std::uint64_t r = 0;
  for (const auto& t : a.terms) r += t.coefficient * (1 + rank(t.exponent));
  return r;
}

Term to_term(const CnfOrdinal& a) {
  std::vector<Term> kids;
  for (const auto& t : a.terms)
    kids.push_back(
        Term::make(Kind::OrdTerm, t.coefficient, {}, {to_term(t.exponent)}));
  return Term::make(Kind::Ord, 0, {}, std::move(kids));
}

CnfOrdinal ordinal_from_term(const Term& t) {
  if (!t.is(Kind::Ord)) throw KindError("expected an ordinal");
  CnfOrdinal a;
  for (const auto& k : t.kids()) {
    if (!k.is(Kind::OrdTerm) || k.arity() != 1)
      throw KindError("malformed ordinal term");
    a.terms.push_back(CnfTerm{ordinal_from_term(k.kid(0)), k.num()});
  }
  if (!is_normal(a)) throw ValidationError("ordinal not in Cantor normal form");
  return a;
}

namespace {

// Ordinals of rank r whose leading exponent is < bound (when given), built
// term by term.
void ordinals_below(std::uint64_t r, const CnfOrdinal* bound,
                    std::vector<CnfOrdinal>& out) {
  if (r == 0) {
    out.push_back(CnfOrdinal::zero());
    return;
  }
  if (bound && bound->is_zero()) return;
  // Exponents below the bound have a leading exponent at most the bound's.
  std::optional<CnfOrdinal> exponent_bound;
  if (bound) exponent_bound = successor(bound->terms.front().exponent);
  for (std::uint64_t er = 0; er < r; ++er) {
    std::vector<CnfOrdinal> exponents;
    ordinals_below(er, exponent_bound ? &*exponent_bound : nullptr, exponents);
    for (auto& e : exponents) {
      if (bound && cnf_compare(e, *bound) >= 0) continue;
      for (std::uint64_t c = 1; c * (1 + er) <= r; ++c) {
        std::vector<CnfOrdinal> tails;
        ordinals_below(r - c * (1 + er), &e, tails);
        for (auto& tail : tails) {
          CnfOrdinal a = CnfOrdinal::omega_power(e, c);
          a.terms.insert(a.terms.end(), tail.terms.begin(), tail.terms.end());
          out.push_back(std::move(a));
        }
      }
    }
  }
}

}  // namespace

std::vector<CnfOrdinal> ordinals_of_rank(std::uint64_t r,
                                         const CnfOrdinal* max_exponent) {
  std::vector<CnfOrdinal> out;
  if (max_exponent) {
    CnfOrdinal bound = successor(*max_exponent);
    ordinals_below(r, &bound, out);
  } else {
    ordinals_below(r, nullptr, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return cnf_compare(a, b) < 0;
  });
  return out;
}

PresentationPtr ordinal(const CnfOrdinal& alpha) {
  if (!is_normal(alpha)) throw ValidationError("ordinal not in normal form");
  if (alpha.is_zero()) throw ConstructionError("ordinal presentation of 0");
  auto p = std::make_shared<Presentation>();
  p->name = "ord";
  const Term top = Term::cut(to_term(alpha));
  auto value = [](const Term& t) { return ordinal_from_term(t); };
  auto below_alpha = [alpha](const Term& t) {
    if (!t.is(Kind::Ord)) return false;
    try {
      return cnf_compare(ordinal_from_term(t), alpha) < 0;
    } catch (const Error&) {
      return false;
    }
  };
  p->is_element = below_alpha;
  p->is_ideal = [alpha](const Term& t) {
    if (!t.is(Kind::Cut) || t.arity() != 1) return false;
    try {
      auto g = ordinal_from_term(t.kid(0));
      return !g.is_zero() && cnf_compare(g, alpha) <= 0;
    } catch (const Error&) {
      return false;
    }
  };
  p->od = [value](const Element& x, const Element& y) {
    return cnf_compare(value(x), value(y)) <= 0;
  };
  p->id = [value](const Ideal& I, const Ideal& J) {
    return cnf_compare(value(I.kid(0)), value(J.kid(0))) <= 0;
  };
  p->pi = [value](const Element& x) {
    return Term::cut(to_term(successor(value(x))));
  };
  p->cf = [value](const Element& x) {
    if (value(x).is_zero()) return DownSet{};
    return DownSet{{Term::cut(x)}};
  };
  p->ci = [top](const Ideal& I) {
    if (I == top) return UpSet{};
    return UpSet{{I.kid(0)}};
  };
  p->if_ = [value](const Element& x, const Element& y) {
    return UpSet{{cnf_compare(value(x), value(y)) >= 0 ? x : y}};
  };
  p->ii = [value](const Ideal& I, const Ideal& J) {
    return DownSet{
        {cnf_compare(value(I.kid(0)), value(J.kid(0))) <= 0 ? I : J}};
  };
  p->xi = DownSet{{top}};
  p->xf = UpSet{{to_term(CnfOrdinal::zero())}};
  const CnfOrdinal lead = alpha.terms.front().exponent;
  p->enumerate_level = [alpha, lead](std::size_t level) {
    std::vector<Element> out;
    for (const auto& b : ordinals_of_rank(level, &lead))
      if (cnf_compare(b, alpha) < 0) out.push_back(to_term(b));
    return out;
  };
  return p;
}

}  // namespace wqo
