#include "wqo/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace wqo {

// ---- Enumeration -----------------------------------------------------------

std::size_t structural_size(const Term& x) {
  switch (x.kind()) {
    case Kind::Nat: return x.num();
    case Kind::Sym: return 0;
    case Kind::Ord: return rank(ordinal_from_term(x));
    case Kind::Pair: return structural_size(x.kid(0)) + structural_size(x.kid(1));
    case Kind::Tagged: return structural_size(x.kid(0));
    case Kind::Seq:
    case Kind::Set:
    case Kind::Bag: {
      std::size_t s = 0;
      for (const auto& y : x.kids()) s += 1 + structural_size(y);
      return s;
    }
    default: throw KindError("not an element: " + debug_string(x));
  }
}

namespace {

class Enumerator {
 public:
  std::vector<Term> of_size(const TypeExpr& t, std::size_t s) {
    auto key = std::make_pair(&t, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto out = compute(t, s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return memo_[key] = out;
  }

 private:
  std::vector<Term> compute(const TypeExpr& t, std::size_t s) {
    std::vector<Term> out;
    switch (t.op) {
      case TypeOp::Nat:
        out.push_back(Term::nat(s));
        break;
      case TypeOp::Ord:
        for (const auto& a : ordinals(s, lead_exponent(t.alpha)))
          if (cnf_compare(a, t.alpha) < 0) out.push_back(to_term(a));
        break;
      case TypeOp::Fin:
        if (s == 0)
          for (const auto& name : t.fin.symbols) out.push_back(Term::sym(name));
        break;
      case TypeOp::Sum:
      case TypeOp::LexSum:
        for (int side = 1; side <= 2; ++side)
          for (const auto& x : of_size(t.args[side - 1], s))
            out.push_back(Term::tagged(side, x));
        break;
      case TypeOp::Prod:
        out = tuples(t, 0, s);
        break;
      case TypeOp::Star:
      case TypeOp::Stutter:
      case TypeOp::Conj:
        for (const auto& w : words(t.args[0], s)) out.push_back(Term::seq(w));
        break;
      case TypeOp::Pset:
        for (const auto& w : words(t.args[0], s))
          if (std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) ==
              w.end())
            out.push_back(Term::set(w));
        break;
      case TypeOp::Mset:
        for (const auto& w : words(t.args[0], s))
          if (std::is_sorted(w.begin(), w.end())) out.push_back(Term::bag(w));
        break;
    }
    return out;
  }

  std::vector<Term> tuples(const TypeExpr& t, std::size_t k, std::size_t s) {
    if (k + 1 == t.args.size()) return of_size(t.args[k], s);
    std::vector<Term> out;
    for (std::size_t i = 0; i <= s; ++i)
      for (const auto& a : of_size(t.args[k], i))
        for (const auto& b : tuples(t, k + 1, s - i))
          out.push_back(Term::pair(a, b));
    return out;
  }

  // Item lists of total size s, an item of size r costing 1 + r.
  std::vector<std::vector<Term>> words(const TypeExpr& letter, std::size_t s) {
    if (s == 0) return {{}};
    std::vector<std::vector<Term>> out;
    for (std::size_t r = 0; r + 1 <= s; ++r)
      for (const auto& x : of_size(letter, r))
        for (auto rest : words(letter, s - 1 - r)) {
          rest.insert(rest.begin(), x);
          out.push_back(std::move(rest));
        }
    return out;
  }

  static CnfOrdinal lead_exponent(const CnfOrdinal& a) {
    return a.is_zero() ? CnfOrdinal::zero() : a.terms.front().exponent;
  }

  // Normal forms of rank s whose exponents are all at most `cap`.
  std::vector<CnfOrdinal> ordinals(std::size_t s, const CnfOrdinal& cap) {
    return ordinals_below(s, cap, true);
  }

  std::vector<CnfOrdinal> ordinals_below(std::size_t s, const CnfOrdinal& cap,
                                         bool inclusive) {
    if (s == 0) return {CnfOrdinal::zero()};
    auto key = std::make_tuple(s, to_term(cap), inclusive);
    if (auto it = ord_memo_.find(key); it != ord_memo_.end()) return it->second;
    auto& out = ord_memo_[key];
    for (std::size_t r = 0; r < s; ++r) {
      for (const auto& e : ordinals(r, lead_exponent(cap))) {
        auto cmp = cnf_compare(e, cap);
        if (cmp > 0 || (cmp == 0 && !inclusive)) continue;
        for (std::size_t c = 1; c * (1 + r) <= s; ++c)
          for (auto rest : ordinals_below(s - c * (1 + r), e, false)) {
            rest.terms.insert(rest.terms.begin(), CnfTerm{e, c});
            out.push_back(std::move(rest));
          }
      }
    }
    return out;
  }

  std::map<std::pair<const TypeExpr*, std::size_t>, std::vector<Term>> memo_;
  std::map<std::tuple<std::size_t, Term, bool>, std::vector<CnfOrdinal>> ord_memo_;
};

}  // namespace

std::vector<Element> enumerate(const TypeExpr& t, const Budget& b) {
  Enumerator e;
  std::vector<Element> out;
  for (std::size_t s = 0; s <= b.max_size && out.size() < b.max_elements; ++s)
    for (const auto& x : e.of_size(t, s)) {
      if (out.size() == b.max_elements) break;
      out.push_back(x);
    }
  return out;
}

namespace {

std::vector<bool> mask_of(const Presentation& X, const ClosedSet& S,
                          const std::vector<Element>& universe,
                          const std::vector<Ideal>& pis) {
  std::vector<bool> in(universe.size(), false);
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if (S.is_up()) {
      for (const auto& g : S.up().generators)
        if (X.od(g, universe[k])) {
          in[k] = true;
          break;
        }
    } else {
      for (const auto& I : S.down().ideals)
        if (X.id(pis[k], I)) {
          in[k] = true;
          break;
        }
    }
  }
  return in;
}

}  // namespace

std::vector<Element> extension_of(const Presentation& X, const ClosedSet& S,
                                  const std::vector<Element>& universe) {
  std::vector<Ideal> pis;
  if (!S.is_up())
    for (const auto& x : universe) pis.push_back(X.pi(x));
  auto in = mask_of(X, S, universe, pis);
  std::vector<Element> out;
  for (std::size_t k = 0; k < universe.size(); ++k)
    if (in[k]) out.push_back(universe[k]);
  return out;
}

// ---- Reports ---------------------------------------------------------------

std::string Report::text() const {
  std::ostringstream out;
  out << "check " << subject << " seed=" << seed << " universe=" << universe_size
      << " checks=" << checks << " failures=" << failures.size()
      << " inconclusive=" << inconclusive.size() << "\n";
  auto list = [&](const char* tag, const std::vector<Finding>& fs) {
    for (const auto& f : fs) {
      out << tag << " " << f.op << " " << f.property;
      for (const auto& i : f.inputs) out << " " << i;
      out << "\n  expected: " << f.expected << "\n  got:      " << f.got << "\n";
    }
  };
  list("FAIL", failures);
  list("INCONCLUSIVE", inconclusive);
  out << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string Report::json_lines() const {
  using nlohmann::json;
  std::string out;
  auto emit = [&](const char* status, const std::vector<Finding>& fs) {
    for (const auto& f : fs)
      out += json{{"status", status},     {"op", f.op},
                  {"property", f.property}, {"inputs", f.inputs},
                  {"expected", f.expected}, {"got", f.got}}
                 .dump() +
             "\n";
  };
  emit("failed", failures);
  emit("inconclusive", inconclusive);
  out += json{{"subject", subject},
              {"seed", seed},
              {"universe", universe_size},
              {"checks", checks},
              {"failures", failures.size()},
              {"inconclusive", inconclusive.size()},
              {"passed", passed()}}
             .dump() +
         "\n";
  return out;
}

// ---- Property suite --------------------------------------------------------

namespace {

class Checker {
 public:
  Checker(const Presentation& X, const std::vector<Element>& universe,
          const std::vector<Element>& wide, const CheckOptions& opts,
          const TermPrinter& print, Report& report)
      : X_(X), U_(universe), W_(wide), print_(print), report_(report),
        rng_(opts.seed), samples_(opts.samples) {
    for (const auto& x : U_) pis_.push_back(X_.pi(x));
  }

  void run() {
    if (U_.empty()) return;
    order();
    decompositions();
    principal();
    complements_of_filters();
    filter_meets();
    collect_ideals();
    complements_of_ideals();
    ideal_meets();
    ideal_inclusion();
    kernel_algebra();
    directedness();
  }

 private:
  using Mask = std::vector<bool>;

  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::string show(const Term& t, bool ideal) const { return print_(t, ideal); }

  std::string show(const ClosedSet& S) const {
    if (S.empty()) return "empty";
    std::string out;
    if (S.is_up()) {
      for (const auto& g : S.up().generators)
        out += (out.empty() ? "up(" : " | up(") + show(g, false) + ")";
    } else {
      for (const auto& I : S.down().ideals)
        out += (out.empty() ? "" : " | ") + show(I, true);
    }
    return out;
  }

  std::string show(const Mask& m) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k]) {
        out += (first ? "" : ",") + show(U_[k], false);
        first = false;
      }
    return out + "}";
  }

  void fail(std::string op, std::string property, std::vector<std::string> inputs,
            std::string expected, std::string got) {
    report_.failures.push_back(Finding{std::move(op), std::move(property),
                                       std::move(inputs), std::move(expected),
                                       std::move(got)});
  }

  void unsure(std::string op, std::string property,
              std::vector<std::string> inputs, std::string expected) {
    report_.inconclusive.push_back(Finding{std::move(op), std::move(property),
                                           std::move(inputs),
                                           std::move(expected), "no witness"});
  }

  bool in_ideal(std::size_t k, const Ideal& I) { return X_.id(pis_[k], I); }

  Mask mask(const ClosedSet& S) { return mask_of(X_, S, U_, pis_); }

  Mask filter_mask(const Element& x) {
    Mask m(U_.size());
    for (std::size_t k = 0; k < U_.size(); ++k) m[k] = X_.od(x, U_[k]);
    return m;
  }

  Mask ideal_mask(const Ideal& I) {
    Mask m(U_.size());
    for (std::size_t k = 0; k < U_.size(); ++k) m[k] = in_ideal(k, I);
    return m;
  }

  static Mask negate(Mask m) {
    m.flip();
    return m;
  }

  static Mask both(Mask a, const Mask& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] && b[k];
    return a;
  }

  static Mask either(Mask a, const Mask& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] || b[k];
    return a;
  }

  void agree(const std::string& op, const std::string& property,
             const std::vector<std::string>& inputs, const Mask& expected,
             const ClosedSet& got) {
    ++report_.checks;
    if (mask(got) != expected)
      fail(op, property, inputs, show(expected), show(got) + " = " + show(mask(got)));
  }

  void canonical(const std::string& op, const std::vector<std::string>& inputs,
                 const ClosedSet& S) {
    ++report_.checks;
    bool ok = true;
    if (S.is_up()) {
      const auto& g = S.up().generators;
      for (std::size_t i = 0; i < g.size() && ok; ++i) {
        if (i && !(g[i - 1] < g[i])) ok = false;
        for (std::size_t j = 0; j < g.size() && ok; ++j)
          if (i != j && X_.od(g[i], g[j])) ok = false;
      }
    } else {
      const auto& d = S.down().ideals;
      for (std::size_t i = 0; i < d.size() && ok; ++i) {
        if (i && !(d[i - 1] < d[i])) ok = false;
        for (std::size_t j = 0; j < d.size() && ok; ++j)
          if (i != j && X_.id(d[i], d[j])) ok = false;
      }
    }
    if (!ok) fail(op, "canonical", inputs, "sorted pairwise incomparable", show(S));
  }

  void order() {
    for (const auto& x : U_) {
      ++report_.checks;
      if (!X_.od(x, x)) fail("OD", "reflexive", {show(x, false)}, "true", "false");
    }
    for (std::size_t n = 0; n < samples_ * 8; ++n) {
      const auto& x = U_[pick(U_.size())];
      const auto& y = U_[pick(U_.size())];
      const auto& z = U_[pick(U_.size())];
      ++report_.checks;
      if (X_.od(x, y) && X_.od(y, z) && !X_.od(x, z))
        fail("OD", "transitive", {show(x, false), show(y, false), show(z, false)},
             "true", "false");
    }
  }

  void decompositions() {
    Mask all(U_.size(), true);
    agree("XI", "decomposition/extensional", {}, all, ClosedSet(X_.xi));
    agree("XF", "decomposition/extensional", {}, all, ClosedSet(X_.xf));
    canonical("XI", {}, ClosedSet(X_.xi));
    canonical("XF", {}, ClosedSet(X_.xf));
  }

  void principal() {
    for (std::size_t n = 0; n < samples_ * 4; ++n) {
      std::size_t i = pick(U_.size());
      std::size_t j = pick(U_.size());
      ++report_.checks;
      bool want = X_.od(U_[i], U_[j]);
      bool got = X_.id(pis_[i], pis_[j]);
      if (want != got)
        fail("PI", "order/extensional", {show(U_[i], false), show(U_[j], false)},
             want ? "included" : "not included", got ? "included" : "not included");
    }
  }

  std::vector<std::size_t> sample_indices() {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < samples_ && n < U_.size(); ++n)
      out.push_back(U_.size() <= samples_ ? n : pick(U_.size()));
    return out;
  }

  void complements_of_filters() {
    for (auto k : sample_indices()) {
      const auto& x = U_[k];
      auto D = X_.cf(x);
      ClosedSet S(D);
      agree("CF", "complement/extensional", {show(x, false)},
            negate(filter_mask(x)), S);
      canonical("CF", {show(x, false)}, S);
      pool_.insert(pool_.end(), D.ideals.begin(), D.ideals.end());
    }
  }

  void filter_meets() {
    for (std::size_t n = 0; n < samples_; ++n) {
      const auto& x = U_[pick(U_.size())];
      const auto& y = U_[pick(U_.size())];
      ClosedSet S(X_.if_(x, y));
      std::vector<std::string> in = {show(x, false), show(y, false)};
      agree("IF", "intersection/extensional", in,
            both(filter_mask(x), filter_mask(y)), S);
      canonical("IF", in, S);
    }
  }

  void collect_ideals() {
    pool_.insert(pool_.end(), X_.xi.ideals.begin(), X_.xi.ideals.end());
    for (std::size_t n = 0; n < samples_; ++n) pool_.push_back(pis_[pick(U_.size())]);
    std::sort(pool_.begin(), pool_.end());
    pool_.erase(std::unique(pool_.begin(), pool_.end()), pool_.end());
  }

  const Ideal& any_ideal() { return pool_[pick(pool_.size())]; }

  void complements_of_ideals() {
    for (std::size_t n = 0; n < samples_ && !pool_.empty(); ++n) {
      const auto& I = any_ideal();
      ClosedSet S(X_.ci(I));
      agree("CI", "complement/extensional", {show(I, true)}, negate(ideal_mask(I)), S);
      canonical("CI", {show(I, true)}, S);
    }
  }

  void ideal_meets() {
    std::vector<Ideal> made;
    for (std::size_t n = 0; n < samples_ && !pool_.empty(); ++n) {
      const auto& I = any_ideal();
      const auto& J = any_ideal();
      auto D = X_.ii(I, J);
      std::vector<std::string> in = {show(I, true), show(J, true)};
      agree("II", "intersection/extensional", in, both(ideal_mask(I), ideal_mask(J)),
            ClosedSet(D));
      canonical("II", in, ClosedSet(D));
      made.insert(made.end(), D.ideals.begin(), D.ideals.end());
    }
    pool_.insert(pool_.end(), made.begin(), made.end());
    std::sort(pool_.begin(), pool_.end());
    pool_.erase(std::unique(pool_.begin(), pool_.end()), pool_.end());
  }

  void ideal_inclusion() {
    for (std::size_t n = 0; n < samples_ && !pool_.empty(); ++n) {
      const auto& I = any_ideal();
      const auto& J = any_ideal();
      auto mi = ideal_mask(I);
      auto mj = ideal_mask(J);
      bool inside = both(mi, negate(mj)) == Mask(U_.size(), false);
      ++report_.checks;
      std::vector<std::string> in = {show(I, true), show(J, true)};
      bool got = X_.id(I, J);
      if (got && !inside)
        fail("ID", "inclusion/extensional", in, "not included", "included");
      else if (!got && inside)
        unsure("ID", "non-inclusion witness", in, "an element of the first ideal only");
    }
  }

  ClosedSet random_set(bool up) {
    std::size_t n = pick(4);
    if (up) {
      UpSet U;
      for (std::size_t k = 0; k < n; ++k) U.generators.push_back(U_[pick(U_.size())]);
      return ClosedSet(canonize(X_, U));
    }
    DownSet D;
    for (std::size_t k = 0; k < n && !pool_.empty(); ++k)
      D.ideals.push_back(any_ideal());
    return ClosedSet(canonize(X_, D));
  }

  void kernel_algebra() {
    for (std::size_t n = 0; n < samples_; ++n) {
      bool up = n % 2 == 0;
      auto S = random_set(up);
      auto T = random_set(up);
      auto ms = mask(S);
      auto mt = mask(T);
      std::vector<std::string> in = {show(S), show(T)};
      const auto& x = U_[pick(U_.size())];
      ++report_.checks;
      bool want = ms[static_cast<std::size_t>(&x - U_.data())];
      if (member(X_, x, S) != want)
        fail("member", "extensional", {show(x, false), show(S)},
             want ? "true" : "false", want ? "false" : "true");
      agree("union", "extensional", in, either(ms, mt), unite(X_, S, T));
      agree("intersect", "extensional", in, both(ms, mt), intersect(X_, S, T));
      auto C = complement(X_, S);
      agree("complement", "complement/extensional", {show(S)}, negate(ms), C);
      canonical("complement", {show(S)}, C);
      ++report_.checks;
      auto back = complement(X_, C);
      // Quotients may pick another representative of the same class.
      if (!(back == S) && !equivalent(X_, back, S))
        fail("complement", "involution", {show(S)}, show(S), show(back));
      bool inside = both(ms, negate(mt)) == Mask(U_.size(), false);
      ++report_.checks;
      bool got = subset(X_, S, T);
      if (got && !inside)
        fail("subset", "extensional", in, "false", "true");
      else if (!got && inside)
        unsure("subset", "non-inclusion witness", in, "an element of the first set only");
    }
  }

  void directedness() {
    std::vector<Ideal> wide_pis;
    for (const auto& z : W_) wide_pis.push_back(X_.pi(z));
    std::size_t tried = 0;
    for (const auto& I : pool_) {
      if (tried++ >= samples_) break;
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < U_.size(); ++k)
        if (in_ideal(k, I)) members.push_back(k);
      ++report_.checks;
      if (members.empty()) {
        unsure("ideal", "non-empty", {show(I, true)}, "a member within budget");
        continue;
      }
      for (std::size_t n = 0; n < 4; ++n) {
        const auto& x = U_[members[pick(members.size())]];
        const auto& y = U_[members[pick(members.size())]];
        ++report_.checks;
        bool found = false;
        for (std::size_t k = 0; k < W_.size() && !found; ++k)
          found = X_.od(x, W_[k]) && X_.od(y, W_[k]) && X_.id(wide_pis[k], I);
        if (!found)
          unsure("ideal", "directed", {show(I, true), show(x, false), show(y, false)},
                 "a common upper bound inside the ideal");
      }
    }
  }

  const Presentation& X_;
  const std::vector<Element>& U_;
  const std::vector<Element>& W_;
  const TermPrinter& print_;
  Report& report_;
  std::mt19937_64 rng_;
  std::size_t samples_;
  std::vector<Ideal> pis_;
  std::vector<Ideal> pool_;
};

}  // namespace

Report check_presentation(const Presentation& X, const std::string& subject,
                          const std::vector<Element>& universe,
                          const std::vector<Element>& wide_universe,
                          const CheckOptions& opts, const TermPrinter& print) {
  Report r;
  r.subject = subject;
  r.seed = opts.seed;
  r.universe_size = universe.size();
  try {
    Checker(X, universe, wide_universe, opts, print, r).run();
  } catch (const Error& e) {
    r.failures.push_back(Finding{"suite", "exception", {}, "no error", e.what()});
  }
  return r;
}

Report check_presentation(const Presentation& X, const TypeExpr& t,
                          const Budget& b, const CheckOptions& opts) {
  auto universe = enumerate(t, b);
  auto wide = enumerate(t, Budget{4 * b.max_elements, 4 * b.max_size});
  TermPrinter print = [&t](const Term& x, bool ideal) {
    return ideal ? render_ideal(x, t) : render_value(x, t);
  };
  return check_presentation(X, render(t), universe, wide, opts, print);
}

PresentationPtr corrupt(PresentationPtr X, const std::string& op) {
  auto p = std::make_shared<Presentation>(*X);
  p->name = X->name + "/corrupt-" + op;
  if (op == "cf") {
    p->cf = [X](const Element& x) {
      auto D = X->cf(x);
      if (D.empty()) return X->xi;
      D.ideals.pop_back();
      return D;
    };
  } else if (op == "ci") {
    p->ci = [X](const Ideal& I) {
      auto U = X->ci(I);
      if (U.empty()) return X->xf;
      U.generators.pop_back();
      return U;
    };
  } else if (op == "if") {
    p->if_ = [X](const Element&, const Element&) { return X->xf; };
  } else if (op == "ii") {
    p->ii = [X](const Ideal&, const Ideal&) { return X->xi; };
  } else if (op == "pi") {
    p->pi = [X](const Element&) { return X->xi.ideals.front(); };
  } else if (op == "od") {
    p->od = [](const Element&, const Element&) { return true; };
  } else if (op == "id") {
    p->id = [](const Ideal&, const Ideal&) { return true; };
  } else {
    throw Error("unknown operation to corrupt: " + op);
  }
  return p;
}

}  // namespace wqo
