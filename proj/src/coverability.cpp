#include "wqo/coverability.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wqo/base.hpp"
#include "wqo/sum_product.hpp"

namespace wqo {

namespace {

Marking read_vector(const nlohmann::json& j, std::size_t k, const std::string& what) {
  if (!j.is_array() || j.size() != k)
    throw DimensionError(what + ": expected " + std::to_string(k) + " naturals");
  Marking m;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw DimensionError(what + ": expected a natural number");
    m.push_back(v.get<std::uint64_t>());
  }
  return m;
}

void check_dims(const PetriNet& net, const Marking& m, const char* what) {
  if (m.size() != net.places)
    throw DimensionError(std::string(what) + " has " + std::to_string(m.size()) +
                         " places, the net has " + std::to_string(net.places));
}

}  // namespace

PetriNet parse_net(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DimensionError(std::string("net: ") + e.what());
  }
  if (!j.is_object() || !j.contains("places") || !j["places"].is_number_unsigned() ||
      j["places"].get<std::size_t>() == 0)
    throw DimensionError("net: \"places\" must be a positive integer");
  PetriNet net;
  net.places = j["places"].get<std::size_t>();
  if (!j.contains("transitions") || !j["transitions"].is_array())
    throw DimensionError("net: \"transitions\" must be an array");
  for (const auto& t : j["transitions"]) {
    if (!t.is_object() || !t.contains("pre") || !t.contains("post"))
      throw DimensionError("net: a transition needs \"pre\" and \"post\"");
    Transition tr;
    tr.name = t.value("name", "t" + std::to_string(net.transitions.size() + 1));
    tr.pre = read_vector(t["pre"], net.places, tr.name + ".pre");
    tr.post = read_vector(t["post"], net.places, tr.name + ".post");
    net.transitions.push_back(std::move(tr));
  }
  return net;
}

PetriNet load_net(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DimensionError("cannot read net file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_net(ss.str());
}

Marking parse_marking(const std::string& csv) {
  Marking m;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw DimensionError("empty marking entry in \"" + csv + "\"");
    item = item.substr(b, e - b + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18)
      throw DimensionError("not a natural number: \"" + item + "\"");
    m.push_back(std::stoull(item));
  }
  if (m.empty()) throw DimensionError("empty marking");
  return m;
}

PresentationPtr marking_space(std::size_t k) {
  if (k == 0) throw DimensionError("a net needs at least one place");
  PresentationPtr X = naturals();
  for (std::size_t i = 1; i < k; ++i) X = product(naturals(), X);
  return X;
}

Term marking_term(const Marking& m) {
  if (m.empty()) throw DimensionError("empty marking");
  Term t = Term::nat(m.back());
  for (std::size_t i = m.size() - 1; i-- > 0;) t = Term::pair(Term::nat(m[i]), t);
  return t;
}

Marking term_marking(const Term& t) {
  Marking m;
  const Term* cur = &t;
  while (cur->is(Kind::Pair)) {
    m.push_back(cur->kid(0).num());
    cur = &cur->kid(1);
  }
  m.push_back(cur->num());
  return m;
}

UpSet predecessors(const PetriNet& net, const UpSet& U) {
  std::vector<Term> out;
  for (const auto& t : net.transitions)
    for (const auto& g : U.generators) {
      auto need = term_marking(g);
      if (need.size() != net.places) throw DimensionError("basis of the wrong dimension");
      Marking m(net.places);
      for (std::size_t i = 0; i < net.places; ++i)
        m[i] = t.pre[i] + (need[i] > t.post[i] ? need[i] - t.post[i] : 0);
      out.push_back(marking_term(m));
    }
  return UpSet{std::move(out)};
}

CoverResult coverability(const PetriNet& net, const Marking& initial,
                         const Marking& target) {
  check_dims(net, initial, "initial marking");
  check_dims(net, target, "target");
  auto X = marking_space(net.places);
  CoverResult r;
  UpSet U = canonize(*X, UpSet{{marking_term(target)}});
  for (;;) {
    ++r.iterations;
    UpSet next = unite(*X, U, predecessors(net, U));
    if (subset(*X, next, U)) break;
    U = canonize(*X, next);
  }
  r.basis = U;
  r.coverable = member(*X, marking_term(initial), U);
  return r;
}

}  // namespace wqo
