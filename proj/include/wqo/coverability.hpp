#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wqo/kernel.hpp"

namespace wqo {

using Marking = std::vector<std::uint64_t>;

/// Markings of different lengths, or a malformed net description.
class DimensionError : public Error {
 public:
  using Error::Error;
};

struct Transition {
  Marking pre;
  Marking post;
  std::string name;
};

struct PetriNet {
  std::size_t places = 0;
  std::vector<Transition> transitions;
};

/// Parses {"places": k, "transitions": [{"pre": [..], "post": [..],
/// "name": ".."}]}. Throws DimensionError on malformed input.
PetriNet parse_net(const std::string& json_text);
PetriNet load_net(const std::string& path);

/// "1,0,2" -> {1, 0, 2}. Throws DimensionError on malformed input.
Marking parse_marking(const std::string& csv);

/// N^k as right-nested pairs; k = 1 is the naturals themselves.
PresentationPtr marking_space(std::size_t k);
Term marking_term(const Marking& m);
Marking term_marking(const Term& t);

struct CoverResult {
  bool coverable = false;
  UpSet basis;
  std::size_t iterations = 0;
};

/// The markings from which one firing of some transition reaches U.
UpSet predecessors(const PetriNet& net, const UpSet& U);

/// Backward fixpoint from the upward closure of `target`.
CoverResult coverability(const PetriNet& net, const Marking& initial,
                         const Marking& target);

}  // namespace wqo
