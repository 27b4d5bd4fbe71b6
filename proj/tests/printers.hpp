#pragma once

// Readable doctest output for library values.

#include <string>

#include "doctest.h"
#include "wqo/kernel.hpp"

namespace doctest {

template <>
struct StringMaker<wqo::Term> {
  static String convert(const wqo::Term& t) {
    return wqo::debug_string(t).c_str();
  }
};

template <>
struct StringMaker<wqo::UpSet> {
  static String convert(const wqo::UpSet& u) {
    std::string out = "up{";
    for (std::size_t i = 0; i < u.generators.size(); ++i)
      out += (i ? " " : "") + wqo::debug_string(u.generators[i]);
    return (out + "}").c_str();
  }
};

template <>
struct StringMaker<wqo::DownSet> {
  static String convert(const wqo::DownSet& d) {
    std::string out = "down{";
    for (std::size_t i = 0; i < d.ideals.size(); ++i)
      out += (i ? " " : "") + wqo::debug_string(d.ideals[i]);
    return (out + "}").c_str();
  }
};

}  // namespace doctest
