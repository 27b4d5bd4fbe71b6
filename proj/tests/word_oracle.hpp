#pragma once

// Direct semantics of words and atom products over a discrete alphabet,
// for checking the sequence procedures independently of their algorithms.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wqo/term.hpp"

namespace oracle_words {

using wqo::Kind;
using wqo::Term;

inline Term w(const std::string& letters) {
  std::vector<Term> xs;
  for (char c : letters) xs.push_back(Term::sym(std::string(1, c)));
  return Term::seq(std::move(xs));
}

inline std::string str(const Term& word) {
  std::string out;
  for (const auto& x : word.kids()) out += x.sym();
  return out;
}

inline std::vector<std::string> all_words(const std::string& alphabet,
                                          std::size_t max_len) {
  std::vector<std::string> out{""};
  std::vector<std::string> frontier{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& f : frontier)
      for (char c : alphabet) next.push_back(f + c);
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Scattered subword, by dynamic programming over prefixes.
inline bool subword(const std::string& u, const std::string& v) {
  std::vector<std::vector<bool>> ok(u.size() + 1,
                                    std::vector<bool>(v.size() + 1, false));
  for (std::size_t j = 0; j <= v.size(); ++j) ok[0][j] = true;
  for (std::size_t i = 1; i <= u.size(); ++i)
    for (std::size_t j = 1; j <= v.size(); ++j)
      ok[i][j] = ok[i][j - 1] || (u[i - 1] == v[j - 1] && ok[i - 1][j - 1]);
  return ok[u.size()][v.size()];
}

// Letter c lies in the union of the base ideals (principal symbols).
inline bool letter_in_ideals(char c, const std::vector<Term>& ideals) {
  for (const auto& I : ideals)
    if (I.sym() == std::string(1, c)) return true;
  return false;
}

// Whether the word can be split along the atoms.
inline bool in_product(const std::string& word, const Term& P) {
  const auto atoms = P.kids();
  // reach[k] = prefixes of length k covered by the atoms seen so far.
  std::vector<bool> reach(word.size() + 1, false);
  reach[0] = true;
  for (const auto& A : atoms) {
    std::vector<bool> next(word.size() + 1, false);
    if (A.is(Kind::Star)) {
      std::vector<Term> body(A.kids().begin(), A.kids().end());
      for (std::size_t k = 0; k <= word.size(); ++k) {
        if (!reach[k] && !(k > 0 && next[k - 1] &&
                           letter_in_ideals(word[k - 1], body)))
          continue;
        next[k] = true;
      }
    } else {
      std::vector<Term> body{A.kid(0)};
      for (std::size_t k = 0; k <= word.size(); ++k) {
        if (!reach[k]) continue;
        next[k] = true;
        if (k < word.size() && letter_in_ideals(word[k], body))
          next[k + 1] = true;
      }
    }
    reach = std::move(next);
  }
  return reach[word.size()];
}

inline Term random_product(std::mt19937_64& rng, const std::string& alphabet,
                           std::size_t max_atoms) {
  std::uniform_int_distribution<std::size_t> len(0, max_atoms);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<Term> atoms;
  std::size_t n = len(rng);
  for (std::size_t k = 0; k < n; ++k) {
    if (coin(rng)) {
      atoms.push_back(Term::one(Term::sym(std::string(1, alphabet[pick(rng)]))));
    } else {
      std::vector<Term> body;
      for (char c : alphabet)
        if (coin(rng)) body.push_back(Term::sym(std::string(1, c)));
      atoms.push_back(Term::star(std::move(body)));
    }
  }
  return Term::product(std::move(atoms));
}

inline Term random_word(std::mt19937_64& rng, const std::string& alphabet,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  std::size_t n = len(rng);
  for (std::size_t k = 0; k < n; ++k) s += alphabet[pick(rng)];
  return w(s);
}

}  // namespace oracle_words
