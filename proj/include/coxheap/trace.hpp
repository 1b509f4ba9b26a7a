#pragma once

#include <deque>
#include <set>
#include <string>

#include "alphabet.hpp"
#include "bigint.hpp"
#include "word_poset.hpp"

namespace coxheap {

// Number of words in the commutation class of w.
inline BigInt count_class(const Word& w, const CommutationAlphabet& alpha) {
  return count_linear_extensions(build_word_poset(w, alpha));
}

// Lexicographically least word of the commutation class of w.
inline Word class_representative(const Word& w, const CommutationAlphabet& alpha) {
  return canonical_word(build_word_poset(w, alpha));
}

inline bool same_class(const Word& u, const Word& v, const CommutationAlphabet& alpha) {
  if (u.size() != v.size()) return false;
  return class_representative(u, alpha) == class_representative(v, alpha);
}

// Reference enumeration of a commutation class: breadth-first closure of w
// under swaps of adjacent, distinct, commuting letters. Throws BudgetExceeded
// once the class has more than `cap` words.
inline std::set<Word> oracle_enumerate_class(const Word& w, const CommutationAlphabet& alpha,
                                             std::size_t cap = 1'000'000) {
  for (Letter a : w) alpha.check(a);
  std::set<Word> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!alpha.commutes(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw BudgetExceeded("commutation class exceeds oracle cap of " + std::to_string(cap) + " words");
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace coxheap
