#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "normlog/formula.hpp"

namespace normlog {

inline constexpr long long kDefaultInterpretationCap = 1'000'000;

// Non-logical symbols of a formula set.  Metavariables are kept under
// their sigiled names and treated as ordinary symbols: for validity and
// entailment they range over all denotations anyway, so the generic
// reading is exact.
struct Vocabulary {
  std::map<std::string, int> predicates;  // name -> arity
  std::set<std::string> constants;

  // Throws arity_error if a predicate recurs at a different arity.
  void add(const Formula& f);
};

// One first-order interpretation over the domain {0, .., size-1}.
// Extensions are bitsets over arity-tuples in lexicographic order.
struct Interpretation {
  int domain_size = 0;
  std::map<std::string, int> constants;
  std::map<std::string, std::vector<bool>> extensions;

  bool contains(const std::string& pred, const std::vector<int>& tuple) const;
};

// Variable environment for quantifiers and rule slots.
using Env = std::map<std::string, int>;

bool eval(const Formula& f, const Interpretation& interp, Env& env);
bool eval_closed(const Formula& f, const Interpretation& interp);

// Number of interpretations over domains of size 1..bound, as a long
// double so oversized vocabularies do not overflow.
long double interpretation_count(const Vocabulary& vocab, int bound);

// Visits every interpretation over domains of size 1..bound.  The visitor
// returns false to stop early; the function returns false when stopped.
// Throws budget_error when interpretation_count exceeds cap.
bool for_each_interpretation(const Vocabulary& vocab, int bound, long long cap,
                             const std::function<bool(const Interpretation&)>& visit);

// True when f can be decided by a truth table over ground atoms: no
// quantifier, no equality, no variables.  Atoms are keyed by their
// rendered text.
bool truth_table_ready(const Formula& f);
void collect_atom_keys(const Formula& f, std::set<std::string>& keys);
bool eval_ground(const Formula& f, const std::map<std::string, bool>& assignment);

}  // namespace normlog
