#pragma once

#include <set>
#include <string>
#include <vector>

#include "normlog/kb.hpp"

namespace normlog {

inline constexpr std::size_t kDefaultClosureCap = 100'000;

// Brute-force classical consequence: a truth table over ground atoms
// when no quantifier, equality or rule slot is involved, otherwise all
// models over domains of size 1..domain_bound.  Throws budget_error
// past the interpretation cap.
bool classical_entails(const KnowledgeBase& kb, const Formula& goal);
bool classical_entails(const KnowledgeBase& kb, const std::set<Formula>& extra,
                       const Formula& goal);

// True when facts, strict rules and the extra formulas admit a model
// (within the same bounds).
bool satisfiable(const KnowledgeBase& kb, const std::set<Formula>& extra);

enum class DefeasibleStatus { HoldsSyntactic, HoldsStatistical, Fails };

struct DefeasibleResult {
  DefeasibleStatus status = DefeasibleStatus::Fails;
  // Names the default or statistic that decided the verdict; the reason
  // for failure otherwise.
  std::string provenance;

  bool holds() const { return status != DefeasibleStatus::Fails; }
};

// K entails "a defeasibly implies x": either a defeasible conditional in
// the base instantiates to (a, x), or the statistics put P(x's
// predicate | a's predicate) at or above 1 - epsilon.
DefeasibleResult defeasible_entails(const KnowledgeBase& kb, const Formula& a,
                                    const Formula& x, const ThresholdConfig& cfg);

struct TrailEvent {
  int pass = 0;
  std::size_t default_index = 0;
  std::string binding;  // grounding constant, empty for closed defaults
  Formula consequent;
  bool fired = false;
  std::string note;
};

struct InferenceTrail {
  std::set<Formula> added;
  std::vector<TrailEvent> events;
};

// Forward-chains the defeasible conditionals in list order: a default
// fires when its (instantiated) antecedent follows classically from
// facts, rules, proven hypotheses and consequents added so far, and the
// negation of its consequent does not.  Blocked defaults are recorded,
// not raised.  Runs to a fixpoint.
InferenceTrail defeasible_infer(const KnowledgeBase& kb,
                                const std::set<Formula>& proven);

// posterior = likelihood * prior / marginal.  Throws probability_error
// on inputs outside [0,1], a zero marginal, or likelihood * prior
// exceeding the marginal.
double bayes(double prior, double likelihood, double marginal);

// True iff probability >= 1 - epsilon.
bool threshold_infer(double conditional_probability, const ThresholdConfig& cfg);

// Trivially licensed inferences: level k+1 adds f & f and f | B for
// every member f and vocabulary atom B.  Throws budget_error when the
// set would exceed cap; exceeding the cap is exactly what the operation
// demonstrates about unbounded triviality.
std::set<Formula> permitted_closure(const std::set<Formula>& facts,
                                    const std::vector<Formula>& vocabulary,
                                    int depth, std::size_t cap = kDefaultClosureCap);

}  // namespace normlog
