#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normlog/formula.hpp"
#include "normlog/semantics.hpp"

namespace normlog {

// Enumeration guards shared by every consequence check on a knowledge
// base: quantified queries enumerate models over domains of size
// 1..domain_bound, and any enumeration aborts past interpretation_cap.
struct EnumerationLimits {
  int domain_bound = 3;
  long long interpretation_cap = kDefaultInterpretationCap;
};

// Exceptionless rule, universally quantified over its single slot
// variable when one is present.
struct StrictRule {
  StrictRule(Formula antecedent, Formula consequent);

  Formula antecedent;
  Formula consequent;
  std::optional<std::string> slot;

  Formula as_implication() const;
  // Instantiates the slot; identity for closed rules.
  StrictRule ground(const std::string& constant) const;
};

// "If A then one may infer x" with at most one shared slot variable and
// an optional probability annotation.
struct DefeasibleConditional {
  DefeasibleConditional(Formula antecedent, Formula consequent,
                        std::optional<double> probability = std::nullopt);

  Formula antecedent;
  Formula consequent;
  std::optional<double> probability;
  std::optional<std::string> slot;

  std::string text() const;
};

// Conditional event probability, keyed consequent-given-antecedent by
// predicate symbol ("white|swan").
struct StatKey {
  std::string consequent;
  std::string antecedent;

  std::string text() const { return consequent + "|" + antecedent; }
  friend auto operator<=>(const StatKey&, const StatKey&) = default;
};

using Statistics = std::map<StatKey, double>;

// Conservative inference threshold: infer when the conditional
// probability is at least 1 - epsilon.
struct ThresholdConfig {
  explicit ThresholdConfig(double epsilon = 0.01);

  double epsilon;
};

// Facts, strict rules, defeasible conditionals and statistics.
// Construction rejects a knowledge base whose facts plus strict closure
// admit no model, with a witness naming a minimal conflicting core.
class KnowledgeBase {
 public:
  KnowledgeBase(std::set<Formula> facts, std::vector<StrictRule> rules,
                std::vector<DefeasibleConditional> defaults, Statistics stats,
                EnumerationLimits limits = {});

  const std::set<Formula>& facts() const { return facts_; }
  const std::vector<StrictRule>& rules() const { return rules_; }
  const std::vector<DefeasibleConditional>& defaults() const { return defaults_; }
  const Statistics& stats() const { return stats_; }
  const EnumerationLimits& limits() const { return limits_; }

  // Constants mentioned anywhere in the base.
  std::set<std::string> constants() const;

  // Canonical listing in the knowledge-base file format.
  std::string dump() const;

  // File format, line oriented with "#" comments:
  //   fact <formula>.
  //   rule <formula> -> <formula>.
  //   default <formula> ~> <formula> [<prob>].
  //   stat <pred>|<pred> = <prob>.
  static KnowledgeBase load(std::istream& in, EnumerationLimits limits = {});
  static KnowledgeBase load_file(const std::string& path,
                                 EnumerationLimits limits = {});

 private:
  std::set<Formula> facts_;
  std::vector<StrictRule> rules_;
  std::vector<DefeasibleConditional> defaults_;
  Statistics stats_;
  EnumerationLimits limits_;
};

}  // namespace normlog
