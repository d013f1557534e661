#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normlog/belief.hpp"
#include "normlog/entail.hpp"
#include "normlog/match.hpp"

namespace normlog {

enum class VerdictKind {
  ObligedToBelieve,       // target
  ProhibitedCombination,  // believe antecedent without target
  ProhibitedToBelieve,    // target (rule-system prohibitions)
  LicensedToInfer,        // target (rule-system inferences)
  NoVerdict,
};

struct Verdict {
  VerdictKind kind = VerdictKind::NoVerdict;
  std::optional<Formula> target;
  std::optional<Formula> antecedent;  // ProhibitedCombination only
  // For a prohibition, whether the belief state actually breaches it.
  bool breached = false;
  // Rule or condition that produced (or withheld) the verdict.
  std::string provenance;

  bool decided() const { return kind != VerdictKind::NoVerdict; }
  std::string text() const;
};

// The formality gate: an obligation to believe the conclusion arises only
// from a usably valid schema, a successful apprehension, and belief in
// every premise; anything less is no verdict, with the failed condition
// named.
Verdict extended_bridge_verdict(const ValidityReport& validity,
                                const MatchResult& apprehension,
                                const std::vector<Formula>& premises,
                                const Formula& conclusion, const BeliefState& bs);

enum class NonMRVariant { Plus, Minus };

// The defeasible bridge rules.  Both variants require that the base
// defeasibly entails x from a (with nameable provenance) and that the
// available information, pooled with the base's facts and strict rules,
// does not classically entail the negation of x.  Plus obliges believing
// x when a is believed; Minus prohibits believing a without x and flags
// whether the given belief state breaches that prohibition.
Verdict nonmr_verdict(const KnowledgeBase& kb, const Formula& a, const Formula& x,
                      const BeliefState& bs, const std::set<Formula>& available_info,
                      NonMRVariant variant, const ThresholdConfig& cfg);

// Tagged evidence: tag name plus one argument, compared textually after
// canonicalizing arguments that parse as formulas.
struct EvidenceTag {
  std::string tag;
  std::string arg;

  std::string text() const { return tag + "(" + arg + ")"; }
  friend auto operator<=>(const EvidenceTag&, const EvidenceTag&) = default;
};

EvidenceTag make_evidence(const std::string& tag, const std::string& arg);
// Parses "tag(arg)".
EvidenceTag parse_evidence(const std::string& text);

enum class RuleAction { Infer, Oblige, Prohibit };

struct NormRule {
  std::string name;
  std::vector<EvidenceTag> conditions;
  RuleAction action = RuleAction::Infer;
  Formula target;
};

// External rule system R: rules named rule1, rule2, ... in file order.
// File format, "#" comments:
//   when <tag>(<arg>) [& <tag>(<arg>)]* then infer|oblige|prohibit <formula>.
class RuleSystem {
 public:
  void add(NormRule rule);
  const std::vector<NormRule>& rules() const { return rules_; }

  static RuleSystem load(std::istream& in);
  static RuleSystem load_file(const std::string& path);

 private:
  std::vector<NormRule> rules_;
};

struct RuleOutcome {
  std::vector<Verdict> verdicts;
  // Suppressed contradictory licences, e.g. two reliable experts
  // asserting x and ~x.
  std::vector<std::string> conflicts;
};

// Fires every rule whose conditions are all present in the evidence.
// Contradictory Infer verdicts cancel each other and are recorded as
// conflicts instead.
RuleOutcome apply_rule_system(const RuleSystem& rs,
                              const std::set<EvidenceTag>& evidence);

}  // namespace normlog
