#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normlog/belief.hpp"
#include "normlog/formula.hpp"

namespace normlog {

// Where the deontic operator sits in "if the premises entail the
// conclusion, then ...".
enum class Scope { Consequent, Both, Wide };  // C, B, W
// Strict obligation, permission, or defeasible reason.
enum class Modality { Obligation, Permission, Reason };  // o, p, r
// Required attitude: believe, or merely not disbelieve.
enum class Polarity { Positive, Negative };  // +, -

struct BridgePrincipleForm {
  Scope scope = Scope::Consequent;
  Modality modality = Modality::Obligation;
  Polarity polarity = Polarity::Positive;

  // Two-letter-plus-sign label: "Co+", "Wo-", "Wr+", ...
  std::string label() const;
  static std::optional<BridgePrincipleForm> from_label(std::string_view text);

  friend bool operator==(const BridgePrincipleForm&,
                         const BridgePrincipleForm&) = default;
};

// All 18 forms, ordered C < B < W, o < p < r, + < -.
std::vector<BridgePrincipleForm> enumerate_bridge_forms();

enum class ComplianceStatus {
  Satisfied,
  Violated,
  NotApplicable,
  PermissionGranted,
  ReasonGenerated,
};

const char* compliance_name(ComplianceStatus s);

struct ComplianceReport {
  BridgePrincipleForm form;
  ComplianceStatus status = ComplianceStatus::NotApplicable;
  // The attitude assignments that decided the status.
  std::vector<std::pair<Formula, Attitude>> witness;
};

// Evaluates one bridge-principle form against a belief state.
//
// Scope C triggers when every premise is believed, scope B when every
// premise is in the obligation set; an untriggered form is not
// applicable.  Triggered obligations check the conclusion attitude
// against the polarity (believe for +, not-disbelieve for -) and are
// violated otherwise.  Permissions are granted, never violated; reasons
// are generated unless the conclusion is a registered defeater.  Scope W
// is wide: its obligation forms hold exactly when the material
// conditional over attitudes does, and only obligations can be violated.
ComplianceReport evaluate_bridge(const BridgePrincipleForm& form,
                                 const std::vector<Formula>& premises,
                                 const Formula& conclusion, const BeliefState& bs,
                                 const std::set<Formula>& obligations,
                                 const std::set<Formula>& defeaters);

}  // namespace normlog
