#include "normlog/bridge.hpp"

#include <algorithm>

namespace normlog {

std::string BridgePrincipleForm::label() const {
  std::string out;
  out += scope == Scope::Consequent ? 'C' : scope == Scope::Both ? 'B' : 'W';
  out += modality == Modality::Obligation ? 'o'
         : modality == Modality::Permission ? 'p'
                                            : 'r';
  out += polarity == Polarity::Positive ? '+' : '-';
  return out;
}

std::optional<BridgePrincipleForm> BridgePrincipleForm::from_label(
    std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  BridgePrincipleForm form;
  switch (text[0]) {
    case 'C': form.scope = Scope::Consequent; break;
    case 'B': form.scope = Scope::Both; break;
    case 'W': form.scope = Scope::Wide; break;
    default: return std::nullopt;
  }
  switch (text[1]) {
    case 'o': form.modality = Modality::Obligation; break;
    case 'p': form.modality = Modality::Permission; break;
    case 'r': form.modality = Modality::Reason; break;
    default: return std::nullopt;
  }
  switch (text[2]) {
    case '+': form.polarity = Polarity::Positive; break;
    case '-': form.polarity = Polarity::Negative; break;
    default: return std::nullopt;
  }
  return form;
}

std::vector<BridgePrincipleForm> enumerate_bridge_forms() {
  std::vector<BridgePrincipleForm> forms;
  forms.reserve(18);
  for (Scope s : {Scope::Consequent, Scope::Both, Scope::Wide})
    for (Modality m : {Modality::Obligation, Modality::Permission, Modality::Reason})
      for (Polarity p : {Polarity::Positive, Polarity::Negative})
        forms.push_back(BridgePrincipleForm{s, m, p});
  return forms;
}

const char* compliance_name(ComplianceStatus s) {
  switch (s) {
    case ComplianceStatus::Satisfied: return "satisfied";
    case ComplianceStatus::Violated: return "violated";
    case ComplianceStatus::NotApplicable: return "not-applicable";
    case ComplianceStatus::PermissionGranted: return "permission-granted";
    case ComplianceStatus::ReasonGenerated: return "reason-generated";
  }
  return "?";
}

ComplianceReport evaluate_bridge(const BridgePrincipleForm& form,
                                 const std::vector<Formula>& premises,
                                 const Formula& conclusion, const BeliefState& bs,
                                 const std::set<Formula>& obligations,
                                 const std::set<Formula>& defeaters) {
  ComplianceReport report;
  report.form = form;
  for (const Formula& p : premises)
    report.witness.emplace_back(p, bs.attitude(p));
  report.witness.emplace_back(conclusion, bs.attitude(conclusion));

  const bool premises_believed =
      std::all_of(premises.begin(), premises.end(),
                  [&](const Formula& p) { return bs.believes(p); });
  const Attitude conclusion_attitude = bs.attitude(conclusion);
  const bool conclusion_meets_polarity =
      form.polarity == Polarity::Positive
          ? conclusion_attitude == Attitude::Believe
          : conclusion_attitude != Attitude::Disbelieve;

  const auto consequent_status = [&]() {
    switch (form.modality) {
      case Modality::Obligation:
        return conclusion_meets_polarity ? ComplianceStatus::Satisfied
                                         : ComplianceStatus::Violated;
      case Modality::Permission:
        return ComplianceStatus::PermissionGranted;
      case Modality::Reason:
        return defeaters.count(conclusion) ? ComplianceStatus::NotApplicable
                                           : ComplianceStatus::ReasonGenerated;
    }
    return ComplianceStatus::NotApplicable;
  };

  switch (form.scope) {
    case Scope::Consequent:
      report.status = premises_believed ? consequent_status()
                                        : ComplianceStatus::NotApplicable;
      break;
    case Scope::Both: {
      const bool premises_obliged =
          std::all_of(premises.begin(), premises.end(), [&](const Formula& p) {
            return obligations.count(p) > 0;
          });
      report.status = premises_obliged ? consequent_status()
                                       : ComplianceStatus::NotApplicable;
      break;
    }
    case Scope::Wide:
      switch (form.modality) {
        case Modality::Obligation:
          // Material conditional over attitudes.
          report.status = premises_believed && !conclusion_meets_polarity
                              ? ComplianceStatus::Violated
                              : ComplianceStatus::Satisfied;
          break;
        case Modality::Permission:
          report.status = ComplianceStatus::PermissionGranted;
          break;
        case Modality::Reason:
          report.status = defeaters.count(conclusion)
                              ? ComplianceStatus::NotApplicable
                              : ComplianceStatus::ReasonGenerated;
          break;
      }
      break;
  }
  return report;
}

}  // namespace normlog
