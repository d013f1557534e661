#include "normlog/verdict.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "normlog/errors.hpp"
#include "normlog/parser.hpp"

namespace normlog {

std::string Verdict::text() const {
  switch (kind) {
    case VerdictKind::ObligedToBelieve:
      return "obliged to believe " + render(*target);
    case VerdictKind::ProhibitedCombination:
      return "prohibited to believe " + render(*antecedent) +
             " without believing " + render(*target) +
             (breached ? " (breached)" : " (respected)");
    case VerdictKind::ProhibitedToBelieve:
      return "prohibited to believe " + render(*target);
    case VerdictKind::LicensedToInfer:
      return "licensed to infer " + render(*target);
    case VerdictKind::NoVerdict:
      return "no verdict (" + provenance + ")";
  }
  return "?";
}

Verdict extended_bridge_verdict(const ValidityReport& validity,
                                const MatchResult& apprehension,
                                const std::vector<Formula>& premises,
                                const Formula& conclusion, const BeliefState& bs) {
  Verdict v;
  if (!validity.usable()) {
    v.provenance = "schema not valid: " + validity.text();
    return v;
  }
  if (!apprehension.matched) {
    v.provenance = "not transparent: " + apprehension.reason;
    return v;
  }
  for (const Formula& p : premises) {
    if (!bs.believes(p)) {
      v.provenance = "premise not believed: attitude to " + render(p) + " is " +
                     attitude_name(bs.attitude(p));
      return v;
    }
  }
  v.kind = VerdictKind::ObligedToBelieve;
  v.target = conclusion;
  v.provenance = "valid schema apprehended (" +
                 apprehension.substitution.text() + "), premises believed";
  return v;
}

Verdict nonmr_verdict(const KnowledgeBase& kb, const Formula& a, const Formula& x,
                      const BeliefState& bs, const std::set<Formula>& available_info,
                      NonMRVariant variant, const ThresholdConfig& cfg) {
  Verdict v;

  const DefeasibleResult entailment = defeasible_entails(kb, a, x, cfg);
  if (!entailment.holds()) {
    v.provenance = "defeasible entailment fails: " + entailment.provenance;
    return v;
  }
  // Transparency prerequisite: the fired default or statistic must be
  // nameable.
  if (entailment.provenance.empty()) {
    v.provenance = "defeasible entailment has no nameable provenance";
    return v;
  }
  if (classical_entails(kb, available_info, Formula::negation(x))) {
    v.provenance = "available information indicates " + render(Formula::negation(x));
    return v;
  }

  if (variant == NonMRVariant::Plus) {
    if (!bs.believes(a)) {
      v.provenance = "antecedent " + render(a) + " not believed";
      return v;
    }
    v.kind = VerdictKind::ObligedToBelieve;
    v.target = x;
    v.provenance = entailment.provenance;
    return v;
  }
  v.kind = VerdictKind::ProhibitedCombination;
  v.antecedent = a;
  v.target = x;
  v.breached = bs.believes(a) && !bs.believes(x);
  v.provenance = entailment.provenance;
  return v;
}

EvidenceTag make_evidence(const std::string& tag, const std::string& arg) {
  std::string canonical = arg;
  try {
    canonical = render(parse_formula(arg));
  } catch (const parse_error&) {
    // Not a formula; keep the raw spelling (e.g. a bare source name).
  }
  return EvidenceTag{tag, canonical};
}

EvidenceTag parse_evidence(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw config_error("evidence must be written tag(arg): '" + text + "'");
  const auto is_space = [](unsigned char c) { return std::isspace(c); };
  std::string tag = text.substr(0, open);
  tag.erase(tag.begin(), std::find_if_not(tag.begin(), tag.end(), is_space));
  while (!tag.empty() && is_space(static_cast<unsigned char>(tag.back())))
    tag.pop_back();
  if (tag.empty()) throw config_error("evidence tag missing in '" + text + "'");
  std::string arg = text.substr(open + 1, text.size() - open - 2);
  arg.erase(arg.begin(), std::find_if_not(arg.begin(), arg.end(), is_space));
  while (!arg.empty() && is_space(static_cast<unsigned char>(arg.back())))
    arg.pop_back();
  return make_evidence(tag, arg);
}

void RuleSystem::add(NormRule rule) {
  for (const NormRule& r : rules_)
    if (r.name == rule.name)
      throw config_error("duplicate rule name '" + rule.name + "'");
  rules_.push_back(std::move(rule));
}

namespace {

// Splits on '&' at zero parenthesis depth.
std::vector<std::string> split_conditions(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '&' && depth == 0) {
      out.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  out.push_back(current);
  return out;
}

}  // namespace

RuleSystem RuleSystem::load(std::istream& in) {
  RuleSystem rs;
  std::string line;
  int line_no = 0;
  int count = 0;
  const auto is_space = [](unsigned char c) { return std::isspace(c); };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(line.begin(), std::find_if_not(line.begin(), line.end(), is_space));
    while (!line.empty() && is_space(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (line.empty()) continue;

    const auto fail = [&](const std::string& message) -> void {
      throw config_error("rule system line " + std::to_string(line_no) + ": " +
                         message);
    };
    if (line.back() != '.') fail("missing terminating '.'");
    line.pop_back();
    if (line.rfind("when ", 0) != 0) fail("rule must start with 'when'");
    const auto then_pos = line.find(" then ");
    if (then_pos == std::string::npos) fail("rule is missing 'then'");

    NormRule rule;
    rule.name = "rule" + std::to_string(++count);
    for (const std::string& cond : split_conditions(line.substr(5, then_pos - 5))) {
      std::string trimmed = cond;
      trimmed.erase(trimmed.begin(),
                    std::find_if_not(trimmed.begin(), trimmed.end(), is_space));
      while (!trimmed.empty() && is_space(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
      try {
        rule.conditions.push_back(parse_evidence(trimmed));
      } catch (const config_error& e) {
        fail(e.what());
      }
    }

    std::string action = line.substr(then_pos + 6);
    action.erase(action.begin(),
                 std::find_if_not(action.begin(), action.end(), is_space));
    const auto space = action.find_first_of(" \t");
    if (space == std::string::npos) fail("expected 'infer|oblige|prohibit <formula>'");
    const std::string verb = action.substr(0, space);
    if (verb == "infer")
      rule.action = RuleAction::Infer;
    else if (verb == "oblige")
      rule.action = RuleAction::Oblige;
    else if (verb == "prohibit")
      rule.action = RuleAction::Prohibit;
    else
      fail("unknown action '" + verb + "'");
    try {
      rule.target = parse_formula(action.substr(space));
    } catch (const parse_error& e) {
      fail(e.what());
    }
    rs.add(std::move(rule));
  }
  return rs;
}

RuleSystem RuleSystem::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open rule system '" + path + "'");
  return load(in);
}

namespace {

bool contradicts(const Formula& a, const Formula& b) {
  if (a.kind() == Formula::Kind::Negation && a.body() == b) return true;
  if (b.kind() == Formula::Kind::Negation && b.body() == a) return true;
  return false;
}

}  // namespace

RuleOutcome apply_rule_system(const RuleSystem& rs,
                              const std::set<EvidenceTag>& evidence) {
  RuleOutcome outcome;
  struct Fired {
    const NormRule* rule;
    bool suppressed = false;
  };
  std::vector<Fired> fired;
  for (const NormRule& rule : rs.rules()) {
    const bool applicable =
        std::all_of(rule.conditions.begin(), rule.conditions.end(),
                    [&](const EvidenceTag& c) { return evidence.count(c) > 0; });
    if (applicable) fired.push_back(Fired{&rule});
  }

  for (std::size_t i = 0; i < fired.size(); ++i)
    for (std::size_t j = i + 1; j < fired.size(); ++j) {
      if (fired[i].rule->action != RuleAction::Infer ||
          fired[j].rule->action != RuleAction::Infer)
        continue;
      if (contradicts(fired[i].rule->target, fired[j].rule->target)) {
        fired[i].suppressed = fired[j].suppressed = true;
        outcome.conflicts.push_back(
            fired[i].rule->name + " infers " + render(fired[i].rule->target) +
            " but " + fired[j].rule->name + " infers " +
            render(fired[j].rule->target) + "; both suppressed");
      }
    }

  for (const Fired& f : fired) {
    if (f.suppressed) continue;
    Verdict v;
    switch (f.rule->action) {
      case RuleAction::Infer: v.kind = VerdictKind::LicensedToInfer; break;
      case RuleAction::Oblige: v.kind = VerdictKind::ObligedToBelieve; break;
      case RuleAction::Prohibit: v.kind = VerdictKind::ProhibitedToBelieve; break;
    }
    v.target = f.rule->target;
    std::string conditions;
    for (const EvidenceTag& c : f.rule->conditions)
      conditions += (conditions.empty() ? "" : " & ") + c.text();
    v.provenance = f.rule->name + ": " + conditions;
    outcome.verdicts.push_back(std::move(v));
  }
  return outcome;
}

}  // namespace normlog
