#include "normlog/kb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "normlog/entail.hpp"
#include "normlog/errors.hpp"
#include "normlog/parser.hpp"

namespace normlog {

namespace {

// Rules and defaults may use at most one free variable, the slot.
std::optional<std::string> extract_slot(const Formula& antecedent,
                                        const Formula& consequent,
                                        const char* what) {
  std::set<std::string> vars = antecedent.free_variables();
  for (const std::string& v : consequent.free_variables()) vars.insert(v);
  if (vars.empty()) return std::nullopt;
  if (vars.size() > 1) {
    std::string names;
    for (const std::string& v : vars) names += (names.empty() ? "" : ", ") + v;
    throw config_error(std::string(what) + " uses more than one slot variable: " +
                       names);
  }
  return *vars.begin();
}

void collect_constants(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f.args())
        if (t.kind == Term::Kind::Constant) out.insert(t.name);
      break;
    case Formula::Kind::Equality:
      for (const Term* t : {&f.lhs(), &f.rhs()})
        if (t->kind == Term::Kind::Constant) out.insert(t->name);
      break;
    default:
      for (const Formula& part : f.parts()) collect_constants(part, out);
      break;
  }
}

}  // namespace

StrictRule::StrictRule(Formula ante, Formula cons)
    : antecedent(std::move(ante)), consequent(std::move(cons)) {
  if (!antecedent.concrete() || !consequent.concrete())
    throw config_error("strict rule contains metavariables: " + render(as_implication()));
  slot = extract_slot(antecedent, consequent, "strict rule");
}

Formula StrictRule::as_implication() const {
  return Formula::implication(antecedent, consequent);
}

StrictRule StrictRule::ground(const std::string& constant) const {
  if (!slot) return *this;
  const Term c = Term::constant(constant);
  return StrictRule(substitute_variable(antecedent, *slot, c),
                    substitute_variable(consequent, *slot, c));
}

DefeasibleConditional::DefeasibleConditional(Formula ante, Formula cons,
                                             std::optional<double> prob)
    : antecedent(std::move(ante)), consequent(std::move(cons)), probability(prob) {
  if (!antecedent.concrete() || !consequent.concrete())
    throw config_error("defeasible conditional contains metavariables: " + text());
  slot = extract_slot(antecedent, consequent, "defeasible conditional");
  if (probability && (*probability < 0.0 || *probability > 1.0))
    throw config_error("defeasible probability outside [0,1]: " +
                       std::to_string(*probability));
}

std::string DefeasibleConditional::text() const {
  std::string out = render(antecedent) + " ~> " + render(consequent);
  if (probability) {
    std::ostringstream p;
    p << *probability;
    out += " [" + p.str() + "]";
  }
  return out;
}

ThresholdConfig::ThresholdConfig(double eps) : epsilon(eps) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw config_error("epsilon must lie in (0,1), got " + std::to_string(eps));
}

namespace {

// Greedily shrinks facts+rules to a still-unsatisfiable core; a short
// witness beats reporting the whole base.
std::string inconsistency_witness(const std::set<Formula>& facts,
                                  const std::vector<StrictRule>& rules,
                                  const Statistics& stats,
                                  const EnumerationLimits& limits) {
  std::vector<Formula> fact_list(facts.begin(), facts.end());
  std::vector<bool> fact_keep(fact_list.size(), true);
  std::vector<bool> rule_keep(rules.size(), true);

  const auto unsat = [&]() {
    std::set<Formula> f;
    std::vector<StrictRule> r;
    for (std::size_t i = 0; i < fact_list.size(); ++i)
      if (fact_keep[i]) f.insert(fact_list[i]);
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (rule_keep[i]) r.push_back(rules[i]);
    KnowledgeBase probe(std::move(f), std::move(r), {}, stats, limits);
    return !satisfiable(probe, {});
  };

  for (std::size_t i = 0; i < fact_list.size(); ++i) {
    fact_keep[i] = false;
    if (!unsat()) fact_keep[i] = true;
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    rule_keep[i] = false;
    if (!unsat()) rule_keep[i] = true;
  }

  std::string out;
  for (std::size_t i = 0; i < fact_list.size(); ++i)
    if (fact_keep[i]) out += (out.empty() ? "" : "; ") + render(fact_list[i]);
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (rule_keep[i])
      out += (out.empty() ? "" : "; ") + render(rules[i].as_implication());
  return out;
}

// Consistency probes reuse the constructor; this flag suppresses the
// recursive check while a probe is alive.
thread_local bool g_probing = false;

struct ProbeGuard {
  bool active;
  explicit ProbeGuard(bool on) : active(g_probing) { g_probing = on; }
  ~ProbeGuard() { g_probing = active; }
};

}  // namespace

KnowledgeBase::KnowledgeBase(std::set<Formula> facts, std::vector<StrictRule> rules,
                             std::vector<DefeasibleConditional> defaults,
                             Statistics stats, EnumerationLimits limits)
    : facts_(std::move(facts)), rules_(std::move(rules)),
      defaults_(std::move(defaults)), stats_(std::move(stats)), limits_(limits) {
  for (const Formula& f : facts_) {
    if (!f.closed()) throw config_error("fact not closed: " + render(f));
    if (!f.concrete())
      throw config_error("fact contains metavariables: " + render(f));
  }
  for (const auto& [key, p] : stats_)
    if (p < 0.0 || p > 1.0)
      throw config_error("statistic " + key.text() + " outside [0,1]");
  if (g_probing) return;
  ProbeGuard guard(true);
  if (!satisfiable(*this, {})) {
    const std::string witness =
        inconsistency_witness(facts_, rules_, stats_, limits_);
    throw inconsistency_error(
        "knowledge base is classically inconsistent; conflicting core: " + witness,
        witness);
  }
}

std::set<std::string> KnowledgeBase::constants() const {
  std::set<std::string> out;
  for (const Formula& f : facts_) collect_constants(f, out);
  for (const StrictRule& r : rules_) {
    collect_constants(r.antecedent, out);
    collect_constants(r.consequent, out);
  }
  for (const DefeasibleConditional& d : defaults_) {
    collect_constants(d.antecedent, out);
    collect_constants(d.consequent, out);
  }
  return out;
}

std::string KnowledgeBase::dump() const {
  std::string out;
  for (const Formula& f : facts_) out += "fact " + render(f) + ".\n";
  for (const StrictRule& r : rules_)
    out += "rule " + render(r.antecedent) + " -> " + render(r.consequent) + ".\n";
  for (const DefeasibleConditional& d : defaults_)
    out += "default " + d.text() + ".\n";
  for (const auto& [key, p] : stats_) {
    std::ostringstream line;
    line << "stat " << key.text() << " = " << p << ".\n";
    out += line.str();
  }
  return out;
}

namespace {

std::string strip(std::string s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), is_space));
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

[[noreturn]] void line_fail(int line_no, const std::string& message) {
  throw config_error("knowledge base line " + std::to_string(line_no) + ": " +
                     message);
}

std::string expect_period(std::string payload, int line_no) {
  payload = strip(std::move(payload));
  if (payload.empty() || payload.back() != '.')
    line_fail(line_no, "missing terminating '.'");
  payload.pop_back();
  return strip(std::move(payload));
}

double parse_probability(const std::string& text, int line_no) {
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    if (p < 0.0 || p > 1.0) line_fail(line_no, "probability outside [0,1]: " + text);
    return p;
  } catch (const std::invalid_argument&) {
    line_fail(line_no, "malformed probability: '" + text + "'");
  } catch (const std::out_of_range&) {
    line_fail(line_no, "malformed probability: '" + text + "'");
  }
}

}  // namespace

KnowledgeBase KnowledgeBase::load(std::istream& in, EnumerationLimits limits) {
  std::set<Formula> facts;
  std::vector<StrictRule> rules;
  std::vector<DefeasibleConditional> defaults;
  Statistics stats;

  const ParseOptions rule_options{.allow_meta = false, .allow_free = true};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;

    const auto space = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, space);
    std::string payload =
        space == std::string::npos ? std::string() : strip(line.substr(space));

    try {
      if (keyword == "fact") {
        facts.insert(parse_formula(expect_period(payload, line_no)));
      } else if (keyword == "rule") {
        Formula f = parse_formula(expect_period(payload, line_no), rule_options);
        if (f.kind() != Formula::Kind::Implication)
          line_fail(line_no, "rule must be '<formula> -> <formula>'");
        rules.emplace_back(f.antecedent(), f.consequent());
      } else if (keyword == "default") {
        std::string body = expect_period(payload, line_no);
        std::optional<double> prob;
        if (!body.empty() && body.back() == ']') {
          const auto open = body.rfind('[');
          if (open == std::string::npos)
            line_fail(line_no, "unmatched ']' in default");
          prob = parse_probability(strip(body.substr(open + 1,
                                                     body.size() - open - 2)),
                                   line_no);
          body = strip(body.substr(0, open));
        }
        const auto arrow = body.find("~>");
        if (arrow == std::string::npos)
          line_fail(line_no, "default must be '<formula> ~> <formula> [<prob>]'");
        defaults.emplace_back(parse_formula(strip(body.substr(0, arrow)), rule_options),
                              parse_formula(strip(body.substr(arrow + 2)), rule_options),
                              prob);
      } else if (keyword == "stat") {
        std::string body = expect_period(payload, line_no);
        const auto eq = body.find('=');
        if (eq == std::string::npos)
          line_fail(line_no, "stat must be '<pred>|<pred> = <prob>'");
        const std::string descriptor = strip(body.substr(0, eq));
        const auto pipe = descriptor.find('|');
        if (pipe == std::string::npos)
          line_fail(line_no, "stat descriptor must be '<pred>|<pred>'");
        StatKey key{strip(descriptor.substr(0, pipe)),
                    strip(descriptor.substr(pipe + 1))};
        if (key.consequent.empty() || key.antecedent.empty())
          line_fail(line_no, "stat descriptor must be '<pred>|<pred>'");
        const double p = parse_probability(strip(body.substr(eq + 1)), line_no);
        if (auto [it, inserted] = stats.emplace(key, p); !inserted && it->second != p)
          line_fail(line_no, "conflicting probabilities for " + key.text());
      } else {
        line_fail(line_no, "unknown directive '" + keyword + "'");
      }
    } catch (const parse_error& e) {
      line_fail(line_no, e.what());
    }
  }
  return KnowledgeBase(std::move(facts), std::move(rules), std::move(defaults),
                       std::move(stats), limits);
}

KnowledgeBase KnowledgeBase::load_file(const std::string& path,
                                       EnumerationLimits limits) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open knowledge base '" + path + "'");
  return load(in, limits);
}

}  // namespace normlog
