#include "normlog/entail.hpp"

#include <algorithm>
#include <sstream>

#include "normlog/errors.hpp"

namespace normlog {

namespace {

void require_query_formula(const Formula& f, const char* what) {
  if (!f.closed()) throw config_error(std::string(what) + " not closed: " + render(f));
  if (!f.concrete())
    throw config_error(std::string(what) + " contains metavariables: " + render(f));
}

bool rule_truth_table_ready(const StrictRule& r) {
  return !r.slot && truth_table_ready(r.antecedent) &&
         truth_table_ready(r.consequent);
}

// True iff some interpretation satisfies facts, strict rules and extra,
// and additionally falsifies must_fail when given.  Uses a truth table
// over ground atoms when the query never touches quantifiers, equality
// or rule slots, otherwise enumerates models up to the domain bound.
bool exists_model_where(const KnowledgeBase& kb, const std::set<Formula>& extra,
                        const Formula* must_fail) {
  std::vector<const Formula*> hard;
  for (const Formula& f : kb.facts()) hard.push_back(&f);
  for (const Formula& f : extra) hard.push_back(&f);

  bool table_ready = std::all_of(hard.begin(), hard.end(), [](const Formula* f) {
    return truth_table_ready(*f);
  });
  table_ready = table_ready &&
                std::all_of(kb.rules().begin(), kb.rules().end(),
                            rule_truth_table_ready) &&
                (!must_fail || truth_table_ready(*must_fail));

  const EnumerationLimits& limits = kb.limits();
  if (table_ready) {
    std::set<std::string> keys;
    for (const Formula* f : hard) collect_atom_keys(*f, keys);
    for (const StrictRule& r : kb.rules()) {
      collect_atom_keys(r.antecedent, keys);
      collect_atom_keys(r.consequent, keys);
    }
    if (must_fail) collect_atom_keys(*must_fail, keys);
    std::vector<std::string> atoms(keys.begin(), keys.end());
    if (atoms.size() >= 8 * sizeof(unsigned long long) ||
        (1ULL << atoms.size()) >
            static_cast<unsigned long long>(limits.interpretation_cap))
      throw budget_error("truth table over " + std::to_string(atoms.size()) +
                         " atoms exceeds cap " +
                         std::to_string(limits.interpretation_cap));
    for (unsigned long long mask = 0; mask < (1ULL << atoms.size()); ++mask) {
      std::map<std::string, bool> row;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        row[atoms[i]] = (mask >> i) & 1ULL;
      const bool satisfied =
          std::all_of(hard.begin(), hard.end(),
                      [&](const Formula* f) { return eval_ground(*f, row); }) &&
          std::all_of(kb.rules().begin(), kb.rules().end(),
                      [&](const StrictRule& r) {
                        return !eval_ground(r.antecedent, row) ||
                               eval_ground(r.consequent, row);
                      });
      if (satisfied && (!must_fail || !eval_ground(*must_fail, row))) return true;
    }
    return false;
  }

  Vocabulary vocab;
  for (const Formula* f : hard) vocab.add(*f);
  for (const StrictRule& r : kb.rules()) {
    vocab.add(r.antecedent);
    vocab.add(r.consequent);
  }
  if (must_fail) vocab.add(*must_fail);

  bool found = false;
  for_each_interpretation(
      vocab, limits.domain_bound, limits.interpretation_cap,
      [&](const Interpretation& interp) {
        for (const Formula* f : hard)
          if (!eval_closed(*f, interp)) return true;
        for (const StrictRule& r : kb.rules()) {
          if (!r.slot) {
            if (eval_closed(r.antecedent, interp) &&
                !eval_closed(r.consequent, interp))
              return true;
            continue;
          }
          for (int d = 0; d < interp.domain_size; ++d) {
            Env env{{*r.slot, d}};
            if (eval(r.antecedent, interp, env)) {
              env = Env{{*r.slot, d}};
              if (!eval(r.consequent, interp, env)) return true;
            }
          }
        }
        if (must_fail && eval_closed(*must_fail, interp)) return true;
        found = true;
        return false;
      });
  return found;
}

}  // namespace

bool classical_entails(const KnowledgeBase& kb, const Formula& goal) {
  return classical_entails(kb, {}, goal);
}

bool classical_entails(const KnowledgeBase& kb, const std::set<Formula>& extra,
                       const Formula& goal) {
  require_query_formula(goal, "entailment goal");
  for (const Formula& f : extra) require_query_formula(f, "assumption");
  return !exists_model_where(kb, extra, &goal);
}

bool satisfiable(const KnowledgeBase& kb, const std::set<Formula>& extra) {
  for (const Formula& f : extra) require_query_formula(f, "assumption");
  return exists_model_where(kb, extra, nullptr);
}

namespace {

std::string format_prob(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

// The descriptor of an atom pair about one individual: white(s) given
// swan(s) reads as white|swan.
std::optional<StatKey> descriptor(const Formula& a, const Formula& x) {
  if (a.kind() != Formula::Kind::Atom || x.kind() != Formula::Kind::Atom)
    return std::nullopt;
  if (a.args() != x.args()) return std::nullopt;
  return StatKey{x.pred().name, a.pred().name};
}

}  // namespace

DefeasibleResult defeasible_entails(const KnowledgeBase& kb, const Formula& a,
                                    const Formula& x, const ThresholdConfig& cfg) {
  require_query_formula(a, "defeasible antecedent");
  require_query_formula(x, "defeasible consequent");

  std::set<std::string> universe = kb.constants();
  struct Collect {
    static void constants(const Formula& f, std::set<std::string>& out) {
      Vocabulary v;
      v.add(f);
      for (const std::string& c : v.constants) out.insert(c);
    }
  };
  Collect::constants(a, universe);
  Collect::constants(x, universe);

  for (std::size_t i = 0; i < kb.defaults().size(); ++i) {
    const DefeasibleConditional& d = kb.defaults()[i];
    if (!d.slot) {
      if (d.antecedent == a && d.consequent == x)
        return DefeasibleResult{DefeasibleStatus::HoldsSyntactic,
                                "default " + std::to_string(i + 1) + ": " + d.text()};
      continue;
    }
    for (const std::string& c : universe) {
      const Term t = Term::constant(c);
      if (substitute_variable(d.antecedent, *d.slot, t) == a &&
          substitute_variable(d.consequent, *d.slot, t) == x)
        return DefeasibleResult{DefeasibleStatus::HoldsSyntactic,
                                "default " + std::to_string(i + 1) + ": " + d.text() +
                                    " at " + c};
    }
  }

  if (auto key = descriptor(a, x)) {
    auto it = kb.stats().find(*key);
    if (it != kb.stats().end()) {
      const double threshold = 1.0 - cfg.epsilon;
      if (it->second >= threshold)
        return DefeasibleResult{DefeasibleStatus::HoldsStatistical,
                                "stat " + key->text() + " = " + format_prob(it->second) +
                                    " >= " + format_prob(threshold)};
      return DefeasibleResult{DefeasibleStatus::Fails,
                              "stat " + key->text() + " = " + format_prob(it->second) +
                                  " < " + format_prob(threshold)};
    }
  }
  return DefeasibleResult{DefeasibleStatus::Fails,
                          "no matching default or statistic"};
}

InferenceTrail defeasible_infer(const KnowledgeBase& kb,
                                const std::set<Formula>& proven) {
  for (const Formula& f : proven) require_query_formula(f, "proven hypothesis");

  std::set<std::string> universe = kb.constants();
  for (const Formula& f : proven) {
    Vocabulary v;
    v.add(f);
    for (const std::string& c : v.constants) universe.insert(c);
  }

  InferenceTrail trail;
  const auto context = [&]() {
    std::set<Formula> ctx = proven;
    ctx.insert(trail.added.begin(), trail.added.end());
    return ctx;
  };

  // Every changing pass adds at least one consequent, and the ground
  // instances bound the total, so this terminates.
  const std::size_t max_instances =
      kb.defaults().size() * std::max<std::size_t>(universe.size(), 1) + 1;
  for (std::size_t pass = 1; pass <= max_instances; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < kb.defaults().size(); ++i) {
      const DefeasibleConditional& d = kb.defaults()[i];
      std::vector<std::pair<std::string, std::pair<Formula, Formula>>> instances;
      if (!d.slot) {
        instances.push_back({"", {d.antecedent, d.consequent}});
      } else {
        for (const std::string& c : universe) {
          const Term t = Term::constant(c);
          instances.push_back({c,
                               {substitute_variable(d.antecedent, *d.slot, t),
                                substitute_variable(d.consequent, *d.slot, t)}});
        }
      }
      for (const auto& [binding, inst] : instances) {
        const auto& [antecedent, consequent] = inst;
        if (trail.added.count(consequent)) continue;
        if (!classical_entails(kb, context(), antecedent)) continue;
        if (classical_entails(kb, context(), Formula::negation(consequent))) {
          trail.events.push_back(TrailEvent{static_cast<int>(pass), i, binding,
                                            consequent, false,
                                            "blocked: negation of consequent proven"});
          continue;
        }
        trail.added.insert(consequent);
        trail.events.push_back(
            TrailEvent{static_cast<int>(pass), i, binding, consequent, true, {}});
        changed = true;
      }
    }
    if (!changed) break;
  }
  return trail;
}

double bayes(double prior, double likelihood, double marginal) {
  for (const auto& [name, value] :
       {std::pair<const char*, double>{"prior", prior},
        {"likelihood", likelihood},
        {"marginal", marginal}})
    if (!(value >= 0.0) || !(value <= 1.0))
      throw probability_error(std::string(name) + " outside [0,1]: " +
                              std::to_string(value));
  if (marginal == 0.0)
    throw probability_error("undefined posterior: marginal probability is zero");
  const double joint = likelihood * prior;
  if (joint > marginal)
    throw probability_error("inconsistent probabilities: likelihood * prior = " +
                            std::to_string(joint) + " exceeds marginal " +
                            std::to_string(marginal));
  return joint / marginal;
}

bool threshold_infer(double conditional_probability, const ThresholdConfig& cfg) {
  if (!(conditional_probability >= 0.0) || !(conditional_probability <= 1.0))
    throw probability_error("conditional probability outside [0,1]: " +
                            std::to_string(conditional_probability));
  return conditional_probability >= 1.0 - cfg.epsilon;
}

std::set<Formula> permitted_closure(const std::set<Formula>& facts,
                                    const std::vector<Formula>& vocabulary,
                                    int depth, std::size_t cap) {
  if (depth < 0) throw config_error("closure depth must be >= 0");
  for (const Formula& b : vocabulary)
    if (b.kind() != Formula::Kind::Atom)
      throw config_error("closure vocabulary must consist of atoms, got: " +
                         render(b));
  std::set<Formula> current = facts;
  if (current.size() > cap)
    throw budget_error("closure cap " + std::to_string(cap) +
                       " exceeded by the initial facts");
  for (int level = 1; level <= depth; ++level) {
    std::set<Formula> next = current;
    for (const Formula& f : current) {
      std::vector<Formula> grown;
      grown.push_back(Formula::conjunction({f, f}));
      for (const Formula& b : vocabulary)
        grown.push_back(Formula::disjunction({f, b}));
      for (Formula& g : grown) {
        next.insert(std::move(g));
        if (next.size() > cap)
          throw budget_error("closure cap " + std::to_string(cap) +
                             " exceeded at depth " + std::to_string(level) +
                             "; trivial inference grows without bound");
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace normlog
