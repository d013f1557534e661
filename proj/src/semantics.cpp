#include "normlog/semantics.hpp"

#include <cmath>

#include "normlog/errors.hpp"

namespace normlog {

void Vocabulary::add(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const std::string name = f.pred().text();
      const int arity = static_cast<int>(f.args().size());
      auto [it, inserted] = predicates.emplace(name, arity);
      if (!inserted && it->second != arity)
        throw arity_error("'" + name + "' used with arity " +
                          std::to_string(it->second) + " and " +
                          std::to_string(arity));
      for (const Term& t : f.args())
        if (t.kind != Term::Kind::Variable) constants.insert(t.text());
      break;
    }
    case Formula::Kind::Equality:
      for (const Term* t : {&f.lhs(), &f.rhs()})
        if (t->kind != Term::Kind::Variable) constants.insert(t->text());
      break;
    default:
      for (const Formula& part : f.parts()) add(part);
      break;
  }
}

bool Interpretation::contains(const std::string& pred,
                              const std::vector<int>& tuple) const {
  const std::vector<bool>& bits = extensions.at(pred);
  std::size_t index = 0;
  for (int d : tuple) index = index * static_cast<std::size_t>(domain_size) +
                              static_cast<std::size_t>(d);
  return bits[index];
}

namespace {

int denote(const Term& t, const Interpretation& interp, const Env& env) {
  if (t.kind == Term::Kind::Variable) {
    auto it = env.find(t.name);
    if (it == env.end())
      throw error("unbound variable '" + t.name + "' during evaluation");
    return it->second;
  }
  auto it = interp.constants.find(t.text());
  if (it == interp.constants.end())
    throw error("constant '" + t.text() + "' missing from interpretation");
  return it->second;
}

}  // namespace

bool eval(const Formula& f, const Interpretation& interp, Env& env) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<int> tuple;
      tuple.reserve(f.args().size());
      for (const Term& t : f.args()) tuple.push_back(denote(t, interp, env));
      return interp.contains(f.pred().text(), tuple);
    }
    case Formula::Kind::Equality:
      return denote(f.lhs(), interp, env) == denote(f.rhs(), interp, env);
    case Formula::Kind::Negation:
      return !eval(f.body(), interp, env);
    case Formula::Kind::Conjunction:
      for (const Formula& part : f.parts())
        if (!eval(part, interp, env)) return false;
      return true;
    case Formula::Kind::Disjunction:
      for (const Formula& part : f.parts())
        if (eval(part, interp, env)) return true;
      return false;
    case Formula::Kind::Implication:
      return !eval(f.antecedent(), interp, env) || eval(f.consequent(), interp, env);
    case Formula::Kind::Existential: {
      auto saved = env.find(f.bound_var());
      const bool had = saved != env.end();
      const int old = had ? saved->second : 0;
      for (int d = 0; d < interp.domain_size; ++d) {
        env[f.bound_var()] = d;
        const bool hit = eval(f.body(), interp, env);
        if (had)
          env[f.bound_var()] = old;
        else
          env.erase(f.bound_var());
        if (hit) return true;
      }
      return false;
    }
  }
  throw error("unreachable formula kind");
}

bool eval_closed(const Formula& f, const Interpretation& interp) {
  Env env;
  return eval(f, interp, env);
}

namespace {

std::size_t tuple_count(int domain_size, int arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(domain_size);
  return n;
}

}  // namespace

long double interpretation_count(const Vocabulary& vocab, int bound) {
  long double total = 0;
  for (int n = 1; n <= bound; ++n) {
    long double size_total = std::pow(static_cast<long double>(n),
                                      static_cast<long double>(vocab.constants.size()));
    for (const auto& [name, arity] : vocab.predicates) {
      (void)name;
      size_total *= std::pow(2.0L, static_cast<long double>(tuple_count(n, arity)));
    }
    total += size_total;
  }
  return total;
}

bool for_each_interpretation(const Vocabulary& vocab, int bound, long long cap,
                             const std::function<bool(const Interpretation&)>& visit) {
  if (bound < 1) throw config_error("domain bound must be >= 1");
  const long double count = interpretation_count(vocab, bound);
  if (count > static_cast<long double>(cap))
    throw budget_error("interpretation budget exceeded: " +
                       std::to_string(static_cast<double>(count)) +
                       " interpretations, cap " + std::to_string(cap));

  for (int n = 1; n <= bound; ++n) {
    Interpretation interp;
    interp.domain_size = n;
    for (const std::string& c : vocab.constants) interp.constants[c] = 0;
    for (const auto& [name, arity] : vocab.predicates)
      interp.extensions[name] = std::vector<bool>(tuple_count(n, arity), false);

    // Odometer over constant denotations, then over extension bitsets.
    while (true) {
      while (true) {
        if (!visit(interp)) return false;
        // Advance extensions like a binary counter.
        bool carried = true;
        for (auto& [name, bits] : interp.extensions) {
          (void)name;
          for (std::size_t i = 0; i < bits.size() && carried; ++i) {
            if (!bits[i]) {
              bits[i] = true;
              carried = false;
            } else {
              bits[i] = false;
            }
          }
          if (!carried) break;
        }
        if (carried) break;  // all extensions wrapped to zero
      }
      bool carried = true;
      for (auto& [name, d] : interp.constants) {
        (void)name;
        if (d + 1 < n) {
          ++d;
          carried = false;
          break;
        }
        d = 0;
      }
      if (carried) break;
    }
  }
  return true;
}

bool truth_table_ready(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f.args())
        if (t.kind == Term::Kind::Variable) return false;
      return true;
    case Formula::Kind::Equality:
    case Formula::Kind::Existential:
      return false;
    default:
      for (const Formula& part : f.parts())
        if (!truth_table_ready(part)) return false;
      return true;
  }
}

void collect_atom_keys(const Formula& f, std::set<std::string>& keys) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      keys.insert(render(f));
      break;
    case Formula::Kind::Equality:
      throw error("equality has no truth-table key");
    default:
      for (const Formula& part : f.parts()) collect_atom_keys(part, keys);
      break;
  }
}

bool eval_ground(const Formula& f, const std::map<std::string, bool>& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return assignment.at(render(f));
    case Formula::Kind::Negation:
      return !eval_ground(f.body(), assignment);
    case Formula::Kind::Conjunction:
      for (const Formula& part : f.parts())
        if (!eval_ground(part, assignment)) return false;
      return true;
    case Formula::Kind::Disjunction:
      for (const Formula& part : f.parts())
        if (eval_ground(part, assignment)) return true;
      return false;
    case Formula::Kind::Implication:
      return !eval_ground(f.antecedent(), assignment) ||
             eval_ground(f.consequent(), assignment);
    default:
      throw error("formula not ground-propositional");
  }
}

}  // namespace normlog
