#include "normlog/schema.hpp"

#include <utility>

#include "normlog/errors.hpp"

namespace normlog {

namespace {

// Records every symbol occurrence, rejecting reuse at a different arity
// and names used both as predicate and as constant metavariable.
struct Inventory {
  std::map<std::string, int> meta_preds;
  std::set<std::string> meta_consts;
  std::map<std::string, int> concrete_preds;

  void add_pred(const Predicate& p, int arity) {
    auto& table = p.meta ? meta_preds : concrete_preds;
    auto [it, inserted] = table.emplace(p.name, arity);
    if (!inserted && it->second != arity)
      throw arity_error("'" + p.text() + "' used with arity " +
                        std::to_string(it->second) + " and " +
                        std::to_string(arity));
    if (p.meta && meta_consts.count(p.name))
      throw config_error("'?" + p.name +
                         "' used both as predicate and as constant metavariable");
  }

  void add_term(const Term& t) {
    if (t.kind != Term::Kind::Meta) return;
    if (meta_preds.count(t.name))
      throw config_error("'?" + t.name +
                         "' used both as predicate and as constant metavariable");
    meta_consts.insert(t.name);
  }

  void scan(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        add_pred(f.pred(), static_cast<int>(f.args().size()));
        for (const Term& t : f.args()) add_term(t);
        break;
      case Formula::Kind::Equality:
        add_term(f.lhs());
        add_term(f.rhs());
        break;
      default:
        for (const Formula& part : f.parts()) scan(part);
        break;
    }
  }
};

}  // namespace

Inference::Inference(std::vector<Formula> prem, Formula concl)
    : premises(std::move(prem)), conclusion(std::move(concl)) {
  Inventory inv;
  for (const Formula& p : premises) {
    if (!p.closed()) throw config_error("inference premise not closed: " + render(p));
    if (!p.concrete())
      throw config_error("inference premise contains metavariables: " + render(p));
    inv.scan(p);
  }
  if (!conclusion.closed())
    throw config_error("inference conclusion not closed: " + render(conclusion));
  if (!conclusion.concrete())
    throw config_error("inference conclusion contains metavariables: " +
                       render(conclusion));
  inv.scan(conclusion);
}

Schema::Schema(std::vector<Formula> prem, Formula concl)
    : premises_(std::move(prem)), conclusion_(std::move(concl)) {
  Inventory inv;
  for (const Formula& p : premises_) {
    if (!p.closed()) throw config_error("schema premise not closed: " + render(p));
    inv.scan(p);
  }
  if (!conclusion_.closed())
    throw config_error("schema conclusion not closed: " + render(conclusion_));
  inv.scan(conclusion_);
  predicate_metavars_ = std::move(inv.meta_preds);
  constant_metavars_ = std::move(inv.meta_consts);
}

bool Substitution::covers(const Schema& schema) const {
  for (const auto& [name, arity] : schema.predicate_metavars()) {
    (void)arity;
    if (!predicates.count(name)) return false;
  }
  for (const std::string& name : schema.constant_metavars())
    if (!constants.count(name)) return false;
  return true;
}

std::string Substitution::text() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, target] : predicates) {
    if (!first) out += ", ";
    first = false;
    out += "?" + name + " -> " + target;
  }
  for (const auto& [name, target] : constants) {
    if (!first) out += ", ";
    first = false;
    out += "?" + name + " -> " + target;
  }
  return out + "}";
}

namespace {

Term substitute_term(const Term& t, const Substitution& sub) {
  if (t.kind != Term::Kind::Meta) return t;
  auto it = sub.constants.find(t.name);
  if (it == sub.constants.end())
    throw substitution_error("metavariable '?" + t.name + "' not covered");
  return Term::constant(it->second);
}

Formula substitute(const Formula& f, const Substitution& sub) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      Predicate p = f.pred();
      if (p.meta) {
        auto it = sub.predicates.find(p.name);
        if (it == sub.predicates.end())
          throw substitution_error("metavariable '?" + p.name + "' not covered");
        p = Predicate{it->second, false};
      }
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& t : f.args()) args.push_back(substitute_term(t, sub));
      return Formula::atom(std::move(p), std::move(args));
    }
    case Formula::Kind::Equality:
      return Formula::equality(substitute_term(f.lhs(), sub),
                               substitute_term(f.rhs(), sub));
    case Formula::Kind::Negation:
      return Formula::negation(substitute(f.body(), sub));
    case Formula::Kind::Conjunction:
    case Formula::Kind::Disjunction: {
      std::vector<Formula> parts;
      parts.reserve(f.parts().size());
      for (const Formula& part : f.parts()) parts.push_back(substitute(part, sub));
      return f.kind() == Formula::Kind::Conjunction
                 ? Formula::conjunction(std::move(parts))
                 : Formula::disjunction(std::move(parts));
    }
    case Formula::Kind::Implication:
      return Formula::implication(substitute(f.antecedent(), sub),
                                  substitute(f.consequent(), sub));
    case Formula::Kind::Existential:
      return Formula::existential(f.bound_var(), substitute(f.body(), sub));
  }
  throw error("unreachable formula kind");
}

}  // namespace

Inference apply_substitution(const Schema& schema, const Substitution& sub) {
  std::vector<Formula> premises;
  premises.reserve(schema.premises().size());
  for (const Formula& p : schema.premises()) premises.push_back(substitute(p, sub));
  Formula conclusion = substitute(schema.conclusion(), sub);
  try {
    return Inference(std::move(premises), std::move(conclusion));
  } catch (const arity_error& e) {
    throw substitution_error(std::string("substitution causes arity clash: ") +
                             e.what());
  }
}

std::string render(const Schema& schema) {
  std::string out;
  for (std::size_t i = 0; i < schema.premises().size(); ++i) {
    if (i) out += ", ";
    out += render(schema.premises()[i]);
  }
  out += " / ";
  out += render(schema.conclusion());
  return out;
}

std::string render(const Inference& inference) {
  std::string out;
  for (std::size_t i = 0; i < inference.premises.size(); ++i) {
    if (i) out += ", ";
    out += render(inference.premises[i]);
  }
  out += " / ";
  out += render(inference.conclusion);
  return out;
}

}  // namespace normlog
