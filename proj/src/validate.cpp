#include "normlog/validate.hpp"

#include <algorithm>

#include "normlog/errors.hpp"

namespace normlog {

std::string Countermodel::text() const {
  std::string out;
  if (!propositional.empty()) {
    bool first = true;
    for (const auto& [atom, value] : propositional) {
      if (!first) out += ", ";
      first = false;
      out += atom + "=" + (value ? "true" : "false");
    }
    return out;
  }
  out = "domain size " + std::to_string(domain_size);
  for (const auto& [name, d] : constants)
    out += "; " + name + "=d" + std::to_string(d);
  for (const auto& [name, tuples] : predicates) {
    out += "; " + name + "={";
    bool first = true;
    for (const std::vector<int>& tuple : tuples) {
      if (!first) out += ", ";
      first = false;
      if (tuple.empty()) {
        out += "()";
        continue;
      }
      out += "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += "d" + std::to_string(tuple[i]);
      }
      out += ")";
    }
    out += "}";
  }
  return out;
}

std::string ValidityReport::text() const {
  switch (status) {
    case Status::Valid:
      return "valid";
    case Status::ValidUpToBound:
      return "valid up to domain size " + std::to_string(bound);
    case Status::Invalid:
      return "invalid (countermodel: " +
             (countermodel ? countermodel->text() : std::string("?")) + ")";
  }
  return "?";
}

namespace {

bool propositional_schema(const Schema& schema) {
  const auto propositional = [](const Formula& f) {
    struct Walk {
      static bool ok(const Formula& f) {
        switch (f.kind()) {
          case Formula::Kind::Atom:
            return f.args().empty();
          case Formula::Kind::Equality:
          case Formula::Kind::Existential:
            return false;
          default:
            return std::all_of(f.parts().begin(), f.parts().end(), ok);
        }
      }
    };
    return Walk::ok(f);
  };
  for (const Formula& p : schema.premises())
    if (!propositional(p)) return false;
  return propositional(schema.conclusion());
}

ValidityReport truth_table_validate(const Schema& schema, long long cap) {
  std::set<std::string> keys;
  for (const Formula& p : schema.premises()) collect_atom_keys(p, keys);
  collect_atom_keys(schema.conclusion(), keys);
  std::vector<std::string> atoms(keys.begin(), keys.end());
  if (atoms.size() >= 8 * sizeof(unsigned long long) ||
      (1ULL << atoms.size()) > static_cast<unsigned long long>(cap))
    throw budget_error("truth table over " + std::to_string(atoms.size()) +
                       " atoms exceeds cap " + std::to_string(cap));

  ValidityReport report;
  report.method = ValidityReport::Method::TruthTable;
  for (unsigned long long mask = 0; mask < (1ULL << atoms.size()); ++mask) {
    std::map<std::string, bool> row;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      row[atoms[i]] = (mask >> i) & 1ULL;
    const bool premises_hold =
        std::all_of(schema.premises().begin(), schema.premises().end(),
                    [&](const Formula& p) { return eval_ground(p, row); });
    if (premises_hold && !eval_ground(schema.conclusion(), row)) {
      report.status = ValidityReport::Status::Invalid;
      Countermodel cm;
      cm.propositional = std::move(row);
      report.countermodel = std::move(cm);
      return report;
    }
  }
  report.status = ValidityReport::Status::Valid;
  return report;
}

Countermodel snapshot(const Interpretation& interp, const Vocabulary& vocab) {
  Countermodel cm;
  cm.domain_size = interp.domain_size;
  cm.constants = interp.constants;
  for (const auto& [name, arity] : vocab.predicates) {
    std::set<std::vector<int>>& tuples = cm.predicates[name];
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    const std::vector<bool>& bits = interp.extensions.at(name);
    for (std::size_t index = 0; index < bits.size(); ++index) {
      if (bits[index]) {
        std::size_t rest = index;
        for (int i = arity - 1; i >= 0; --i) {
          tuple[static_cast<std::size_t>(i)] =
              static_cast<int>(rest % static_cast<std::size_t>(interp.domain_size));
          rest /= static_cast<std::size_t>(interp.domain_size);
        }
        tuples.insert(tuple);
      }
    }
  }
  return cm;
}

}  // namespace

ValidityReport validate_schema(const Schema& schema, int bound,
                               long long interpretation_cap) {
  if (bound < 1) throw config_error("domain bound must be >= 1");
  if (propositional_schema(schema))
    return truth_table_validate(schema, interpretation_cap);

  Vocabulary vocab;
  for (const Formula& p : schema.premises()) vocab.add(p);
  vocab.add(schema.conclusion());

  ValidityReport report;
  report.method = ValidityReport::Method::SmallModel;
  report.bound = bound;
  std::optional<Countermodel> found;
  for_each_interpretation(vocab, bound, interpretation_cap,
                          [&](const Interpretation& interp) {
                            const bool premises_hold = std::all_of(
                                schema.premises().begin(), schema.premises().end(),
                                [&](const Formula& p) {
                                  return eval_closed(p, interp);
                                });
                            if (premises_hold &&
                                !eval_closed(schema.conclusion(), interp)) {
                              found = snapshot(interp, vocab);
                              return false;
                            }
                            return true;
                          });
  if (found) {
    report.status = ValidityReport::Status::Invalid;
    report.countermodel = std::move(found);
  } else {
    report.status = ValidityReport::Status::ValidUpToBound;
  }
  return report;
}

}  // namespace normlog
