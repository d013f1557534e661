#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "normlog/formula.hpp"

namespace normlog {

// A concrete inference: closed, metavariable-free premises and conclusion.
struct Inference {
  Inference(std::vector<Formula> premises, Formula conclusion);

  std::vector<Formula> premises;
  Formula conclusion;

  friend bool operator==(const Inference& a, const Inference& b) {
    return a.premises == b.premises && a.conclusion == b.conclusion;
  }
};

// An inference pattern.  Predicate symbols and constants may be
// metavariables; a schema with none is a degenerate concrete inference.
class Schema {
 public:
  Schema(std::vector<Formula> premises, Formula conclusion);

  const std::vector<Formula>& premises() const { return premises_; }
  const Formula& conclusion() const { return conclusion_; }

  // Metavariable inventory, collected at construction.  Predicate
  // metavariables carry the single arity they are used at.
  const std::map<std::string, int>& predicate_metavars() const {
    return predicate_metavars_;
  }
  const std::set<std::string>& constant_metavars() const {
    return constant_metavars_;
  }

  bool degenerate() const {
    return predicate_metavars_.empty() && constant_metavars_.empty();
  }

  friend bool operator==(const Schema& a, const Schema& b) {
    return a.premises_ == b.premises_ && a.conclusion_ == b.conclusion_;
  }

 private:
  std::vector<Formula> premises_;
  Formula conclusion_;
  std::map<std::string, int> predicate_metavars_;
  std::set<std::string> constant_metavars_;
};

// Maps predicate metavariables to concrete predicate symbols and constant
// metavariables to concrete constants.  Functional by construction.
struct Substitution {
  std::map<std::string, std::string> predicates;
  std::map<std::string, std::string> constants;

  bool covers(const Schema& schema) const;
  std::string text() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

// Symbol-for-symbol replacement.  Throws substitution_error when the
// substitution leaves a metavariable uncovered or the replacement would
// use one predicate symbol at two arities.
Inference apply_substitution(const Schema& schema, const Substitution& sub);

std::string render(const Schema& schema);
std::string render(const Inference& inference);

}  // namespace normlog
