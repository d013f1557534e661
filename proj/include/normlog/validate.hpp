#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normlog/schema.hpp"
#include "normlog/semantics.hpp"

namespace normlog {

// A reproducible refutation: a truth-table row for propositional schemas,
// otherwise a finite model (domain, constant denotations, extensions).
struct Countermodel {
  std::map<std::string, bool> propositional;
  int domain_size = 0;
  std::map<std::string, int> constants;
  std::map<std::string, std::set<std::vector<int>>> predicates;

  std::string text() const;
};

struct ValidityReport {
  enum class Status { Valid, ValidUpToBound, Invalid };
  enum class Method { TruthTable, SmallModel };

  Status status = Status::Invalid;
  Method method = Method::TruthTable;
  int bound = 0;  // meaningful for ValidUpToBound
  std::optional<Countermodel> countermodel;

  bool usable() const {
    return status == Status::Valid || status == Status::ValidUpToBound;
  }
  std::string text() const;
};

// Propositional schemas (0-ary atoms only) are decided completely by
// truth table.  Schemas with terms or quantifiers are checked over all
// interpretations with domains of size 1..bound: a countermodel refutes,
// its absence confirms up to the bound only.  Throws budget_error when
// the interpretation count exceeds interpretation_cap.
ValidityReport validate_schema(const Schema& schema, int bound,
                               long long interpretation_cap = kDefaultInterpretationCap);

}  // namespace normlog
