#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "normlog/schema.hpp"
#include "normlog/validate.hpp"

namespace normlog {

// Default permits distinct metavariables to share one target symbol;
// Injective rejects that.  The two modes agree whenever all matched
// symbols are distinct.
enum class MatchMode { Default, Injective };

struct MatchResult {
  bool matched = false;
  Substitution substitution;  // meaningful only when matched
  std::string reason;         // first blocking mismatch otherwise

  static MatchResult success(Substitution sub) {
    return MatchResult{true, std::move(sub), {}};
  }
  static MatchResult failure(std::string reason) {
    return MatchResult{false, {}, std::move(reason)};
  }
};

// Order-sensitive structural match of premises and conclusion.  When it
// succeeds, apply_substitution(schema, result.substitution) reproduces
// the inference exactly.  Arity mismatches are reported as failures,
// not faults.
MatchResult match_inference(const Inference& inference, const Schema& schema,
                            MatchMode mode = MatchMode::Default);

struct LibraryEntry {
  std::string id;
  Schema schema;
  ValidityReport validity;
};

// Ordered, uniquely-keyed schema collection.  File format: one schema
// per line, "id : schema-text"; blank lines and "#" comments ignored.
// Every schema is validated on load.
class SchemaLibrary {
 public:
  void add(std::string id, Schema schema, ValidityReport validity);

  static SchemaLibrary load(std::istream& in, int bound,
                            long long interpretation_cap = kDefaultInterpretationCap);
  static SchemaLibrary load_file(const std::string& path, int bound,
                                 long long interpretation_cap = kDefaultInterpretationCap);

  const std::vector<LibraryEntry>& entries() const { return entries_; }
  const LibraryEntry* find(const std::string& id) const;

 private:
  std::vector<LibraryEntry> entries_;
};

struct Apprehension {
  std::string schema_id;
  Substitution substitution;
};

// Every library schema the inference instantiates, in library order; an
// empty result means the inference is not transparent.  Schemas with at
// most six premises are also tried under all premise permutations.
std::vector<Apprehension> apprehend(const Inference& inference,
                                    const SchemaLibrary& library,
                                    MatchMode mode = MatchMode::Default);

}  // namespace normlog
