#include "normlog/match.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "normlog/errors.hpp"
#include "normlog/parser.hpp"

namespace normlog {

namespace {

constexpr std::size_t kPermutationPremiseLimit = 6;

const char* kind_name(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Atom: return "atom";
    case Formula::Kind::Equality: return "equality";
    case Formula::Kind::Negation: return "negation";
    case Formula::Kind::Conjunction: return "conjunction";
    case Formula::Kind::Disjunction: return "disjunction";
    case Formula::Kind::Implication: return "implication";
    case Formula::Kind::Existential: return "existential";
  }
  return "?";
}

// Structural walk binding metavariables as they are encountered.  The
// first conflict aborts with a reason naming the position.
struct Matcher {
  Substitution sub;
  MatchMode mode;
  std::string where;
  std::string reason;

  bool fail(std::string r) {
    reason = where + ": " + std::move(r);
    return false;
  }

  bool bind_pred(const std::string& meta, const std::string& target) {
    auto [it, inserted] = sub.predicates.emplace(meta, target);
    if (!inserted && it->second != target)
      return fail("?" + meta + " is bound to " + it->second +
                  " but would need " + target);
    if (inserted && mode == MatchMode::Injective)
      for (const auto& [other, bound] : sub.predicates)
        if (other != meta && bound == target)
          return fail("injective mode: ?" + meta + " and ?" + other +
                      " would share " + target);
    return true;
  }

  bool bind_const(const std::string& meta, const std::string& target) {
    auto [it, inserted] = sub.constants.emplace(meta, target);
    if (!inserted && it->second != target)
      return fail("?" + meta + " is bound to " + it->second +
                  " but would need " + target);
    if (inserted && mode == MatchMode::Injective)
      for (const auto& [other, bound] : sub.constants)
        if (other != meta && bound == target)
          return fail("injective mode: ?" + meta + " and ?" + other +
                      " would share " + target);
    return true;
  }

  bool match_term(const Term& pattern, const Term& target) {
    switch (pattern.kind) {
      case Term::Kind::Meta:
        if (target.kind != Term::Kind::Constant)
          return fail("?" + pattern.name + " cannot bind " + target.text());
        return bind_const(pattern.name, target.name);
      case Term::Kind::Constant:
        if (target.kind != Term::Kind::Constant || target.name != pattern.name)
          return fail("expected constant " + pattern.name + ", found " +
                      target.text());
        return true;
      case Term::Kind::Variable:
        // Bound variables must agree literally; matching never renames.
        if (target.kind != Term::Kind::Variable || target.name != pattern.name)
          return fail("expected variable " + pattern.name + ", found " +
                      target.text());
        return true;
    }
    return false;
  }

  bool match(const Formula& pattern, const Formula& target) {
    if (pattern.kind() != target.kind())
      return fail(std::string("expected ") + kind_name(pattern.kind()) +
                  ", found " + kind_name(target.kind()));
    switch (pattern.kind()) {
      case Formula::Kind::Atom: {
        if (pattern.args().size() != target.args().size())
          return fail("arity mismatch: " + pattern.pred().text() + "/" +
                      std::to_string(pattern.args().size()) + " vs " +
                      target.pred().text() + "/" +
                      std::to_string(target.args().size()));
        if (pattern.pred().meta) {
          if (!bind_pred(pattern.pred().name, target.pred().name)) return false;
        } else if (pattern.pred().name != target.pred().name) {
          return fail("expected predicate " + pattern.pred().name + ", found " +
                      target.pred().name);
        }
        for (std::size_t i = 0; i < pattern.args().size(); ++i)
          if (!match_term(pattern.args()[i], target.args()[i])) return false;
        return true;
      }
      case Formula::Kind::Equality:
        return match_term(pattern.lhs(), target.lhs()) &&
               match_term(pattern.rhs(), target.rhs());
      case Formula::Kind::Existential:
        if (pattern.bound_var() != target.bound_var())
          return fail("bound variable " + pattern.bound_var() + " vs " +
                      target.bound_var());
        return match(pattern.body(), target.body());
      default: {
        if (pattern.parts().size() != target.parts().size())
          return fail(std::string(kind_name(pattern.kind())) + " of " +
                      std::to_string(pattern.parts().size()) + " vs " +
                      std::to_string(target.parts().size()) + " parts");
        for (std::size_t i = 0; i < pattern.parts().size(); ++i)
          if (!match(pattern.parts()[i], target.parts()[i])) return false;
        return true;
      }
    }
  }
};

MatchResult match_ordered(const std::vector<const Formula*>& premises,
                          const Formula& conclusion, const Schema& schema,
                          MatchMode mode) {
  Matcher m;
  m.mode = mode;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    m.where = "premise " + std::to_string(i + 1);
    if (!m.match(schema.premises()[i], *premises[i]))
      return MatchResult::failure(m.reason);
  }
  m.where = "conclusion";
  if (!m.match(schema.conclusion(), conclusion))
    return MatchResult::failure(m.reason);
  return MatchResult::success(std::move(m.sub));
}

}  // namespace

MatchResult match_inference(const Inference& inference, const Schema& schema,
                            MatchMode mode) {
  if (inference.premises.size() != schema.premises().size())
    return MatchResult::failure(
        "premise count mismatch: inference has " +
        std::to_string(inference.premises.size()) + ", schema has " +
        std::to_string(schema.premises().size()));
  std::vector<const Formula*> premises;
  premises.reserve(inference.premises.size());
  for (const Formula& p : inference.premises) premises.push_back(&p);
  return match_ordered(premises, inference.conclusion, schema, mode);
}

void SchemaLibrary::add(std::string id, Schema schema, ValidityReport validity) {
  if (find(id))
    throw config_error("duplicate schema id '" + id + "'");
  entries_.push_back(LibraryEntry{std::move(id), std::move(schema), std::move(validity)});
}

const LibraryEntry* SchemaLibrary::find(const std::string& id) const {
  for (const LibraryEntry& entry : entries_)
    if (entry.id == id) return &entry;
  return nullptr;
}

SchemaLibrary SchemaLibrary::load(std::istream& in, int bound,
                                  long long interpretation_cap) {
  SchemaLibrary lib;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto is_space = [](unsigned char c) { return std::isspace(c); };
    const auto first = std::find_if_not(line.begin(), line.end(), is_space);
    if (first == line.end()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw config_error("schema library line " + std::to_string(line_no) +
                         ": expected 'id : schema-text'");
    std::string id(line.begin(), line.begin() + static_cast<long>(colon));
    while (!id.empty() && is_space(static_cast<unsigned char>(id.back()))) id.pop_back();
    id.erase(id.begin(), std::find_if_not(id.begin(), id.end(), is_space));
    if (id.empty())
      throw config_error("schema library line " + std::to_string(line_no) +
                         ": empty schema id");
    try {
      Schema schema = parse_schema(line.substr(colon + 1));
      ValidityReport validity = validate_schema(schema, bound, interpretation_cap);
      lib.add(std::move(id), std::move(schema), std::move(validity));
    } catch (const parse_error& e) {
      throw config_error("schema library line " + std::to_string(line_no) + ": " +
                         e.what());
    }
  }
  return lib;
}

SchemaLibrary SchemaLibrary::load_file(const std::string& path, int bound,
                                       long long interpretation_cap) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open schema library '" + path + "'");
  return load(in, bound, interpretation_cap);
}

std::vector<Apprehension> apprehend(const Inference& inference,
                                    const SchemaLibrary& library, MatchMode mode) {
  std::vector<Apprehension> hits;
  for (const LibraryEntry& entry : library.entries()) {
    if (inference.premises.size() != entry.schema.premises().size()) continue;

    MatchResult direct = match_inference(inference, entry.schema, mode);
    if (direct.matched) {
      hits.push_back(Apprehension{entry.id, std::move(direct.substitution)});
      continue;
    }
    if (entry.schema.premises().size() > kPermutationPremiseLimit) continue;

    // A reasoner would reorder premises; try the remaining permutations
    // in lexicographic order so results stay deterministic.
    std::vector<std::size_t> order(inference.premises.size());
    std::iota(order.begin(), order.end(), 0);
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<const Formula*> premises;
      premises.reserve(order.size());
      for (std::size_t idx : order) premises.push_back(&inference.premises[idx]);
      MatchResult r = match_ordered(premises, inference.conclusion, entry.schema, mode);
      if (r.matched) {
        hits.push_back(Apprehension{entry.id, std::move(r.substitution)});
        break;
      }
    }
  }
  return hits;
}

}  // namespace normlog
