#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace normlog {

// A term is a constant (lowercase identifier), a variable (uppercase,
// only meaningful under a quantifier or as a rule slot), or a constant
// metavariable ("?name", schema formulas only).  The sigil decides the
// namespace, so the three kinds can never collide.
struct Term {
  enum class Kind { Constant, Variable, Meta };

  Kind kind = Kind::Constant;
  std::string name;

  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term meta(std::string name);

  // Sigiled spelling as it appears in source text.
  std::string text() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

// Predicate position of an atom; may be a metavariable in schema formulas.
struct Predicate {
  std::string name;
  bool meta = false;

  std::string text() const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
  friend auto operator<=>(const Predicate&, const Predicate&) = default;
};

// Immutable formula tree.  Copies share nodes, so values are cheap to
// pass around and safe to hold in sets and maps.
class Formula {
 public:
  enum class Kind {
    Atom,
    Equality,
    Negation,
    Conjunction,
    Disjunction,
    Implication,
    Existential,
  };

  static Formula atom(Predicate pred, std::vector<Term> args = {});
  static Formula atom(std::string pred_name, std::vector<Term> args = {});
  static Formula equality(Term lhs, Term rhs);
  static Formula negation(Formula body);
  static Formula conjunction(std::vector<Formula> parts);  // needs >= 2 parts
  static Formula disjunction(std::vector<Formula> parts);  // needs >= 2 parts
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula existential(std::string var, Formula body);

  Kind kind() const { return node_->kind; }

  const Predicate& pred() const;            // Atom
  const std::vector<Term>& args() const;    // Atom
  const Term& lhs() const;                  // Equality
  const Term& rhs() const;                  // Equality
  const std::vector<Formula>& parts() const;  // any compound
  const Formula& body() const;              // Negation, Existential
  const Formula& antecedent() const;        // Implication
  const Formula& consequent() const;        // Implication
  const std::string& bound_var() const;     // Existential

  // No free variables.
  bool closed() const;
  // No metavariables in predicate or term position.
  bool concrete() const;
  std::set<std::string> free_variables() const;

  // Total structural order; negative / zero / positive like strcmp.
  int compare(const Formula& other) const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.compare(b) == 0;
  }
  friend bool operator<(const Formula& a, const Formula& b) {
    return a.compare(b) < 0;
  }

 private:
  struct Node {
    Kind kind;
    Predicate pred;               // Atom
    std::vector<Term> terms;      // Atom args; Equality holds [lhs, rhs]
    std::vector<Formula> parts;   // subformulas
    std::string var;              // Existential
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Canonical ASCII rendering; parse_formula(render(f)) reproduces f.
std::string render(const Formula& f);
// Display-only Unicode rendering; not accepted by the parser.
std::string render_pretty(const Formula& f);

// Replaces free occurrences of var; occurrences shadowed by a quantifier
// are left alone.
Formula substitute_variable(const Formula& f, const std::string& var,
                            const Term& replacement);

}  // namespace normlog
