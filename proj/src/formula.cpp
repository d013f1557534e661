#include "normlog/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "normlog/errors.hpp"

namespace normlog {

namespace {

bool lower_ident(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

bool upper_ident(const std::string& s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

bool any_ident(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

Term Term::constant(std::string name) {
  if (!lower_ident(name))
    throw config_error("constant must be a lowercase identifier: '" + name + "'");
  return Term{Kind::Constant, std::move(name)};
}

Term Term::variable(std::string name) {
  if (!upper_ident(name))
    throw config_error("variable must be an uppercase identifier: '" + name + "'");
  return Term{Kind::Variable, std::move(name)};
}

Term Term::meta(std::string name) {
  if (!any_ident(name))
    throw config_error("metavariable must be an identifier: '?" + name + "'");
  return Term{Kind::Meta, std::move(name)};
}

std::string Term::text() const {
  return kind == Kind::Meta ? "?" + name : name;
}

std::string Predicate::text() const {
  return meta ? "?" + name : name;
}

Formula Formula::atom(Predicate pred, std::vector<Term> args) {
  if (pred.meta ? !any_ident(pred.name) : !lower_ident(pred.name))
    throw config_error("bad predicate symbol: '" + pred.text() + "'");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->pred = std::move(pred);
  node->terms = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string pred_name, std::vector<Term> args) {
  return atom(Predicate{std::move(pred_name), false}, std::move(args));
}

Formula Formula::equality(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Equality;
  node->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::negation(Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Negation;
  node->parts = {std::move(body)};
  return Formula(std::move(node));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  if (parts.size() < 2)
    throw config_error("conjunction needs at least two parts");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Conjunction;
  node->parts = std::move(parts);
  return Formula(std::move(node));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  if (parts.size() < 2)
    throw config_error("disjunction needs at least two parts");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Disjunction;
  node->parts = std::move(parts);
  return Formula(std::move(node));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implication;
  node->parts = {std::move(antecedent), std::move(consequent)};
  return Formula(std::move(node));
}

Formula Formula::existential(std::string var, Formula body) {
  if (!upper_ident(var))
    throw config_error("bound variable must be an uppercase identifier: '" + var + "'");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Existential;
  node->var = std::move(var);
  node->parts = {std::move(body)};
  return Formula(std::move(node));
}

const Predicate& Formula::pred() const { return node_->pred; }
const std::vector<Term>& Formula::args() const { return node_->terms; }
const Term& Formula::lhs() const { return node_->terms[0]; }
const Term& Formula::rhs() const { return node_->terms[1]; }
const std::vector<Formula>& Formula::parts() const { return node_->parts; }
const Formula& Formula::body() const { return node_->parts[0]; }
const Formula& Formula::antecedent() const { return node_->parts[0]; }
const Formula& Formula::consequent() const { return node_->parts[1]; }
const std::string& Formula::bound_var() const { return node_->var; }

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& free) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f.args())
        if (t.kind == Term::Kind::Variable && !bound.count(t.name))
          free.insert(t.name);
      break;
    case Formula::Kind::Equality:
      for (const Term* t : {&f.lhs(), &f.rhs()})
        if (t->kind == Term::Kind::Variable && !bound.count(t->name))
          free.insert(t->name);
      break;
    case Formula::Kind::Existential: {
      const bool shadowed = bound.count(f.bound_var()) > 0;
      bound.insert(f.bound_var());
      collect_free(f.body(), bound, free);
      if (!shadowed) bound.erase(f.bound_var());
      break;
    }
    default:
      for (const Formula& part : f.parts()) collect_free(part, bound, free);
      break;
  }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> bound, free;
  collect_free(*this, bound, free);
  return free;
}

bool Formula::closed() const { return free_variables().empty(); }

bool Formula::concrete() const {
  switch (kind()) {
    case Kind::Atom:
      if (pred().meta) return false;
      for (const Term& t : args())
        if (t.kind == Term::Kind::Meta) return false;
      return true;
    case Kind::Equality:
      return lhs().kind != Term::Kind::Meta && rhs().kind != Term::Kind::Meta;
    default:
      return std::all_of(parts().begin(), parts().end(),
                         [](const Formula& p) { return p.concrete(); });
  }
}

namespace {

int cmp3(int a, int b) { return a < b ? -1 : a > b ? 1 : 0; }

int compare_terms(const Term& a, const Term& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  return a.name.compare(b.name);
}

}  // namespace

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  if (int c = cmp3(static_cast<int>(kind()), static_cast<int>(other.kind())))
    return c;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (kind() == Kind::Atom) {
    if (int c = cmp3(a.pred.meta, b.pred.meta)) return c;
    if (int c = a.pred.name.compare(b.pred.name)) return c;
  }
  if (kind() == Kind::Existential)
    if (int c = a.var.compare(b.var)) return c;
  if (int c = cmp3(static_cast<int>(a.terms.size()),
                   static_cast<int>(b.terms.size())))
    return c;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (int c = compare_terms(a.terms[i], b.terms[i])) return c;
  if (int c = cmp3(static_cast<int>(a.parts.size()),
                   static_cast<int>(b.parts.size())))
    return c;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (int c = a.parts[i].compare(b.parts[i])) return c;
  return 0;
}

namespace {

// Grammar levels, loosest binding first.  A child printed in a slot that
// requires a tighter level gets wrapped in parentheses; this is what keeps
// parse(render(f)) structurally identical to f (no implicit flattening).
enum Level { kImpl = 0, kDisj = 1, kConj = 2, kUnary = 3 };

struct Glyphs {
  const char* neg;
  const char* conj;
  const char* disj;
  const char* impl;
  const char* exists;
};

constexpr Glyphs kAscii{"~", " & ", " | ", " -> ", "exists "};
constexpr Glyphs kUnicode{"¬", " ∧ ", " ∨ ", " → ",
                          "∃"};

void print(const Formula& f, Level min_level, const Glyphs& g,
           std::string& out) {
  const auto wrap = [&](Level own, auto&& emit) {
    const bool parens = own < min_level;
    if (parens) out += '(';
    emit();
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.pred().text();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          out += f.args()[i].text();
        }
        out += ')';
      }
      break;
    case Formula::Kind::Equality:
      out += f.lhs().text();
      out += " = ";
      out += f.rhs().text();
      break;
    case Formula::Kind::Negation:
      out += g.neg;
      print(f.body(), kUnary, g, out);
      break;
    case Formula::Kind::Existential:
      out += g.exists;
      out += f.bound_var();
      out += ". ";
      print(f.body(), kUnary, g, out);
      break;
    case Formula::Kind::Conjunction:
      wrap(kConj, [&] {
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
          if (i) out += g.conj;
          print(f.parts()[i], kUnary, g, out);
        }
      });
      break;
    case Formula::Kind::Disjunction:
      wrap(kDisj, [&] {
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
          if (i) out += g.disj;
          print(f.parts()[i], kConj, g, out);
        }
      });
      break;
    case Formula::Kind::Implication:
      wrap(kImpl, [&] {
        print(f.antecedent(), kDisj, g, out);
        out += g.impl;
        print(f.consequent(), kDisj, g, out);
      });
      break;
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  print(f, kImpl, kAscii, out);
  return out;
}

std::string render_pretty(const Formula& f) {
  std::string out;
  print(f, kImpl, kUnicode, out);
  return out;
}

Formula substitute_variable(const Formula& f, const std::string& var,
                            const Term& replacement) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args = f.args();
      for (Term& t : args)
        if (t.kind == Term::Kind::Variable && t.name == var) t = replacement;
      return Formula::atom(f.pred(), std::move(args));
    }
    case Formula::Kind::Equality: {
      const auto swap = [&](const Term& t) {
        return t.kind == Term::Kind::Variable && t.name == var ? replacement : t;
      };
      return Formula::equality(swap(f.lhs()), swap(f.rhs()));
    }
    case Formula::Kind::Negation:
      return Formula::negation(substitute_variable(f.body(), var, replacement));
    case Formula::Kind::Conjunction:
    case Formula::Kind::Disjunction: {
      std::vector<Formula> parts;
      parts.reserve(f.parts().size());
      for (const Formula& part : f.parts())
        parts.push_back(substitute_variable(part, var, replacement));
      return f.kind() == Formula::Kind::Conjunction
                 ? Formula::conjunction(std::move(parts))
                 : Formula::disjunction(std::move(parts));
    }
    case Formula::Kind::Implication:
      return Formula::implication(
          substitute_variable(f.antecedent(), var, replacement),
          substitute_variable(f.consequent(), var, replacement));
    case Formula::Kind::Existential:
      if (f.bound_var() == var) return f;
      return Formula::existential(f.bound_var(),
                                  substitute_variable(f.body(), var, replacement));
  }
  throw error("unreachable formula kind");
}

}  // namespace normlog
