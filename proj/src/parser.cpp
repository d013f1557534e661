#include "normlog/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "normlog/errors.hpp"

namespace normlog {

namespace {

enum class Tok {
  LParen,
  RParen,
  Comma,
  Slash,
  Equals,
  Arrow,       // ->
  SquigArrow,  // ~>  (knowledge-base files only; always rejected here)
  Amp,
  Pipe,
  Tilde,
  Dot,
  Exists,
  LowerIdent,
  UpperIdent,
  Meta,  // ?name
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Slash: return "'/'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::SquigArrow: return "'~>'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Tilde: return "'~'";
    case Tok::Dot: return "'.'";
    case Tok::Exists: return "'exists'";
    case Tok::LowerIdent: return "identifier";
    case Tok::UpperIdent: return "variable";
    case Tok::Meta: return "metavariable";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  const auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  const auto push = [&](Tok kind, std::string text, int l, int c) {
    out.push_back(Token{kind, std::move(text), l, c});
  };
  while (i < src.size()) {
    const char c = src[i];
    const int l0 = line, c0 = col;
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') bump(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      bump(2);
      push(Tok::Arrow, "->", l0, c0);
      continue;
    }
    if (c == '~' && i + 1 < src.size() && src[i + 1] == '>') {
      bump(2);
      push(Tok::SquigArrow, "~>", l0, c0);
      continue;
    }
    switch (c) {
      case '(': bump(1); push(Tok::LParen, "(", l0, c0); continue;
      case ')': bump(1); push(Tok::RParen, ")", l0, c0); continue;
      case ',': bump(1); push(Tok::Comma, ",", l0, c0); continue;
      case '/': bump(1); push(Tok::Slash, "/", l0, c0); continue;
      case '=': bump(1); push(Tok::Equals, "=", l0, c0); continue;
      case '&': bump(1); push(Tok::Amp, "&", l0, c0); continue;
      case '|': bump(1); push(Tok::Pipe, "|", l0, c0); continue;
      case '~': bump(1); push(Tok::Tilde, "~", l0, c0); continue;
      case '.': bump(1); push(Tok::Dot, ".", l0, c0); continue;
      default: break;
    }
    if (c == '?') {
      bump(1);
      std::string name;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        name += src[i];
        bump(1);
      }
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        throw parse_error("expected identifier after '?'", l0, c0,
                          {"identifier"}, name.empty() ? "?" : "?" + name);
      push(Tok::Meta, std::move(name), l0, c0);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        name += src[i];
        bump(1);
      }
      if (name == "exists")
        push(Tok::Exists, std::move(name), l0, c0);
      else if (std::isupper(static_cast<unsigned char>(name[0])))
        push(Tok::UpperIdent, std::move(name), l0, c0);
      else
        push(Tok::LowerIdent, std::move(name), l0, c0);
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", l0, c0,
                      {}, std::string(1, c));
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, ParseOptions options)
      : tokens_(tokenize(src)), options_(options) {}

  Formula formula() { return impl(); }

  Schema schema() {
    std::vector<Formula> premises;
    premises.push_back(impl());
    while (accept(Tok::Comma)) premises.push_back(impl());
    expect(Tok::Slash);
    Formula conclusion = impl();
    return Schema(std::move(premises), std::move(conclusion));
  }

  Inference inference() {
    std::vector<Formula> premises;
    premises.push_back(impl());
    while (accept(Tok::Comma)) premises.push_back(impl());
    expect(Tok::Slash);
    Formula conclusion = impl();
    return Inference(std::move(premises), std::move(conclusion));
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail({"end of input"});
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail({tok_name(kind)});
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = std::to_string(t.line) + ":" + std::to_string(t.column) +
                      ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found ";
    msg += t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw parse_error(msg, t.line, t.column, std::move(expected),
                      t.kind == Tok::End ? "" : t.text);
  }

  Formula impl() {
    Formula left = disj();
    if (accept(Tok::Arrow)) {
      Formula right = disj();
      return Formula::implication(std::move(left), std::move(right));
    }
    return left;
  }

  Formula disj() {
    std::vector<Formula> parts;
    parts.push_back(conj());
    while (accept(Tok::Pipe)) parts.push_back(conj());
    if (parts.size() == 1) return std::move(parts[0]);
    return Formula::disjunction(std::move(parts));
  }

  Formula conj() {
    std::vector<Formula> parts;
    parts.push_back(unary());
    while (accept(Tok::Amp)) parts.push_back(unary());
    if (parts.size() == 1) return std::move(parts[0]);
    return Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    if (accept(Tok::Tilde)) return Formula::negation(unary());
    if (peek().kind == Tok::Exists) {
      ++pos_;
      Token var = expect(Tok::UpperIdent);
      expect(Tok::Dot);
      bound_.push_back(var.text);
      Formula body = unary();
      bound_.pop_back();
      return Formula::existential(var.text, std::move(body));
    }
    return atom();
  }

  bool is_bound(const std::string& name) const {
    for (const std::string& v : bound_)
      if (v == name) return true;
    return false;
  }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LowerIdent:
        ++pos_;
        return Term::constant(t.text);
      case Tok::Meta:
        if (!options_.allow_meta)
          throw parse_error(std::to_string(t.line) + ":" +
                                std::to_string(t.column) +
                                ": metavariable '?" + t.text +
                                "' not allowed in a concrete formula",
                            t.line, t.column, {"constant"}, "?" + t.text);
        ++pos_;
        return Term::meta(t.text);
      case Tok::UpperIdent:
        if (!is_bound(t.text) && !options_.allow_free)
          throw parse_error(std::to_string(t.line) + ":" +
                                std::to_string(t.column) + ": unbound variable '" +
                                t.text + "'",
                            t.line, t.column, {"constant"}, t.text);
        ++pos_;
        return Term::variable(t.text);
      default:
        fail({"term"});
    }
  }

  Formula atom() {
    const Token& t = peek();
    if (accept(Tok::LParen)) {
      Formula inner = impl();
      expect(Tok::RParen);
      return inner;
    }
    if (t.kind == Tok::LowerIdent || t.kind == Tok::Meta) {
      if (t.kind == Tok::Meta && !options_.allow_meta)
        throw parse_error(std::to_string(t.line) + ":" + std::to_string(t.column) +
                              ": metavariable '?" + t.text +
                              "' not allowed in a concrete formula",
                          t.line, t.column, {"predicate"}, "?" + t.text);
      Token head = tokens_[pos_++];
      if (accept(Tok::LParen)) {
        std::vector<Term> args;
        args.push_back(term());
        while (accept(Tok::Comma)) args.push_back(term());
        expect(Tok::RParen);
        return Formula::atom(Predicate{head.text, head.kind == Tok::Meta},
                             std::move(args));
      }
      if (peek().kind == Tok::Equals) {
        ++pos_;
        Term left = head.kind == Tok::Meta ? Term::meta(head.text)
                                           : Term::constant(head.text);
        Term right = term();
        return Formula::equality(std::move(left), std::move(right));
      }
      // Bare identifier: a propositional (0-ary) atom.
      return Formula::atom(Predicate{head.text, head.kind == Tok::Meta}, {});
    }
    if (t.kind == Tok::UpperIdent) {
      // A variable can only start an equality.
      Term left = term();
      expect(Tok::Equals);
      Term right = term();
      return Formula::equality(std::move(left), std::move(right));
    }
    fail({"formula"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
  ParseOptions options_;
};

}  // namespace

Formula parse_formula(std::string_view text, ParseOptions options) {
  Parser p(text, options);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Schema parse_schema(std::string_view text) {
  Parser p(text, ParseOptions{.allow_meta = true, .allow_free = false});
  Schema s = p.schema();
  p.expect_end();
  return s;
}

Inference parse_inference(std::string_view text) {
  Parser p(text, ParseOptions{});
  Inference inf = p.inference();
  p.expect_end();
  return inf;
}

}  // namespace normlog
