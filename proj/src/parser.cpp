#include "folwb/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace folwb {

namespace {

enum class Tok {
  Ident, Var, Nat, LParen, RParen, Dot, Comma,
  Eq, Lt, Arrow, DArrow, Bar, Amp, Tilde, Caret, End
};

struct Token {
  Tok kind;
  std::string text;
  Nat value;  // Nat tokens and Var indices
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
    std::size_t p = i_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::End, "", 0, p};
      return;
    }
    char c = s_[i_];
    auto single = [&](Tok k) {
      ++i_;
      tok_ = {k, std::string(1, c), 0, p};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '.': return single(Tok::Dot);
      case ',': return single(Tok::Comma);
      case '=': return single(Tok::Eq);
      case '|': return single(Tok::Bar);
      case '&': return single(Tok::Amp);
      case '~': return single(Tok::Tilde);
      case '^': return single(Tok::Caret);
      case '<':
        if (i_ + 2 < s_.size() && s_[i_ + 1] == '-' && s_[i_ + 2] == '>') {
          i_ += 3;
          tok_ = {Tok::DArrow, "<->", 0, p};
          return;
        }
        ++i_;
        tok_ = {Tok::Lt, "<", 0, p};
        return;
      case '-':
        if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
          i_ += 2;
          tok_ = {Tok::Arrow, "->", 0, p};
          return;
        }
        throw ParseError("stray '-'", p);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d;
      while (i_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[i_])))
        d += s_[i_++];
      tok_ = {Tok::Nat, d, Nat(d), p};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
              s_[i_] == '_'))
        id += s_[i_++];
      // variables are x<NAT>, reserved
      if (id.size() > 1 && id[0] == 'x' &&
          std::all_of(id.begin() + 1, id.end(),
                      [](char ch) { return std::isdigit(
                          static_cast<unsigned char>(ch)); })) {
        tok_ = {Tok::Var, id, Nat(id.substr(1)), p};
        return;
      }
      tok_ = {Tok::Ident, id, 0, p};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", p);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig)
      : lex_(text), sig_(sig) {}

  FormulaRef run() {
    auto f = formula();
    expect(Tok::End, "trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().pos);
  }
  void expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) fail("expected " + what);
    lex_.take();
  }
  bool accept(Tok k) {
    if (lex_.peek().kind == k) {
      lex_.take();
      return true;
    }
    return false;
  }

  VarId var_index(const Token& t) {
    if (t.value > Nat(0xFFFFFFFFull)) fail("variable index too large");
    return static_cast<VarId>(t.value.convert_to<std::uint64_t>());
  }

  FormulaRef formula() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall")) {
      bool ex = t.text == "exists";
      lex_.take();
      if (lex_.peek().kind != Tok::Var) fail("expected variable after binder");
      VarId v = var_index(lex_.take());
      expect(Tok::Dot, "'.' after bound variable");
      auto body = formula();
      return ex ? mk_exists(v, body) : mk_forall(v, body);
    }
    return iff();
  }

  FormulaRef iff() {
    auto f = imp();
    while (accept(Tok::DArrow)) f = mk_iff(f, imp());
    return f;
  }
  FormulaRef imp() {
    auto f = disj();
    while (accept(Tok::Arrow)) f = mk_implies(f, disj());
    return f;
  }
  FormulaRef disj() {
    auto f = conj();
    while (accept(Tok::Bar)) f = mk_or(f, conj());
    return f;
  }
  FormulaRef conj() {
    auto f = neg();
    while (accept(Tok::Amp)) f = mk_and(f, neg());
    return f;
  }

  FormulaRef neg() {
    if (accept(Tok::Tilde)) return mk_not(neg());
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      auto f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return atom();
  }

  // atom := IDENT(term,...) | term (= | <) term
  FormulaRef atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident && t.text != "S" && t.text != "exists" &&
        t.text != "forall") {
      Token id = lex_.take();
      auto arity = sig_.relation_arity(id.text);
      if (!arity)
        throw ParseError("unknown relation '" + id.text + "'", id.pos);
      expect(Tok::LParen, "'(' after relation symbol");
      std::vector<Term> args;
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
      if (args.size() != *arity)
        throw ParseError("arity mismatch for '" + id.text + "'", id.pos);
      return mk_atom(id.text, std::move(args));
    }
    if (t.kind == Tok::Ident && t.text == "S" && sig_.has_relation("S")) {
      // relational S: an atom, not a term constructor
      Token id = lex_.take();
      expect(Tok::LParen, "'('");
      std::vector<Term> args;
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
      if (args.size() != *sig_.relation_arity("S"))
        throw ParseError("arity mismatch for 'S'", id.pos);
      return mk_atom("S", std::move(args));
    }
    Term lhs = term();
    const Token& op = lex_.peek();
    if (op.kind == Tok::Eq) {
      lex_.take();
      return mk_eq(lhs, term());
    }
    if (op.kind == Tok::Lt) {
      if (!sig_.has_relation("<")) fail("signature has no '<'");
      lex_.take();
      return mk_lt(lhs, term());
    }
    fail("expected '=' or '<' after term");
  }

  // term := "0" | "S" "(" term ")" | "S^" NAT "(" term ")" | var
  Term term() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Nat) {
      if (t.value != 0) fail("only the constant 0 exists");
      if (!sig_.has_constant("0")) fail("signature has no constant 0");
      lex_.take();
      return Term::zero();
    }
    if (t.kind == Tok::Var) {
      Token v = lex_.take();
      return Term::variable(var_index(v));
    }
    if (t.kind == Tok::Ident && t.text == "S") {
      if (!sig_.has_function("S")) fail("signature has no function S");
      lex_.take();
      Nat power = 1;
      if (accept(Tok::Caret)) {
        if (lex_.peek().kind != Tok::Nat) fail("expected exponent after '^'");
        power = lex_.take().value;
      }
      expect(Tok::LParen, "'('");
      Term inner = term();
      expect(Tok::RParen, "')'");
      return inner.shifted(power);
    }
    fail("expected term");
  }

  Lexer lex_;
  const Signature& sig_;
};

}  // namespace

FormulaRef parse_formula(const std::string& text, const Signature& sig) {
  return Parser(text, sig).run();
}

}  // namespace folwb
