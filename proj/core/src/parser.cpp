#include "gcw/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "gcw/errors.hpp"

namespace gcw {
namespace {

enum class Tok {
  Ident, Num, Str,
  KwIf, KwFi, KwDo, KwOd, KwSkip, KwTrue, KwFalse, KwSan,
  Assign,      // :=
  Arrow,       // ->
  Box,         // []
  LBrack, RBrack, LParen, RParen,
  Semi, Hash, Quest, Bang,
  Plus, Minus, Star, Slash, Percent,
  Eq, Ne, Gt, Ge, Lt, Le,
  Amp, AmpAmp, Bar, BarBar,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  long long num = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      Token t = next();
      out.push_back(t);
      if (t.kind == Tok::End) break;
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  Token make(Tok k, size_t len) {
    Token t{k, std::string(src_.substr(pos_, len)), 0, line_, col_};
    pos_ += len;
    col_ += static_cast<int>(len);
    return t;
  }

  Token next() {
    if (pos_ >= src_.size()) return Token{Tok::End, "", 0, line_, col_};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t len = 0;
      while (pos_ + len < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + len])))
        ++len;
      Token t = make(Tok::Num, len);
      t.num = std::stoll(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t len = 0;
      while (pos_ + len < src_.size()) {
        char d = src_[pos_ + len];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_')
          ++len;
        else
          break;
      }
      Token t = make(Tok::Ident, len);
      if (t.text == "if") t.kind = Tok::KwIf;
      else if (t.text == "fi") t.kind = Tok::KwFi;
      else if (t.text == "do") t.kind = Tok::KwDo;
      else if (t.text == "od") t.kind = Tok::KwOd;
      else if (t.text == "skip") t.kind = Tok::KwSkip;
      else if (t.text == "true") t.kind = Tok::KwTrue;
      else if (t.text == "false") t.kind = Tok::KwFalse;
      else if (t.text == "san") t.kind = Tok::KwSan;
      return t;
    }
    if (c == '"') {
      size_t end = pos_ + 1;
      while (end < src_.size() && src_[end] != '"' && src_[end] != '\n') ++end;
      if (end >= src_.size() || src_[end] != '"') fail("unterminated string literal");
      Token t{Tok::Str, std::string(src_.substr(pos_ + 1, end - pos_ - 1)), 0, line_, col_};
      col_ += static_cast<int>(end + 1 - pos_);
      pos_ = end + 1;
      return t;
    }
    auto two = [&](char a, char b) {
      return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b;
    };
    if (two(':', '=')) return make(Tok::Assign, 2);
    if (two('-', '>')) return make(Tok::Arrow, 2);
    if (two('[', ']')) return make(Tok::Box, 2);
    if (two('!', '=')) return make(Tok::Ne, 2);
    if (two('>', '=')) return make(Tok::Ge, 2);
    if (two('<', '=')) return make(Tok::Le, 2);
    if (two('&', '&')) return make(Tok::AmpAmp, 2);
    if (two('|', '|')) return make(Tok::BarBar, 2);
    switch (c) {
      case '[': return make(Tok::LBrack, 1);
      case ']': return make(Tok::RBrack, 1);
      case '(': return make(Tok::LParen, 1);
      case ')': return make(Tok::RParen, 1);
      case ';': return make(Tok::Semi, 1);
      case '#': return make(Tok::Hash, 1);
      case '?': return make(Tok::Quest, 1);
      case '!': return make(Tok::Bang, 1);
      case '+': return make(Tok::Plus, 1);
      case '-': return make(Tok::Minus, 1);
      case '*': return make(Tok::Star, 1);
      case '/': return make(Tok::Slash, 1);
      case '%': return make(Tok::Percent, 1);
      case '=': return make(Tok::Eq, 1);
      case '>': return make(Tok::Gt, 1);
      case '<': return make(Tok::Lt, 1);
      case '&': return make(Tok::Amp, 1);
      case '|': return make(Tok::Bar, 1);
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, Dialect dialect) : toks_(std::move(toks)), dialect_(dialect) {}

  CommandPtr command_eof() {
    CommandPtr c = command();
    expect(Tok::End, "end of program");
    return c;
  }
  AexpPtr aexp_eof() {
    AexpPtr a = aexp();
    expect(Tok::End, "end of expression");
    return a;
  }
  BexpPtr bexp_eof() {
    BexpPtr b = bexp();
    expect(Tok::End, "end of expression");
    return b;
  }

 private:
  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      take();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg + " (found '" + (t.kind == Tok::End ? "<end>" : t.text) + "')", t.line,
                     t.col);
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail_at(peek(), "expected " + what);
    return take();
  }

  // ---- commands ----

  CommandPtr command() {  // right-associative sequencing
    CommandPtr c = basic_command();
    if (accept(Tok::Semi)) return Command::mk_seq(std::move(c), command());
    return c;
  }

  CommandPtr basic_command() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwSkip:
        take();
        return Command::mk_skip();
      case Tok::KwIf: {
        take();
        GuardedPtr gc = guarded();
        expect(Tok::KwFi, "'fi'");
        return Command::mk_if(std::move(gc));
      }
      case Tok::KwDo: {
        take();
        GuardedPtr gc = guarded();
        expect(Tok::KwOd, "'od'");
        return Command::mk_do(std::move(gc));
      }
      case Tok::Ident: {
        Token name = take();
        switch (peek().kind) {
          case Tok::Assign:
            take();
            return Command::mk_assign(name.text, aexp());
          case Tok::LBrack: {
            take();
            AexpPtr idx = aexp();
            expect(Tok::RBrack, "']'");
            expect(Tok::Assign, "':='");
            return Command::mk_arr_assign(name.text, std::move(idx), aexp());
          }
          case Tok::Quest: {
            require_channels(name);
            take();
            Token tgt = expect(Tok::Ident, "variable or array after '?'");
            if (accept(Tok::LBrack)) {
              AexpPtr idx = aexp();
              expect(Tok::RBrack, "']'");
              return Command::mk_input_arr(name.text, tgt.text, std::move(idx));
            }
            return Command::mk_input(name.text, tgt.text);
          }
          case Tok::Bang:
            require_channels(name);
            take();
            return Command::mk_output(name.text, aexp());
          default:
            fail_at(peek(), "expected ':=', '[', '?' or '!' after '" + name.text + "'");
        }
      }
      default:
        fail_at(t, "expected a command");
    }
  }

  void require_channels(const Token& at) {
    if (dialect_ == Dialect::Security)
      throw ParseError("channel actions are not part of the security dialect", at.line, at.col);
  }

  GuardedPtr guarded() {  // right-associative choice
    BexpPtr b = bexp();
    expect(Tok::Arrow, "'->'");
    CommandPtr c = command();
    GuardedPtr g = GuardedCommand::mk_guard(std::move(b), std::move(c));
    if (accept(Tok::Box)) return GuardedCommand::mk_choice(std::move(g), guarded());
    return g;
  }

  // ---- arithmetic expressions ----

  AexpPtr aexp() { return add_expr(); }

  AexpPtr add_expr() {
    AexpPtr a = mul_expr();
    for (;;) {
      if (accept(Tok::Plus))
        a = Aexp::mk_bin(AOp::Add, std::move(a), mul_expr());
      else if (accept(Tok::Minus))
        a = Aexp::mk_bin(AOp::Sub, std::move(a), mul_expr());
      else
        return a;
    }
  }

  AexpPtr mul_expr() {
    AexpPtr a = unary_expr();
    for (;;) {
      if (accept(Tok::Star))
        a = Aexp::mk_bin(AOp::Mul, std::move(a), unary_expr());
      else if (accept(Tok::Slash))
        a = Aexp::mk_bin(AOp::Div, std::move(a), unary_expr());
      else if (accept(Tok::Percent))
        a = Aexp::mk_bin(AOp::Mod, std::move(a), unary_expr());
      else
        return a;
    }
  }

  AexpPtr unary_expr() {
    if (accept(Tok::Minus)) return Aexp::mk_neg(unary_expr());
    if (peek().kind == Tok::KwSan) {
      Token t = take();
      if (dialect_ == Dialect::Plain)
        throw ParseError("'san' is not part of the plain dialect", t.line, t.col);
      return Aexp::mk_san(unary_expr());
    }
    return atom_expr();
  }

  AexpPtr atom_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num: {
        Token n = take();
        return Aexp::mk_num(n.num);
      }
      case Tok::Str: {
        Token s = take();
        if (dialect_ == Dialect::Plain)
          throw ParseError("string literals are not part of the plain dialect", s.line, s.col);
        return Aexp::mk_str(s.text);
      }
      case Tok::Ident: {
        Token name = take();
        if (accept(Tok::LBrack)) {
          AexpPtr idx = aexp();
          expect(Tok::RBrack, "']'");
          return Aexp::mk_index(name.text, std::move(idx));
        }
        if (accept(Tok::Hash)) return Aexp::mk_len(name.text);
        return Aexp::mk_var(name.text);
      }
      case Tok::LParen: {
        take();
        AexpPtr a = aexp();
        expect(Tok::RParen, "')'");
        return a;
      }
      default:
        fail_at(t, "expected an arithmetic expression");
    }
  }

  // ---- boolean expressions ----

  BexpPtr bexp() { return or_expr(); }

  BexpPtr or_expr() {
    BexpPtr b = and_expr();
    for (;;) {
      if (accept(Tok::Bar))
        b = Bexp::mk_bool(BOp::Or, std::move(b), and_expr());
      else if (accept(Tok::BarBar))
        b = Bexp::mk_bool(BOp::OrOr, std::move(b), and_expr());
      else
        return b;
    }
  }

  BexpPtr and_expr() {
    BexpPtr b = not_expr();
    for (;;) {
      if (accept(Tok::Amp))
        b = Bexp::mk_bool(BOp::And, std::move(b), not_expr());
      else if (accept(Tok::AmpAmp))
        b = Bexp::mk_bool(BOp::AndAnd, std::move(b), not_expr());
      else
        return b;
    }
  }

  BexpPtr not_expr() {
    if (accept(Tok::Bang)) return Bexp::mk_not(not_expr());
    return bool_atom();
  }

  BexpPtr bool_atom() {
    if (accept(Tok::KwTrue)) return Bexp::mk_true();
    if (accept(Tok::KwFalse)) return Bexp::mk_false();
    if (peek().kind == Tok::LParen) {
      // A '(' may open a parenthesised boolean expression or the left operand
      // of a relation; try the boolean reading first and backtrack.
      size_t save = pos_;
      take();
      try {
        BexpPtr inner = bexp();
        expect(Tok::RParen, "')'");
        return inner;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    return relation();
  }

  BexpPtr relation() {
    AexpPtr l = aexp();
    ROp op;
    switch (peek().kind) {
      case Tok::Eq: op = ROp::Eq; break;
      case Tok::Ne: op = ROp::Ne; break;
      case Tok::Gt: op = ROp::Gt; break;
      case Tok::Ge: op = ROp::Ge; break;
      case Tok::Lt: op = ROp::Lt; break;
      case Tok::Le: op = ROp::Le; break;
      default: fail_at(peek(), "expected a relational operator");
    }
    take();
    return Bexp::mk_rel(op, std::move(l), aexp());
  }

  std::vector<Token> toks_;
  Dialect dialect_;
  size_t pos_ = 0;
};

}  // namespace

CommandPtr parse_program(std::string_view text, Dialect dialect) {
  return Parser(Lexer(text).run(), dialect).command_eof();
}

AexpPtr parse_aexp(std::string_view text, Dialect dialect) {
  return Parser(Lexer(text).run(), dialect).aexp_eof();
}

BexpPtr parse_bexp(std::string_view text, Dialect dialect) {
  return Parser(Lexer(text).run(), dialect).bexp_eof();
}

}  // namespace gcw
