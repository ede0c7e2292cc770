#include "gcw/ast.hpp"

#include <sstream>

namespace gcw {

AexpPtr Aexp::mk_num(long long n) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::Num;
  e->num = n;
  return e;
}
AexpPtr Aexp::mk_str(std::string s) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::Str;
  e->text = std::move(s);
  return e;
}
AexpPtr Aexp::mk_var(std::string x) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::Var;
  e->text = std::move(x);
  return e;
}
AexpPtr Aexp::mk_index(std::string arr, AexpPtr idx) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::Index;
  e->text = std::move(arr);
  e->a1 = std::move(idx);
  return e;
}
AexpPtr Aexp::mk_len(std::string arr) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::Len;
  e->text = std::move(arr);
  return e;
}
AexpPtr Aexp::mk_bin(AOp op, AexpPtr l, AexpPtr r) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::Bin;
  e->op = op;
  e->a1 = std::move(l);
  e->a2 = std::move(r);
  return e;
}
AexpPtr Aexp::mk_neg(AexpPtr a) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::Neg;
  e->a1 = std::move(a);
  return e;
}
AexpPtr Aexp::mk_san(AexpPtr a) {
  auto e = std::make_shared<Aexp>();
  e->kind = Kind::San;
  e->a1 = std::move(a);
  return e;
}

BexpPtr Bexp::mk_true() {
  auto e = std::make_shared<Bexp>();
  e->kind = Kind::True;
  return e;
}
BexpPtr Bexp::mk_false() {
  auto e = std::make_shared<Bexp>();
  e->kind = Kind::False;
  return e;
}
BexpPtr Bexp::mk_rel(ROp op, AexpPtr l, AexpPtr r) {
  auto e = std::make_shared<Bexp>();
  e->kind = Kind::Rel;
  e->rop = op;
  e->a1 = std::move(l);
  e->a2 = std::move(r);
  return e;
}
BexpPtr Bexp::mk_bool(BOp op, BexpPtr l, BexpPtr r) {
  auto e = std::make_shared<Bexp>();
  e->kind = Kind::Bool;
  e->bop = op;
  e->b1 = std::move(l);
  e->b2 = std::move(r);
  return e;
}
BexpPtr Bexp::mk_not(BexpPtr b) {
  auto e = std::make_shared<Bexp>();
  e->kind = Kind::Not;
  e->b1 = std::move(b);
  return e;
}

CommandPtr Command::mk_assign(std::string x, AexpPtr a) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::Assign;
  c->name = std::move(x);
  c->rhs = std::move(a);
  return c;
}
CommandPtr Command::mk_arr_assign(std::string arr, AexpPtr idx, AexpPtr rhs) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::ArrAssign;
  c->name = std::move(arr);
  c->idx = std::move(idx);
  c->rhs = std::move(rhs);
  return c;
}
CommandPtr Command::mk_input(std::string chan, std::string x) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::Input;
  c->chan = std::move(chan);
  c->name = std::move(x);
  return c;
}
CommandPtr Command::mk_input_arr(std::string chan, std::string arr, AexpPtr idx) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::InputArr;
  c->chan = std::move(chan);
  c->name = std::move(arr);
  c->idx = std::move(idx);
  return c;
}
CommandPtr Command::mk_output(std::string chan, AexpPtr a) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::Output;
  c->chan = std::move(chan);
  c->rhs = std::move(a);
  return c;
}
CommandPtr Command::mk_skip() {
  auto c = std::make_shared<Command>();
  c->kind = Kind::Skip;
  return c;
}
CommandPtr Command::mk_seq(CommandPtr c1, CommandPtr c2) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::Seq;
  c->c1 = std::move(c1);
  c->c2 = std::move(c2);
  return c;
}
CommandPtr Command::mk_if(GuardedPtr gc) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::If;
  c->gc = std::move(gc);
  return c;
}
CommandPtr Command::mk_do(GuardedPtr gc) {
  auto c = std::make_shared<Command>();
  c->kind = Kind::Do;
  c->gc = std::move(gc);
  return c;
}

GuardedPtr GuardedCommand::mk_guard(BexpPtr b, CommandPtr c) {
  auto g = std::make_shared<GuardedCommand>();
  g->kind = Kind::Guard;
  g->guard = std::move(b);
  g->body = std::move(c);
  return g;
}
GuardedPtr GuardedCommand::mk_choice(GuardedPtr l, GuardedPtr r) {
  auto g = std::make_shared<GuardedCommand>();
  g->kind = Kind::Choice;
  g->g1 = std::move(l);
  g->g2 = std::move(r);
  return g;
}

Action Action::assign(std::string x, AexpPtr a) {
  Action act;
  act.kind = Kind::Assign;
  act.var = std::move(x);
  act.rhs = std::move(a);
  return act;
}
Action Action::arr_assign(std::string arr, AexpPtr idx, AexpPtr rhs) {
  Action act;
  act.kind = Kind::ArrAssign;
  act.arr = std::move(arr);
  act.idx = std::move(idx);
  act.rhs = std::move(rhs);
  return act;
}
Action Action::input(std::string chan, std::string x) {
  Action act;
  act.kind = Kind::Input;
  act.chan = std::move(chan);
  act.var = std::move(x);
  return act;
}
Action Action::input_arr(std::string chan, std::string arr, AexpPtr idx) {
  Action act;
  act.kind = Kind::InputArr;
  act.chan = std::move(chan);
  act.arr = std::move(arr);
  act.idx = std::move(idx);
  return act;
}
Action Action::output(std::string chan, AexpPtr a) {
  Action act;
  act.kind = Kind::Output;
  act.chan = std::move(chan);
  act.rhs = std::move(a);
  return act;
}
Action Action::test(BexpPtr b) {
  Action act;
  act.kind = Kind::Test;
  act.cond = std::move(b);
  return act;
}
Action Action::skip() { return Action{}; }

namespace {

template <typename T>
int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmp_ptr(const AexpPtr& a, const AexpPtr& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  return compare(*a, *b);
}
int cmp_ptr(const BexpPtr& a, const BexpPtr& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  return compare(*a, *b);
}

// Rendering precedence: atoms 4, unary 3, * / % 2, + - 1.
int aprec(const Aexp& a) {
  switch (a.kind) {
    case Aexp::Kind::Bin:
      return (a.op == AOp::Mul || a.op == AOp::Div || a.op == AOp::Mod) ? 2 : 1;
    case Aexp::Kind::Neg:
    case Aexp::Kind::San:
      return 3;
    default:
      return 4;
  }
}

const char* aop_str(AOp op) {
  switch (op) {
    case AOp::Add: return "+";
    case AOp::Sub: return "-";
    case AOp::Mul: return "*";
    case AOp::Div: return "/";
    case AOp::Mod: return "%";
  }
  return "?";
}

const char* rop_str(ROp op) {
  switch (op) {
    case ROp::Eq: return "=";
    case ROp::Ne: return "!=";
    case ROp::Gt: return ">";
    case ROp::Ge: return ">=";
    case ROp::Lt: return "<";
    case ROp::Le: return "<=";
  }
  return "?";
}

const char* bop_str(BOp op) {
  switch (op) {
    case BOp::And: return "&";
    case BOp::Or: return "|";
    case BOp::AndAnd: return "&&";
    case BOp::OrOr: return "||";
  }
  return "?";
}

void print_aexp(std::ostream& os, const Aexp& a, int parent, bool right) {
  int p = aprec(a);
  bool parens = p < parent || (p == parent && right && a.kind == Aexp::Kind::Bin);
  if (parens) os << '(';
  switch (a.kind) {
    case Aexp::Kind::Num: os << a.num; break;
    case Aexp::Kind::Str: os << '"' << a.text << '"'; break;
    case Aexp::Kind::Var: os << a.text; break;
    case Aexp::Kind::Index:
      os << a.text << '[';
      print_aexp(os, *a.a1, 0, false);
      os << ']';
      break;
    case Aexp::Kind::Len: os << a.text << '#'; break;
    case Aexp::Kind::Bin:
      print_aexp(os, *a.a1, p, false);
      os << aop_str(a.op);
      print_aexp(os, *a.a2, p, true);
      break;
    case Aexp::Kind::Neg:
      os << '-';
      print_aexp(os, *a.a1, 3, false);
      break;
    case Aexp::Kind::San:
      os << "san(";
      print_aexp(os, *a.a1, 0, false);
      os << ')';
      break;
  }
  if (parens) os << ')';
}

// Boolean precedence: atoms 4 (incl. relations), ! 3, &-level 2, |-level 1.
int bprec(const Bexp& b) {
  switch (b.kind) {
    case Bexp::Kind::Bool:
      return (b.bop == BOp::And || b.bop == BOp::AndAnd) ? 2 : 1;
    case Bexp::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

void print_bexp(std::ostream& os, const Bexp& b, int parent, bool right) {
  int p = bprec(b);
  bool parens = p < parent || (p == parent && right && b.kind == Bexp::Kind::Bool);
  if (parens) os << '(';
  switch (b.kind) {
    case Bexp::Kind::True: os << "true"; break;
    case Bexp::Kind::False: os << "false"; break;
    case Bexp::Kind::Rel:
      print_aexp(os, *b.a1, 0, false);
      os << ' ' << rop_str(b.rop) << ' ';
      print_aexp(os, *b.a2, 0, false);
      break;
    case Bexp::Kind::Bool:
      print_bexp(os, *b.b1, p, false);
      os << ' ' << bop_str(b.bop) << ' ';
      print_bexp(os, *b.b2, p, true);
      break;
    case Bexp::Kind::Not: {
      os << '!';
      // '!' applies to boolean atoms only, so relations need parentheses.
      bool np = !(b.b1->kind == Bexp::Kind::True || b.b1->kind == Bexp::Kind::False ||
                  b.b1->kind == Bexp::Kind::Not);
      if (np) os << '(';
      print_bexp(os, *b.b1, 0, false);
      if (np) os << ')';
      break;
    }
  }
  if (parens) os << ')';
}

void print_command(std::ostream& os, const Command& c);

void print_gc(std::ostream& os, const GuardedCommand& gc) {
  if (gc.kind == GuardedCommand::Kind::Guard) {
    print_bexp(os, *gc.guard, 0, false);
    os << " -> ";
    print_command(os, *gc.body);
  } else {
    print_gc(os, *gc.g1);
    os << " [] ";
    print_gc(os, *gc.g2);
  }
}

void print_command(std::ostream& os, const Command& c) {
  switch (c.kind) {
    case Command::Kind::Assign:
      os << c.name << " := ";
      print_aexp(os, *c.rhs, 0, false);
      break;
    case Command::Kind::ArrAssign:
      os << c.name << '[';
      print_aexp(os, *c.idx, 0, false);
      os << "] := ";
      print_aexp(os, *c.rhs, 0, false);
      break;
    case Command::Kind::Input:
      os << c.chan << '?' << c.name;
      break;
    case Command::Kind::InputArr:
      os << c.chan << '?' << c.name << '[';
      print_aexp(os, *c.idx, 0, false);
      os << ']';
      break;
    case Command::Kind::Output:
      os << c.chan << '!';
      print_aexp(os, *c.rhs, 3, false);
      break;
    case Command::Kind::Skip:
      os << "skip";
      break;
    case Command::Kind::Seq:
      print_command(os, *c.c1);
      os << "; ";
      print_command(os, *c.c2);
      break;
    case Command::Kind::If:
      os << "if ";
      print_gc(os, *c.gc);
      os << " fi";
      break;
    case Command::Kind::Do:
      os << "do ";
      print_gc(os, *c.gc);
      os << " od";
      break;
  }
}

}  // namespace

int compare(const Aexp& a, const Aexp& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  switch (a.kind) {
    case Aexp::Kind::Num: return cmp3(a.num, b.num);
    case Aexp::Kind::Str:
    case Aexp::Kind::Var:
    case Aexp::Kind::Len: return cmp3(a.text, b.text);
    case Aexp::Kind::Index:
      if (int c = cmp3(a.text, b.text)) return c;
      return cmp_ptr(a.a1, b.a1);
    case Aexp::Kind::Bin:
      if (int c = cmp3(static_cast<int>(a.op), static_cast<int>(b.op))) return c;
      if (int c = cmp_ptr(a.a1, b.a1)) return c;
      return cmp_ptr(a.a2, b.a2);
    case Aexp::Kind::Neg:
    case Aexp::Kind::San: return cmp_ptr(a.a1, b.a1);
  }
  return 0;
}

int compare(const Bexp& a, const Bexp& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  switch (a.kind) {
    case Bexp::Kind::True:
    case Bexp::Kind::False: return 0;
    case Bexp::Kind::Rel:
      if (int c = cmp3(static_cast<int>(a.rop), static_cast<int>(b.rop))) return c;
      if (int c = cmp_ptr(a.a1, b.a1)) return c;
      return cmp_ptr(a.a2, b.a2);
    case Bexp::Kind::Bool:
      if (int c = cmp3(static_cast<int>(a.bop), static_cast<int>(b.bop))) return c;
      if (int c = cmp_ptr(a.b1, b.b1)) return c;
      return cmp_ptr(a.b2, b.b2);
    case Bexp::Kind::Not: return cmp_ptr(a.b1, b.b1);
  }
  return 0;
}

int compare(const Action& a, const Action& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  if (int c = cmp3(a.var, b.var)) return c;
  if (int c = cmp3(a.arr, b.arr)) return c;
  if (int c = cmp3(a.chan, b.chan)) return c;
  if (int c = cmp_ptr(a.idx, b.idx)) return c;
  if (int c = cmp_ptr(a.rhs, b.rhs)) return c;
  if (!a.cond && !b.cond) return 0;
  if (!a.cond) return -1;
  if (!b.cond) return 1;
  return compare(*a.cond, *b.cond);
}

int compare(const Command& a, const Command& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  if (int c = cmp3(a.name, b.name)) return c;
  if (int c = cmp3(a.chan, b.chan)) return c;
  if (int c = cmp_ptr(a.idx, b.idx)) return c;
  if (int c = cmp_ptr(a.rhs, b.rhs)) return c;
  auto cmd = [](const CommandPtr& x, const CommandPtr& y) {
    if (!x && !y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    return compare(*x, *y);
  };
  if (int c = cmd(a.c1, b.c1)) return c;
  if (int c = cmd(a.c2, b.c2)) return c;
  if (!a.gc && !b.gc) return 0;
  if (!a.gc) return -1;
  if (!b.gc) return 1;
  return compare(*a.gc, *b.gc);
}

int compare(const GuardedCommand& a, const GuardedCommand& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  if (a.kind == GuardedCommand::Kind::Guard) {
    if (int c = compare(*a.guard, *b.guard)) return c;
    return compare(*a.body, *b.body);
  }
  if (int c = compare(*a.g1, *b.g1)) return c;
  return compare(*a.g2, *b.g2);
}

std::string to_string(const Aexp& a) {
  std::ostringstream os;
  print_aexp(os, a, 0, false);
  return os.str();
}

std::string to_string(const Bexp& b) {
  std::ostringstream os;
  print_bexp(os, b, 0, false);
  return os.str();
}

std::string to_string(const Command& c) {
  std::ostringstream os;
  print_command(os, c);
  return os.str();
}

std::string to_string(const GuardedCommand& gc) {
  std::ostringstream os;
  print_gc(os, gc);
  return os.str();
}

std::string Action::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Assign: os << var << " := " << to_string(*rhs); break;
    case Kind::ArrAssign:
      os << arr << '[' << to_string(*idx) << "] := " << to_string(*rhs);
      break;
    case Kind::Input: os << chan << '?' << var; break;
    case Kind::InputArr: os << chan << '?' << arr << '[' << to_string(*idx) << ']'; break;
    case Kind::Output: {
      std::ostringstream payload;
      print_aexp(payload, *rhs, 3, false);
      os << chan << '!' << payload.str();
      break;
    }
    case Kind::Test: os << to_string(*cond); break;
    case Kind::Skip: os << "skip"; break;
  }
  return os.str();
}

}  // namespace gcw
