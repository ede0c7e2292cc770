#pragma once

// Abstract syntax for Guarded Commands: arithmetic and boolean expressions,
// commands, guarded commands, and the actions labelling program-graph edges.
// Nodes are immutable and shared; all comparisons are structural.

#include <cstdint>
#include <memory>
#include <set>
#include <string>

namespace gcw {

enum class AOp { Add, Sub, Mul, Div, Mod };
enum class ROp { Eq, Ne, Gt, Ge, Lt, Le };
// And/Or are the strict connectives, AndAnd/OrOr the short-circuit ones.
enum class BOp { And, Or, AndAnd, OrOr };

struct Aexp;
struct Bexp;
using AexpPtr = std::shared_ptr<const Aexp>;
using BexpPtr = std::shared_ptr<const Bexp>;

struct Aexp {
  enum class Kind { Num, Str, Var, Index, Len, Bin, Neg, San };
  Kind kind;
  long long num = 0;   // Num
  std::string text;    // Var: name; Index/Len: array name; Str: contents
  AOp op = AOp::Add;   // Bin
  AexpPtr a1, a2;      // Bin: operands; Index: a1 = index; Neg/San: a1

  static AexpPtr mk_num(long long n);
  static AexpPtr mk_str(std::string s);
  static AexpPtr mk_var(std::string x);
  static AexpPtr mk_index(std::string arr, AexpPtr idx);
  static AexpPtr mk_len(std::string arr);
  static AexpPtr mk_bin(AOp op, AexpPtr l, AexpPtr r);
  static AexpPtr mk_neg(AexpPtr a);
  static AexpPtr mk_san(AexpPtr a);
};

struct Bexp {
  enum class Kind { True, False, Rel, Bool, Not };
  Kind kind;
  ROp rop = ROp::Eq;   // Rel
  BOp bop = BOp::And;  // Bool
  AexpPtr a1, a2;      // Rel
  BexpPtr b1, b2;      // Bool: operands; Not: b1

  static BexpPtr mk_true();
  static BexpPtr mk_false();
  static BexpPtr mk_rel(ROp op, AexpPtr l, AexpPtr r);
  static BexpPtr mk_bool(BOp op, BexpPtr l, BexpPtr r);
  static BexpPtr mk_not(BexpPtr b);
};

struct Command;
struct GuardedCommand;
using CommandPtr = std::shared_ptr<const Command>;
using GuardedPtr = std::shared_ptr<const GuardedCommand>;

struct Command {
  enum class Kind { Assign, ArrAssign, Input, InputArr, Output, Skip, Seq, If, Do };
  Kind kind;
  std::string name;  // Assign/Input: variable; ArrAssign/InputArr: array
  std::string chan;  // Input/InputArr/Output
  AexpPtr idx;       // ArrAssign/InputArr index
  AexpPtr rhs;       // Assign/ArrAssign right-hand side; Output payload
  CommandPtr c1, c2; // Seq
  GuardedPtr gc;     // If/Do

  static CommandPtr mk_assign(std::string x, AexpPtr a);
  static CommandPtr mk_arr_assign(std::string arr, AexpPtr idx, AexpPtr rhs);
  static CommandPtr mk_input(std::string chan, std::string x);
  static CommandPtr mk_input_arr(std::string chan, std::string arr, AexpPtr idx);
  static CommandPtr mk_output(std::string chan, AexpPtr a);
  static CommandPtr mk_skip();
  static CommandPtr mk_seq(CommandPtr c1, CommandPtr c2);
  static CommandPtr mk_if(GuardedPtr gc);
  static CommandPtr mk_do(GuardedPtr gc);
};

struct GuardedCommand {
  enum class Kind { Guard, Choice };
  Kind kind;
  BexpPtr guard;    // Guard
  CommandPtr body;  // Guard
  GuardedPtr g1, g2;  // Choice

  static GuardedPtr mk_guard(BexpPtr b, CommandPtr c);
  static GuardedPtr mk_choice(GuardedPtr l, GuardedPtr r);
};

// The seven action forms labelling program-graph edges.
struct Action {
  enum class Kind { Assign, ArrAssign, Input, InputArr, Output, Test, Skip };
  Kind kind = Kind::Skip;
  std::string var;   // Assign/Input target variable
  std::string arr;   // ArrAssign/InputArr array
  std::string chan;  // Input/InputArr/Output channel
  AexpPtr idx;       // ArrAssign/InputArr index
  AexpPtr rhs;       // Assign/ArrAssign value; Output payload
  BexpPtr cond;      // Test

  static Action assign(std::string x, AexpPtr a);
  static Action arr_assign(std::string arr, AexpPtr idx, AexpPtr rhs);
  static Action input(std::string chan, std::string x);
  static Action input_arr(std::string chan, std::string arr, AexpPtr idx);
  static Action output(std::string chan, AexpPtr a);
  static Action test(BexpPtr b);
  static Action skip();

  std::string label() const;  // rendering used on edges and in tables
};

// Total structural orders; used for sets of expressions and actions.
int compare(const Aexp& a, const Aexp& b);
int compare(const Bexp& a, const Bexp& b);
int compare(const Action& a, const Action& b);
int compare(const Command& a, const Command& b);
int compare(const GuardedCommand& a, const GuardedCommand& b);

inline bool operator==(const Action& a, const Action& b) { return compare(a, b) == 0; }
inline bool operator<(const Action& a, const Action& b) { return compare(a, b) < 0; }

struct AexpLess {
  bool operator()(const AexpPtr& a, const AexpPtr& b) const { return compare(*a, *b) < 0; }
};
using AexpSet = std::set<AexpPtr, AexpLess>;

inline bool equal(const AexpPtr& a, const AexpPtr& b) { return compare(*a, *b) == 0; }
inline bool equal(const BexpPtr& a, const BexpPtr& b) { return compare(*a, *b) == 0; }
inline bool equal(const CommandPtr& a, const CommandPtr& b) { return compare(*a, *b) == 0; }

// Precedence-aware rendering; parse(to_string(e)) yields a structurally equal tree.
std::string to_string(const Aexp& a);
std::string to_string(const Bexp& b);
std::string to_string(const Command& c);
std::string to_string(const GuardedCommand& gc);
inline std::string to_string(const AexpPtr& a) { return to_string(*a); }
inline std::string to_string(const BexpPtr& b) { return to_string(*b); }

}  // namespace gcw
