#pragma once

// Expressions of the toy computable universe. Every natural number decodes
// to exactly one expression; the program with index n is decode(n) read as
// a unary body.

#include "lawvere/natural.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace lawvere::universe {

/// Constructor tags; the numeric value is the tag digit of the encoding.
enum class Op : std::uint8_t {
    Var = 0,    // 1-based argument reference
    Const = 1,
    Succ = 2,
    Pred = 3,   // Pred(0) = 0
    IfZero = 4, // (ifz c then else)
    Pair = 5,   // Cantor pairing of two values
    Fst = 6,
    Snd = 7,
    Run = 8,    // (run p x): run program p on the single argument x
    Smn = 9,    // (smn p y): index of p specialized at first argument y
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Var and Const carry a number; the other
/// constructors carry 1 to 3 children.
class Expr {
public:
    Expr(Op op, Natural number, std::array<ExprPtr, 3> kids);

    Op op() const { return op_; }
    const Natural& number() const { return number_; }
    const ExprPtr& child(std::size_t i) const { return kids_[i]; }
    std::size_t arity() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    Op op_;
    Natural number_;
    std::array<ExprPtr, 3> kids_;
};

ExprPtr var(Natural index);
ExprPtr constant(Natural value);
ExprPtr succ(ExprPtr e);
ExprPtr pred(ExprPtr e);
ExprPtr if_zero(ExprPtr cond, ExprPtr then_branch, ExprPtr else_branch);
ExprPtr pair(ExprPtr a, ExprPtr b);
ExprPtr fst(ExprPtr e);
ExprPtr snd(ExprPtr e);
ExprPtr run(ExprPtr program, ExprPtr argument);
ExprPtr smn(ExprPtr program, ExprPtr first_argument);

/// Gödel number of a unary program body.
struct ProgramIndex {
    Natural code;

    friend bool operator==(const ProgramIndex&, const ProgramIndex&) = default;
};

/// Tagged numbering: code = 10 * payload + tag, binary payloads through
/// Cantor pairing, IfZero as pair(c, pair(t, e)).
Natural encode(const Expr& e);
ExprPtr decode(const Natural& code);

inline ProgramIndex index_of(const Expr& e) { return ProgramIndex{encode(e)}; }

/// Prefix notation: numerals are Const, %k is Var k, and
/// (succ e) (pred e) (ifz c t e) (pair a b) (fst e) (snd e) (run p x) (smn p y).
std::string to_sexpr(const Expr& e);

/// Inverse of to_sexpr. Throws InputError naming the offset of the problem.
ExprPtr parse_program(std::string_view text);

} // namespace lawvere::universe
