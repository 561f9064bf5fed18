#pragma once

// Gödel numbering of terms and formulas, total in both directions.
//
//   term    = 4 * payload + tag     Var(code) Num(n) Diag(t) Neg(t)
//   list    = 0 | 1 + pair(head, tail)
//   formula = 10 * payload + tag    Pred: pair(symbol, list)
//                                   Less, And, Or, Imp, Iff: pair(l, r)
//                                   Not: child; ForAll, Exists: pair(var, body)
//                                   Unquote: term

#include "lawvere/formal/syntax.hpp"

namespace lawvere::formal {

Natural term_code(const Term& t);
TermPtr term_of(const Natural& code);

Natural goedel_number(const Formula& f);
FormulaPtr formula_of(const Natural& n);

} // namespace lawvere::formal
