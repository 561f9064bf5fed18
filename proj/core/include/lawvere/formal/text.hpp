#pragma once

// Prefix text form of formulas:
//   (forall y (not (Prov y x)))   (imp (unq x) A)   (less m 100)
//   (diag x)  (neg x)  numerals  variables x y z w m u v<k>
//   predicates from the symbol table or S<k>; 0-ary ones may be bare.

#include "lawvere/formal/syntax.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace lawvere::formal {

struct PrintOptions {
    /// Numerals with more digits than this print as "#<N digits>"; 0 prints
    /// every numeral in full. Abbreviated text does not parse back.
    std::size_t max_numeral_digits = 0;
};

std::string to_text(const Term& t, const PrintOptions& opts = {});
std::string to_text(const Formula& f, const PrintOptions& opts = {});

/// Throws InputError naming the offset of unknown symbols, wrong arities and
/// malformed forms.
FormulaPtr parse_formula(std::string_view text);
TermPtr parse_term(std::string_view text);

} // namespace lawvere::formal
