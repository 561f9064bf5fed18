#pragma once

// Self-reference for formulas. diag is an object-level term function whose
// reduction on a numeral k substitutes k into the formula numbered k; with
// it, G = E[v := diag(v)] and C = G[v := <G>] satisfy
//
//     reduce_diag(C) == reduce_diag(E[v := <C>])
//
// as syntax trees, which is the machine-checkable form of "C says E of
// itself".

#include "lawvere/formal/syntax.hpp"

#include <string>

namespace lawvere::formal {

/// <B(<B>)> for the formula B numbered n. Throws InputError unless B has
/// exactly one free variable.
Natural diag_meta(const Natural& n);

/// Rewrites diag(k) -> D(k) and neg(k) -> <not phi_k> for numerals k,
/// innermost first, until no redex remains. Unquote is left in place (its
/// operand term is still reduced).
FormulaPtr reduce_diag(const FormulaPtr& f);

/// Replaces each (unq k) already present in f by the formula numbered k.
/// One step only; the inserted formulas are not revisited.
FormulaPtr unquote_once(const FormulaPtr& f);

struct LemmaCertificate {
    FormulaPtr e;
    Natural variable;
    FormulaPtr g;
    FormulaPtr c;
    Natural goedel_g;
    Natural goedel_c;
    FormulaPtr reduced; // reduce_diag(C)
    FormulaPtr target;  // reduce_diag(E[v := <C>])
    bool verified = false;

    /// E[v := <C>] before any reduction.
    FormulaPtr raw_target() const;

    /// Recomputes every derived field from e and variable and compares.
    bool recheck() const;
};

/// Requires v to be the only free variable of E and E to contain no
/// diag-of-numeral subterm.
LemmaCertificate diagonal_sentence(const FormulaPtr& e, const Natural& v);

enum class SentenceKind { Goedel, Rosser, Tarski, Parikh, Curry };

std::string to_string(SentenceKind k);

/// The open formula E(x) each named sentence diagonalizes.
FormulaPtr goedel_formula();                     // forall y. not Prov(y, x)
FormulaPtr rosser_formula();                     // forall y. Prov(y,x) -> exists w. w<y & Prov(w, neg x)
FormulaPtr tarski_formula();                     // not T(x)
FormulaPtr parikh_formula(const Natural& n);     // not exists m. m<n & Prflen(m, x)
FormulaPtr curry_formula(const FormulaPtr& a);   // unq(x) -> A

/// Builds E for `kind` and diagonalizes it in x. `n` is used by Parikh
/// (n >= 1), `a` by Curry (a closed formula).
LemmaCertificate named_sentence(SentenceKind kind, const Natural& n = 1,
                                const FormulaPtr& a = nullptr);

} // namespace lawvere::formal
