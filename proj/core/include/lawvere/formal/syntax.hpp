#pragma once

// First-order syntax with two object-level term functions, diag and neg,
// and an unquote formula. Variables and predicate symbols are identified by
// natural-number codes; the name tables below are fixed, so numbering is
// reproducible across runs.

#include "lawvere/natural.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lawvere::formal {

enum class TermKind : std::uint8_t { Var = 0, Num = 1, Diag = 2, Neg = 3 };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    Term(TermKind kind, Natural number, TermPtr arg);

    TermKind kind() const { return kind_; }
    /// Variable code (Var) or numeral value (Num).
    const Natural& number() const { return number_; }
    const TermPtr& arg() const { return arg_; }

    friend bool operator==(const Term& a, const Term& b);

private:
    TermKind kind_;
    Natural number_;
    TermPtr arg_;
};

TermPtr var_t(Natural code);
TermPtr num(Natural n);
TermPtr diag_t(TermPtr t);
TermPtr neg_t(TermPtr t);

enum class FormulaKind : std::uint8_t {
    Pred = 0,
    Less = 1,
    Not = 2,
    And = 3,
    Or = 4,
    Imp = 5,
    Iff = 6,
    ForAll = 7,
    Exists = 8,
    Unquote = 9,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    Formula(FormulaKind kind, Natural code, std::vector<TermPtr> terms,
            std::array<FormulaPtr, 2> kids);

    FormulaKind kind() const { return kind_; }
    /// Predicate symbol code (Pred) or bound variable code (ForAll, Exists).
    const Natural& code() const { return code_; }
    /// Arguments of Pred, the two sides of Less, the operand of Unquote.
    const std::vector<TermPtr>& terms() const { return terms_; }
    const FormulaPtr& left() const { return kids_[0]; }
    const FormulaPtr& right() const { return kids_[1]; }
    /// Operand of Not, body of a quantifier.
    const FormulaPtr& body() const { return kids_[0]; }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    FormulaKind kind_;
    Natural code_;
    std::vector<TermPtr> terms_;
    std::array<FormulaPtr, 2> kids_;
};

FormulaPtr pred(Natural symbol, std::vector<TermPtr> args);
FormulaPtr less(TermPtr a, TermPtr b);
FormulaPtr not_f(FormulaPtr f);
FormulaPtr and_f(FormulaPtr a, FormulaPtr b);
FormulaPtr or_f(FormulaPtr a, FormulaPtr b);
FormulaPtr imp(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr for_all(Natural var, FormulaPtr body);
FormulaPtr exists(Natural var, FormulaPtr body);
FormulaPtr unquote(TermPtr t);

struct SymbolInfo {
    std::string_view name;
    std::size_t arity;
};

/// Fixed predicate table: Prov/2, Prflen/2, T/1, P/1, Q/1, R/2, A/0, B/0.
/// Codes beyond the table are generic symbols written S<code>.
const std::vector<SymbolInfo>& symbol_table();
std::optional<std::size_t> symbol_arity(const Natural& code);
std::string symbol_name(const Natural& code);
std::optional<Natural> symbol_code(std::string_view name);

namespace sym {
inline const Natural Prov{0};
inline const Natural Prflen{1};
inline const Natural T{2};
inline const Natural P{3};
inline const Natural Q{4};
inline const Natural R{5};
inline const Natural A{6};
inline const Natural B{7};
} // namespace sym

/// Variable names: x y z w m u for codes 0..5, v<code> otherwise.
std::string var_name(const Natural& code);
std::optional<Natural> var_code(std::string_view name);

namespace var {
inline const Natural x{0};
inline const Natural y{1};
inline const Natural z{2};
inline const Natural w{3};
inline const Natural m{4};
inline const Natural u{5};
} // namespace var

std::set<Natural> free_vars(const Term& t);
std::set<Natural> free_vars(const Formula& f);

bool is_closed(const Term& t);

/// Replaces the free occurrences of v by the closed term t. Throws
/// InputError when t contains a variable.
FormulaPtr substitute(const FormulaPtr& f, const Natural& v, const TermPtr& t);

/// Like substitute, but t may mention v itself (and nothing else free):
/// every replaced occurrence is free, so no binder of v sits above it and
/// nothing is captured. Used to build G = E[v := diag(v)].
FormulaPtr substitute_self(const FormulaPtr& f, const Natural& v, const TermPtr& t);

} // namespace lawvere::formal
