#include "lawvere/formal/syntax.hpp"

#include "lawvere/errors.hpp"

#include <algorithm>

namespace lawvere::formal {

namespace {

constexpr std::array<std::string_view, 6> kVarNames{"x", "y", "z", "w", "m", "u"};

TermPtr make_term(TermKind k, Natural n, TermPtr arg = nullptr)
{
    return std::make_shared<const Term>(k, std::move(n), std::move(arg));
}

FormulaPtr make_formula(FormulaKind k, Natural code, std::vector<TermPtr> terms,
                        FormulaPtr a = nullptr, FormulaPtr b = nullptr)
{
    return std::make_shared<const Formula>(k, std::move(code), std::move(terms),
                                           std::array<FormulaPtr, 2>{std::move(a), std::move(b)});
}

std::optional<Natural> generic_code(std::string_view name, char prefix)
{
    if (name.size() < 2 || name[0] != prefix) {
        return std::nullopt;
    }
    return parse_decimal(name.substr(1));
}

void collect(const Term& t, std::set<Natural>& out)
{
    for (const Term* p = &t; p != nullptr; p = p->arg().get()) {
        if (p->kind() == TermKind::Var) {
            out.insert(p->number());
        }
    }
}

void collect(const Formula& f, std::set<Natural>& out)
{
    switch (f.kind()) {
    case FormulaKind::Pred:
    case FormulaKind::Less:
    case FormulaKind::Unquote:
        for (const auto& t : f.terms()) {
            collect(*t, out);
        }
        return;
    case FormulaKind::Not:
        collect(*f.body(), out);
        return;
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
        std::set<Natural> inner;
        collect(*f.body(), inner);
        inner.erase(f.code());
        out.insert(inner.begin(), inner.end());
        return;
    }
    default:
        collect(*f.left(), out);
        collect(*f.right(), out);
        return;
    }
}

TermPtr replace_in_term(const TermPtr& t, const Natural& v, const TermPtr& by)
{
    switch (t->kind()) {
    case TermKind::Var:
        return t->number() == v ? by : t;
    case TermKind::Num:
        return t;
    case TermKind::Diag:
    case TermKind::Neg: {
        TermPtr arg = replace_in_term(t->arg(), v, by);
        return arg == t->arg() ? t : make_term(t->kind(), 0, std::move(arg));
    }
    }
    return t;
}

FormulaPtr replace_free(const FormulaPtr& f, const Natural& v, const TermPtr& by)
{
    switch (f->kind()) {
    case FormulaKind::Pred:
    case FormulaKind::Less:
    case FormulaKind::Unquote: {
        std::vector<TermPtr> terms;
        terms.reserve(f->terms().size());
        for (const auto& t : f->terms()) {
            terms.push_back(replace_in_term(t, v, by));
        }
        return make_formula(f->kind(), f->code(), std::move(terms));
    }
    case FormulaKind::Not:
        return not_f(replace_free(f->body(), v, by));
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
        if (f->code() == v) {
            return f;
        }
        return make_formula(f->kind(), f->code(), {}, replace_free(f->body(), v, by));
    default:
        return make_formula(f->kind(), 0, {}, replace_free(f->left(), v, by),
                            replace_free(f->right(), v, by));
    }
}

} // namespace

Term::Term(TermKind kind, Natural number, TermPtr arg)
    : kind_(kind), number_(std::move(number)), arg_(std::move(arg))
{
}

bool operator==(const Term& a, const Term& b)
{
    const Term* p = &a;
    const Term* q = &b;
    while (p != nullptr && q != nullptr) {
        if (p == q) {
            return true;
        }
        if (p->kind_ != q->kind_ || p->number_ != q->number_) {
            return false;
        }
        p = p->arg_.get();
        q = q->arg_.get();
    }
    return p == q;
}

Formula::Formula(FormulaKind kind, Natural code, std::vector<TermPtr> terms,
                 std::array<FormulaPtr, 2> kids)
    : kind_(kind), code_(std::move(code)), terms_(std::move(terms)), kids_(std::move(kids))
{
}

bool operator==(const Formula& a, const Formula& b)
{
    if (&a == &b) {
        return true;
    }
    if (a.kind_ != b.kind_ || a.code_ != b.code_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(*a.terms_[i] == *b.terms_[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < 2; ++i) {
        if ((a.kids_[i] == nullptr) != (b.kids_[i] == nullptr)) {
            return false;
        }
        if (a.kids_[i] && !(*a.kids_[i] == *b.kids_[i])) {
            return false;
        }
    }
    return true;
}

TermPtr var_t(Natural code) { return make_term(TermKind::Var, std::move(code)); }
TermPtr num(Natural n) { return make_term(TermKind::Num, std::move(n)); }
TermPtr diag_t(TermPtr t) { return make_term(TermKind::Diag, 0, std::move(t)); }
TermPtr neg_t(TermPtr t) { return make_term(TermKind::Neg, 0, std::move(t)); }

FormulaPtr pred(Natural symbol, std::vector<TermPtr> args)
{
    return make_formula(FormulaKind::Pred, std::move(symbol), std::move(args));
}
FormulaPtr less(TermPtr a, TermPtr b)
{
    return make_formula(FormulaKind::Less, 0, {std::move(a), std::move(b)});
}
FormulaPtr not_f(FormulaPtr f) { return make_formula(FormulaKind::Not, 0, {}, std::move(f)); }
FormulaPtr and_f(FormulaPtr a, FormulaPtr b)
{
    return make_formula(FormulaKind::And, 0, {}, std::move(a), std::move(b));
}
FormulaPtr or_f(FormulaPtr a, FormulaPtr b)
{
    return make_formula(FormulaKind::Or, 0, {}, std::move(a), std::move(b));
}
FormulaPtr imp(FormulaPtr a, FormulaPtr b)
{
    return make_formula(FormulaKind::Imp, 0, {}, std::move(a), std::move(b));
}
FormulaPtr iff(FormulaPtr a, FormulaPtr b)
{
    return make_formula(FormulaKind::Iff, 0, {}, std::move(a), std::move(b));
}
FormulaPtr for_all(Natural v, FormulaPtr body)
{
    return make_formula(FormulaKind::ForAll, std::move(v), {}, std::move(body));
}
FormulaPtr exists(Natural v, FormulaPtr body)
{
    return make_formula(FormulaKind::Exists, std::move(v), {}, std::move(body));
}
FormulaPtr unquote(TermPtr t) { return make_formula(FormulaKind::Unquote, 0, {std::move(t)}); }

const std::vector<SymbolInfo>& symbol_table()
{
    static const std::vector<SymbolInfo> table{
        {"Prov", 2}, {"Prflen", 2}, {"T", 1}, {"P", 1},
        {"Q", 1},    {"R", 2},      {"A", 0}, {"B", 0},
    };
    return table;
}

std::optional<std::size_t> symbol_arity(const Natural& code)
{
    const auto& table = symbol_table();
    if (code < table.size()) {
        return table[code.get_ui()].arity;
    }
    return std::nullopt;
}

std::string symbol_name(const Natural& code)
{
    const auto& table = symbol_table();
    if (code < table.size()) {
        return std::string(table[code.get_ui()].name);
    }
    return "S" + to_decimal(code);
}

std::optional<Natural> symbol_code(std::string_view name)
{
    const auto& table = symbol_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].name == name) {
            return Natural(static_cast<unsigned long>(i));
        }
    }
    return generic_code(name, 'S');
}

std::string var_name(const Natural& code)
{
    if (code < kVarNames.size()) {
        return std::string(kVarNames[code.get_ui()]);
    }
    return "v" + to_decimal(code);
}

std::optional<Natural> var_code(std::string_view name)
{
    auto it = std::find(kVarNames.begin(), kVarNames.end(), name);
    if (it != kVarNames.end()) {
        return Natural(static_cast<unsigned long>(it - kVarNames.begin()));
    }
    return generic_code(name, 'v');
}

std::set<Natural> free_vars(const Term& t)
{
    std::set<Natural> out;
    collect(t, out);
    return out;
}

std::set<Natural> free_vars(const Formula& f)
{
    std::set<Natural> out;
    collect(f, out);
    return out;
}

bool is_closed(const Term& t)
{
    return free_vars(t).empty();
}

FormulaPtr substitute(const FormulaPtr& f, const Natural& v, const TermPtr& t)
{
    if (!is_closed(*t)) {
        throw InputError("substituted term must be closed (no variables)");
    }
    return replace_free(f, v, t);
}

FormulaPtr substitute_self(const FormulaPtr& f, const Natural& v, const TermPtr& t)
{
    for (const auto& u : free_vars(*t)) {
        if (u != v) {
            throw InputError("substituted term may only mention the variable " + var_name(v));
        }
    }
    return replace_free(f, v, t);
}

} // namespace lawvere::formal
