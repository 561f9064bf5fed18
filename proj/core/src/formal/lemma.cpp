#include "lawvere/formal/lemma.hpp"

#include "lawvere/errors.hpp"
#include "lawvere/formal/numbering.hpp"
#include "lawvere/formal/text.hpp"

namespace lawvere::formal {

namespace {

bool has_diag_numeral(const Term& t)
{
    for (const Term* p = &t; p != nullptr; p = p->arg().get()) {
        if (p->kind() == TermKind::Diag && p->arg()->kind() == TermKind::Num) {
            return true;
        }
    }
    return false;
}

bool has_diag_numeral(const Formula& f)
{
    for (const auto& t : f.terms()) {
        if (has_diag_numeral(*t)) {
            return true;
        }
    }
    if (f.left() && has_diag_numeral(*f.left())) {
        return true;
    }
    return f.right() && has_diag_numeral(*f.right());
}

TermPtr reduce_term(const TermPtr& t)
{
    if (t->kind() != TermKind::Diag && t->kind() != TermKind::Neg) {
        return t;
    }
    TermPtr arg = reduce_term(t->arg());
    if (arg->kind() != TermKind::Num) {
        return arg == t->arg() ? t : std::make_shared<const Term>(t->kind(), 0, std::move(arg));
    }
    if (t->kind() == TermKind::Neg) {
        // <not phi> = 10 * <phi> + tag(Not); no need to decode k.
        return num(10 * arg->number() + static_cast<unsigned>(FormulaKind::Not));
    }
    try {
        return num(diag_meta(arg->number()));
    } catch (const InputError& e) {
        PrintOptions opts{40};
        throw InputError("cannot reduce redex " + to_text(*t, opts) + ": " + e.what());
    }
}

template <typename TermFn>
FormulaPtr map_terms(const FormulaPtr& f, const TermFn& fn)
{
    switch (f->kind()) {
    case FormulaKind::Pred:
    case FormulaKind::Less:
    case FormulaKind::Unquote: {
        std::vector<TermPtr> terms;
        terms.reserve(f->terms().size());
        for (const auto& t : f->terms()) {
            terms.push_back(fn(t));
        }
        return std::make_shared<const Formula>(f->kind(), f->code(), std::move(terms),
                                               std::array<FormulaPtr, 2>{});
    }
    case FormulaKind::Not:
        return not_f(map_terms(f->body(), fn));
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
        return std::make_shared<const Formula>(
            f->kind(), f->code(), std::vector<TermPtr>{},
            std::array<FormulaPtr, 2>{map_terms(f->body(), fn), nullptr});
    default:
        return std::make_shared<const Formula>(
            f->kind(), f->code(), std::vector<TermPtr>{},
            std::array<FormulaPtr, 2>{map_terms(f->left(), fn), map_terms(f->right(), fn)});
    }
}

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw InputError(what);
    }
}

} // namespace

Natural diag_meta(const Natural& n)
{
    FormulaPtr b = formula_of(n);
    auto fv = free_vars(*b);
    require(fv.size() == 1, "diag needs a formula with exactly one free variable, formula " +
                                std::string(decimal_digits(n) > 40 ? "<large>" : to_decimal(n)) +
                                " has " + std::to_string(fv.size()));
    return goedel_number(*substitute(b, *fv.begin(), num(n)));
}

FormulaPtr reduce_diag(const FormulaPtr& f)
{
    return map_terms(f, reduce_term);
}

FormulaPtr unquote_once(const FormulaPtr& f)
{
    switch (f->kind()) {
    case FormulaKind::Unquote:
        if (f->terms()[0]->kind() == TermKind::Num) {
            return formula_of(f->terms()[0]->number());
        }
        return f;
    case FormulaKind::Pred:
    case FormulaKind::Less:
        return f;
    case FormulaKind::Not:
        return not_f(unquote_once(f->body()));
    case FormulaKind::ForAll:
        return for_all(f->code(), unquote_once(f->body()));
    case FormulaKind::Exists:
        return exists(f->code(), unquote_once(f->body()));
    default:
        return std::make_shared<const Formula>(
            f->kind(), f->code(), std::vector<TermPtr>{},
            std::array<FormulaPtr, 2>{unquote_once(f->left()), unquote_once(f->right())});
    }
}

FormulaPtr LemmaCertificate::raw_target() const
{
    return substitute(e, variable, num(goedel_c));
}

bool LemmaCertificate::recheck() const
{
    FormulaPtr g2 = substitute_self(e, variable, diag_t(var_t(variable)));
    if (!(*g2 == *g) || goedel_number(*g) != goedel_g) {
        return false;
    }
    FormulaPtr c2 = substitute(g, variable, num(goedel_g));
    if (!(*c2 == *c) || goedel_number(*c) != goedel_c) {
        return false;
    }
    FormulaPtr r = reduce_diag(c);
    FormulaPtr t = reduce_diag(raw_target());
    return verified && *r == *reduced && *t == *target && *r == *t;
}

LemmaCertificate diagonal_sentence(const FormulaPtr& e, const Natural& v)
{
    auto fv = free_vars(*e);
    require(!fv.empty(), "formula is closed; it needs the free variable " + var_name(v));
    require(fv.size() == 1 && *fv.begin() == v,
            "the designated variable " + var_name(v) + " must be the only free variable");
    require(!has_diag_numeral(*e), "formula already contains a (diag <numeral>) subterm");

    LemmaCertificate cert;
    cert.e = e;
    cert.variable = v;
    cert.g = substitute_self(e, v, diag_t(var_t(v)));
    cert.goedel_g = goedel_number(*cert.g);
    cert.c = substitute(cert.g, v, num(cert.goedel_g));
    cert.goedel_c = goedel_number(*cert.c);
    cert.reduced = reduce_diag(cert.c);
    cert.target = reduce_diag(cert.raw_target());
    cert.verified = *cert.reduced == *cert.target;
    return cert;
}

std::string to_string(SentenceKind k)
{
    switch (k) {
    case SentenceKind::Goedel: return "goedel";
    case SentenceKind::Rosser: return "rosser";
    case SentenceKind::Tarski: return "tarski";
    case SentenceKind::Parikh: return "parikh";
    case SentenceKind::Curry: return "curry";
    }
    return "?";
}

FormulaPtr goedel_formula()
{
    return for_all(var::y, not_f(pred(sym::Prov, {var_t(var::y), var_t(var::x)})));
}

FormulaPtr rosser_formula()
{
    auto proof_of_negation = exists(
        var::w, and_f(less(var_t(var::w), var_t(var::y)),
                      pred(sym::Prov, {var_t(var::w), neg_t(var_t(var::x))})));
    return for_all(var::y,
                   imp(pred(sym::Prov, {var_t(var::y), var_t(var::x)}), proof_of_negation));
}

FormulaPtr tarski_formula()
{
    return not_f(pred(sym::T, {var_t(var::x)}));
}

FormulaPtr parikh_formula(const Natural& n)
{
    require(n >= 1, "proof-length bound must be at least 1");
    return not_f(exists(var::m, and_f(less(var_t(var::m), num(n)),
                                      pred(sym::Prflen, {var_t(var::m), var_t(var::x)}))));
}

FormulaPtr curry_formula(const FormulaPtr& a)
{
    require(a != nullptr, "curry sentence needs a consequent formula");
    require(free_vars(*a).empty(), "curry consequent must be a closed formula");
    return imp(unquote(var_t(var::x)), a);
}

LemmaCertificate named_sentence(SentenceKind kind, const Natural& n, const FormulaPtr& a)
{
    switch (kind) {
    case SentenceKind::Goedel: return diagonal_sentence(goedel_formula(), var::x);
    case SentenceKind::Rosser: return diagonal_sentence(rosser_formula(), var::x);
    case SentenceKind::Tarski: return diagonal_sentence(tarski_formula(), var::x);
    case SentenceKind::Parikh: return diagonal_sentence(parikh_formula(n), var::x);
    case SentenceKind::Curry: return diagonal_sentence(curry_formula(a), var::x);
    }
    throw InputError("unknown sentence kind");
}

} // namespace lawvere::formal
