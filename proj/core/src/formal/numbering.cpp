#include "lawvere/formal/numbering.hpp"

#include <vector>

namespace lawvere::formal {

namespace {

Natural list_code(const std::vector<TermPtr>& terms)
{
    Natural code = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        code = 1 + cantor_pair(term_code(**it), code);
    }
    return code;
}

std::vector<TermPtr> list_of(Natural code)
{
    std::vector<TermPtr> out;
    while (code != 0) {
        auto [head, tail] = cantor_unpair(code - 1);
        out.push_back(term_of(head));
        code = std::move(tail);
    }
    return out;
}

Natural binary(const Formula& f)
{
    return cantor_pair(goedel_number(*f.left()), goedel_number(*f.right()));
}

} // namespace

Natural term_code(const Term& t)
{
    // Diag/Neg chains are encoded iteratively from the innermost term out.
    std::vector<const Term*> chain;
    const Term* p = &t;
    while (p->kind() == TermKind::Diag || p->kind() == TermKind::Neg) {
        chain.push_back(p);
        p = p->arg().get();
    }
    Natural code = 4 * p->number() + static_cast<unsigned>(p->kind());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        code = 4 * code + static_cast<unsigned>((*it)->kind());
    }
    return code;
}

TermPtr term_of(const Natural& code)
{
    std::vector<TermKind> wrappers;
    Natural rest = code;
    for (;;) {
        Natural payload;
        auto tag = static_cast<TermKind>(mpz_fdiv_q_ui(payload.get_mpz_t(), rest.get_mpz_t(), 4));
        if (tag == TermKind::Diag || tag == TermKind::Neg) {
            wrappers.push_back(tag);
            rest = std::move(payload);
            continue;
        }
        TermPtr t = tag == TermKind::Var ? var_t(std::move(payload)) : num(std::move(payload));
        for (auto it = wrappers.rbegin(); it != wrappers.rend(); ++it) {
            t = *it == TermKind::Diag ? diag_t(std::move(t)) : neg_t(std::move(t));
        }
        return t;
    }
}

Natural goedel_number(const Formula& f)
{
    Natural payload;
    switch (f.kind()) {
    case FormulaKind::Pred:
        payload = cantor_pair(f.code(), list_code(f.terms()));
        break;
    case FormulaKind::Less:
        payload = cantor_pair(term_code(*f.terms()[0]), term_code(*f.terms()[1]));
        break;
    case FormulaKind::Not:
        payload = goedel_number(*f.body());
        break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
    case FormulaKind::Iff:
        payload = binary(f);
        break;
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
        payload = cantor_pair(f.code(), goedel_number(*f.body()));
        break;
    case FormulaKind::Unquote:
        payload = term_code(*f.terms()[0]);
        break;
    }
    return 10 * payload + static_cast<unsigned>(f.kind());
}

FormulaPtr formula_of(const Natural& n)
{
    Natural payload;
    auto kind = static_cast<FormulaKind>(mpz_fdiv_q_ui(payload.get_mpz_t(), n.get_mpz_t(), 10));
    switch (kind) {
    case FormulaKind::Pred: {
        auto [symbol, list] = cantor_unpair(payload);
        return pred(std::move(symbol), list_of(std::move(list)));
    }
    case FormulaKind::Less: {
        auto [a, b] = cantor_unpair(payload);
        return less(term_of(a), term_of(b));
    }
    case FormulaKind::Not:
        return not_f(formula_of(payload));
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
    case FormulaKind::Iff: {
        auto [a, b] = cantor_unpair(payload);
        FormulaPtr l = formula_of(a);
        FormulaPtr r = formula_of(b);
        switch (kind) {
        case FormulaKind::And: return and_f(l, r);
        case FormulaKind::Or: return or_f(l, r);
        case FormulaKind::Imp: return imp(l, r);
        default: return iff(l, r);
        }
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
        auto [v, body] = cantor_unpair(payload);
        FormulaPtr b = formula_of(body);
        return kind == FormulaKind::ForAll ? for_all(std::move(v), b) : exists(std::move(v), b);
    }
    case FormulaKind::Unquote:
        return unquote(term_of(payload));
    }
    return nullptr;
}

} // namespace lawvere::formal
