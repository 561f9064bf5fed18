#include "lawvere/formal/text.hpp"

#include "lawvere/errors.hpp"
#include "lawvere/sexpr.hpp"

namespace lawvere::formal {

namespace {

using sexpr::Node;

[[noreturn]] void fail(const std::string& what, const Node& at)
{
    throw InputError(what + " " + sexpr::where(at));
}

void print_numeral(const Natural& n, const PrintOptions& opts, std::string& out)
{
    std::string digits = to_decimal(n);
    if (opts.max_numeral_digits != 0 && digits.size() > opts.max_numeral_digits) {
        out += "#<" + std::to_string(digits.size()) + " digits>";
        return;
    }
    out += digits;
}

void print(const Term& t, const PrintOptions& opts, std::string& out)
{
    switch (t.kind()) {
    case TermKind::Var:
        out += var_name(t.number());
        return;
    case TermKind::Num:
        print_numeral(t.number(), opts, out);
        return;
    case TermKind::Diag:
    case TermKind::Neg:
        out += t.kind() == TermKind::Diag ? "(diag " : "(neg ";
        print(*t.arg(), opts, out);
        out += ')';
        return;
    }
}

std::string_view keyword(FormulaKind k)
{
    switch (k) {
    case FormulaKind::Less: return "less";
    case FormulaKind::Not: return "not";
    case FormulaKind::And: return "and";
    case FormulaKind::Or: return "or";
    case FormulaKind::Imp: return "imp";
    case FormulaKind::Iff: return "iff";
    case FormulaKind::ForAll: return "forall";
    case FormulaKind::Exists: return "exists";
    case FormulaKind::Unquote: return "unq";
    case FormulaKind::Pred: break;
    }
    return "";
}

void print(const Formula& f, const PrintOptions& opts, std::string& out)
{
    switch (f.kind()) {
    case FormulaKind::Pred:
        if (f.terms().empty()) {
            out += symbol_name(f.code());
            return;
        }
        out += '(' + symbol_name(f.code());
        for (const auto& t : f.terms()) {
            out += ' ';
            print(*t, opts, out);
        }
        out += ')';
        return;
    case FormulaKind::Less:
    case FormulaKind::Unquote:
        out += '(';
        out += keyword(f.kind());
        for (const auto& t : f.terms()) {
            out += ' ';
            print(*t, opts, out);
        }
        out += ')';
        return;
    case FormulaKind::Not:
        out += "(not ";
        print(*f.body(), opts, out);
        out += ')';
        return;
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
        out += '(';
        out += keyword(f.kind());
        out += ' ' + var_name(f.code()) + ' ';
        print(*f.body(), opts, out);
        out += ')';
        return;
    default:
        out += '(';
        out += keyword(f.kind());
        out += ' ';
        print(*f.left(), opts, out);
        out += ' ';
        print(*f.right(), opts, out);
        out += ')';
        return;
    }
}

TermPtr term_from(const Node& node)
{
    if (node.is_atom()) {
        if (auto n = parse_decimal(node.atom)) {
            return num(std::move(*n));
        }
        if (auto v = var_code(node.atom)) {
            return var_t(std::move(*v));
        }
        fail("unknown symbol '" + node.atom + "' in term position", node);
    }
    if (node.items.size() != 2 || !node.items[0].is_atom()) {
        fail("expected (diag t) or (neg t)", node);
    }
    const std::string& head = node.items[0].atom;
    if (head == "diag") {
        return diag_t(term_from(node.items[1]));
    }
    if (head == "neg") {
        return neg_t(term_from(node.items[1]));
    }
    fail("unknown term function '" + head + "'", node.items[0]);
}

FormulaPtr formula_from(const Node& node);

FormulaPtr predicate_from(const Node& head, const std::vector<Node>& args, const Node& whole)
{
    auto code = symbol_code(head.atom);
    if (!code) {
        fail("unknown symbol '" + head.atom + "'", head);
    }
    if (auto arity = symbol_arity(*code); arity && *arity != args.size()) {
        fail(head.atom + " takes " + std::to_string(*arity) + " argument(s), got " +
                 std::to_string(args.size()),
             whole);
    }
    std::vector<TermPtr> terms;
    for (const auto& a : args) {
        terms.push_back(term_from(a));
    }
    return pred(std::move(*code), std::move(terms));
}

FormulaPtr formula_from(const Node& node)
{
    if (node.is_atom()) {
        return predicate_from(node, {}, node);
    }
    if (node.items.empty() || !node.items[0].is_atom()) {
        fail("expected a connective or predicate name", node);
    }
    const Node& head = node.items[0];
    const std::string& h = head.atom;
    const std::size_t n = node.items.size() - 1;
    auto want = [&](std::size_t k) {
        if (n != k) {
            fail(h + " takes " + std::to_string(k) + " argument(s), got " + std::to_string(n), node);
        }
    };
    if (h == "not") {
        want(1);
        return not_f(formula_from(node.items[1]));
    }
    if (h == "and" || h == "or" || h == "imp" || h == "iff") {
        want(2);
        FormulaPtr l = formula_from(node.items[1]);
        FormulaPtr r = formula_from(node.items[2]);
        if (h == "and") return and_f(l, r);
        if (h == "or") return or_f(l, r);
        if (h == "imp") return imp(l, r);
        return iff(l, r);
    }
    if (h == "forall" || h == "exists") {
        want(2);
        const Node& v = node.items[1];
        auto code = v.is_atom() ? var_code(v.atom) : std::nullopt;
        if (!code) {
            fail("expected a variable after " + h, v);
        }
        FormulaPtr body = formula_from(node.items[2]);
        return h == "forall" ? for_all(std::move(*code), body) : exists(std::move(*code), body);
    }
    if (h == "less") {
        want(2);
        return less(term_from(node.items[1]), term_from(node.items[2]));
    }
    if (h == "unq") {
        want(1);
        return unquote(term_from(node.items[1]));
    }
    return predicate_from(head, std::vector<Node>(node.items.begin() + 1, node.items.end()), node);
}

} // namespace

std::string to_text(const Term& t, const PrintOptions& opts)
{
    std::string out;
    print(t, opts, out);
    return out;
}

std::string to_text(const Formula& f, const PrintOptions& opts)
{
    std::string out;
    print(f, opts, out);
    return out;
}

FormulaPtr parse_formula(std::string_view text)
{
    return formula_from(sexpr::parse(text));
}

TermPtr parse_term(std::string_view text)
{
    return term_from(sexpr::parse(text));
}

} // namespace lawvere::formal
