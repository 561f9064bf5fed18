#include "lawvere/universe/expr.hpp"

#include "lawvere/errors.hpp"
#include "lawvere/sexpr.hpp"

#include <map>

namespace lawvere::universe {

namespace {

ExprPtr make(Op op, Natural n, ExprPtr a = nullptr, ExprPtr b = nullptr, ExprPtr c = nullptr)
{
    return std::make_shared<const Expr>(op, std::move(n),
                                        std::array<ExprPtr, 3>{std::move(a), std::move(b),
                                                               std::move(c)});
}

const std::map<std::string, Op, std::less<>>& keyword_ops()
{
    static const std::map<std::string, Op, std::less<>> table{
        {"succ", Op::Succ}, {"pred", Op::Pred}, {"ifz", Op::IfZero}, {"pair", Op::Pair},
        {"fst", Op::Fst},   {"snd", Op::Snd},   {"run", Op::Run},    {"smn", Op::Smn},
    };
    return table;
}

std::string_view keyword(Op op)
{
    switch (op) {
    case Op::Succ: return "succ";
    case Op::Pred: return "pred";
    case Op::IfZero: return "ifz";
    case Op::Pair: return "pair";
    case Op::Fst: return "fst";
    case Op::Snd: return "snd";
    case Op::Run: return "run";
    case Op::Smn: return "smn";
    case Op::Var:
    case Op::Const: break;
    }
    return "?";
}

void print(const Expr& e, std::string& out)
{
    switch (e.op()) {
    case Op::Var:
        out += '%';
        out += to_decimal(e.number());
        return;
    case Op::Const:
        out += to_decimal(e.number());
        return;
    default:
        break;
    }
    out += '(';
    out += keyword(e.op());
    for (std::size_t i = 0; i < e.arity(); ++i) {
        out += ' ';
        print(*e.child(i), out);
    }
    out += ')';
}

ExprPtr from_node(const sexpr::Node& node)
{
    if (node.is_atom()) {
        const std::string& a = node.atom;
        if (auto n = parse_decimal(a)) {
            return constant(std::move(*n));
        }
        if (a.size() > 1 && a[0] == '%') {
            if (auto n = parse_decimal(std::string_view(a).substr(1))) {
                return var(std::move(*n));
            }
        }
        throw InputError("unknown program atom '" + a + "' " + sexpr::where(node));
    }
    if (node.items.empty() || !node.items[0].is_atom()) {
        throw InputError("expected an operator name " + sexpr::where(node));
    }
    const auto& ops = keyword_ops();
    auto it = ops.find(node.items[0].atom);
    if (it == ops.end()) {
        throw InputError("unknown program operator '" + node.items[0].atom + "' " +
                         sexpr::where(node.items[0]));
    }
    Op op = it->second;
    std::size_t want = Expr(op, 0, {}).arity();
    if (node.items.size() != want + 1) {
        throw InputError(std::string(keyword(op)) + " takes " + std::to_string(want) +
                         " argument(s) " + sexpr::where(node));
    }
    std::array<ExprPtr, 3> kids;
    for (std::size_t i = 0; i < want; ++i) {
        kids[i] = from_node(node.items[i + 1]);
    }
    return std::make_shared<const Expr>(op, Natural(0), std::move(kids));
}

} // namespace

Expr::Expr(Op op, Natural number, std::array<ExprPtr, 3> kids)
    : op_(op), number_(std::move(number)), kids_(std::move(kids))
{
}

std::size_t Expr::arity() const
{
    switch (op_) {
    case Op::Var:
    case Op::Const: return 0;
    case Op::Succ:
    case Op::Pred:
    case Op::Fst:
    case Op::Snd: return 1;
    case Op::Pair:
    case Op::Run:
    case Op::Smn: return 2;
    case Op::IfZero: return 3;
    }
    return 0;
}

bool operator==(const Expr& a, const Expr& b)
{
    if (&a == &b) {
        return true;
    }
    if (a.op_ != b.op_ || a.number_ != b.number_) {
        return false;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!(*a.kids_[i] == *b.kids_[i])) {
            return false;
        }
    }
    return true;
}

ExprPtr var(Natural index) { return make(Op::Var, std::move(index)); }
ExprPtr constant(Natural value) { return make(Op::Const, std::move(value)); }
ExprPtr succ(ExprPtr e) { return make(Op::Succ, 0, std::move(e)); }
ExprPtr pred(ExprPtr e) { return make(Op::Pred, 0, std::move(e)); }
ExprPtr if_zero(ExprPtr c, ExprPtr t, ExprPtr e)
{
    return make(Op::IfZero, 0, std::move(c), std::move(t), std::move(e));
}
ExprPtr pair(ExprPtr a, ExprPtr b) { return make(Op::Pair, 0, std::move(a), std::move(b)); }
ExprPtr fst(ExprPtr e) { return make(Op::Fst, 0, std::move(e)); }
ExprPtr snd(ExprPtr e) { return make(Op::Snd, 0, std::move(e)); }
ExprPtr run(ExprPtr p, ExprPtr x) { return make(Op::Run, 0, std::move(p), std::move(x)); }
ExprPtr smn(ExprPtr p, ExprPtr y) { return make(Op::Smn, 0, std::move(p), std::move(y)); }

std::string to_sexpr(const Expr& e)
{
    std::string out;
    print(e, out);
    return out;
}

ExprPtr parse_program(std::string_view text)
{
    return from_node(sexpr::parse(text));
}

} // namespace lawvere::universe
