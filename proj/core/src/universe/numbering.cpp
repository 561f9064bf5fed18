#include "lawvere/universe/expr.hpp"

namespace lawvere::universe {

Natural encode(const Expr& e)
{
    Natural payload;
    switch (e.op()) {
    case Op::Var:
    case Op::Const:
        payload = e.number();
        break;
    case Op::Succ:
    case Op::Pred:
    case Op::Fst:
    case Op::Snd:
        payload = encode(*e.child(0));
        break;
    case Op::Pair:
    case Op::Run:
    case Op::Smn:
        payload = cantor_pair(encode(*e.child(0)), encode(*e.child(1)));
        break;
    case Op::IfZero:
        payload = cantor_pair(encode(*e.child(0)),
                              cantor_pair(encode(*e.child(1)), encode(*e.child(2))));
        break;
    }
    return 10 * payload + static_cast<unsigned>(e.op());
}

ExprPtr decode(const Natural& code)
{
    Natural payload;
    unsigned long tag = mpz_fdiv_q_ui(payload.get_mpz_t(), code.get_mpz_t(), 10);
    switch (static_cast<Op>(tag)) {
    case Op::Var: return var(std::move(payload));
    case Op::Const: return constant(std::move(payload));
    case Op::Succ: return succ(decode(payload));
    case Op::Pred: return pred(decode(payload));
    case Op::Fst: return fst(decode(payload));
    case Op::Snd: return snd(decode(payload));
    case Op::Pair:
    case Op::Run:
    case Op::Smn: {
        auto [a, b] = cantor_unpair(payload);
        ExprPtr left = decode(a);
        ExprPtr right = decode(b);
        if (tag == static_cast<unsigned>(Op::Pair)) return pair(left, right);
        if (tag == static_cast<unsigned>(Op::Run)) return run(left, right);
        return smn(left, right);
    }
    case Op::IfZero: {
        auto [c, rest] = cantor_unpair(payload);
        auto [t, e] = cantor_unpair(rest);
        return if_zero(decode(c), decode(t), decode(e));
    }
    }
    return nullptr; // tag is always < 10
}

} // namespace lawvere::universe
