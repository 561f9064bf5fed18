#include "lawvere/universe/machine.hpp"

#include "lawvere/universe/constructions.hpp"

#include <memory>
#include <vector>

namespace lawvere::universe {

namespace {

using Env = std::shared_ptr<const std::vector<Natural>>;

// Pending work after a subexpression returns its value.
struct Frame {
    enum class Kind : std::uint8_t {
        Succ,
        Pred,
        Branch,    // IfZero: condition evaluated
        PairLeft,  // left component evaluated
        PairRight, // both evaluated; `held` is the left value
        Fst,
        Snd,
        RunProgram,
        RunArgument,
        SmnProgram,
        SmnArgument,
    };

    Kind kind;
    ExprPtr owner; // root of the body `node` lives in
    const Expr* node = nullptr;
    Env env;
    Natural held;
};

// Explicit-stack big-step machine. Run in tail position reuses the current
// frame, so self-application loops do not grow the stack.
class Machine {
public:
    Machine(ExprPtr body, Env env, std::uint64_t fuel)
        : current_(std::move(body)), env_(std::move(env)), budget_(fuel), fuel_(fuel)
    {
    }

    Evaluation run()
    {
        Outcome out = loop();
        return Evaluation{std::move(out), budget_ - fuel_};
    }

private:
    ExprPtr current_;
    Env env_;
    std::vector<Frame> stack_;
    std::uint64_t budget_;
    std::uint64_t fuel_;
    const Expr* node_ = nullptr;

    void push(Frame::Kind kind, Natural held = 0)
    {
        stack_.push_back(Frame{kind, current_, node_, env_, std::move(held)});
    }

    void descend(const ExprPtr& child) { node_ = child.get(); }

    Outcome loop()
    {
        node_ = current_.get();
        Natural value;
        bool returning = false;
        for (;;) {
            if (!returning) {
                if (fuel_ == 0) {
                    return Diverged{budget_};
                }
                --fuel_;
                const Expr& e = *node_;
                switch (e.op()) {
                case Op::Var: {
                    const Natural& k = e.number();
                    if (k == 0 || k > env_->size()) {
                        return Stuck{k, env_->size()};
                    }
                    value = (*env_)[k.get_ui() - 1];
                    returning = true;
                    break;
                }
                case Op::Const:
                    value = e.number();
                    returning = true;
                    break;
                case Op::Succ: push(Frame::Kind::Succ); descend(e.child(0)); break;
                case Op::Pred: push(Frame::Kind::Pred); descend(e.child(0)); break;
                case Op::Fst: push(Frame::Kind::Fst); descend(e.child(0)); break;
                case Op::Snd: push(Frame::Kind::Snd); descend(e.child(0)); break;
                case Op::IfZero: push(Frame::Kind::Branch); descend(e.child(0)); break;
                case Op::Pair: push(Frame::Kind::PairLeft); descend(e.child(0)); break;
                case Op::Run: push(Frame::Kind::RunProgram); descend(e.child(0)); break;
                case Op::Smn: push(Frame::Kind::SmnProgram); descend(e.child(0)); break;
                }
                continue;
            }

            if (stack_.empty()) {
                return Value{std::move(value)};
            }
            Frame frame = std::move(stack_.back());
            stack_.pop_back();
            switch (frame.kind) {
            case Frame::Kind::Succ:
                value += 1;
                break;
            case Frame::Kind::Pred:
                if (value > 0) {
                    value -= 1;
                }
                break;
            case Frame::Kind::Fst:
                value = cantor_unpair(value).first;
                break;
            case Frame::Kind::Snd:
                value = cantor_unpair(value).second;
                break;
            case Frame::Kind::Branch:
                current_ = std::move(frame.owner);
                env_ = std::move(frame.env);
                node_ = frame.node->child(value == 0 ? 1 : 2).get();
                returning = false;
                break;
            case Frame::Kind::PairLeft:
            case Frame::Kind::RunProgram:
            case Frame::Kind::SmnProgram: {
                auto next = frame.kind == Frame::Kind::PairLeft     ? Frame::Kind::PairRight
                            : frame.kind == Frame::Kind::RunProgram ? Frame::Kind::RunArgument
                                                                    : Frame::Kind::SmnArgument;
                current_ = std::move(frame.owner);
                env_ = std::move(frame.env);
                node_ = frame.node;
                push(next, std::move(value));
                node_ = frame.node->child(1).get();
                returning = false;
                break;
            }
            case Frame::Kind::PairRight:
                value = cantor_pair(frame.held, value);
                break;
            case Frame::Kind::SmnArgument:
                value = smn_meta(frame.held, value).code;
                break;
            case Frame::Kind::RunArgument: {
                current_ = decode(frame.held);
                node_ = current_.get();
                env_ = std::make_shared<const std::vector<Natural>>(1, std::move(value));
                returning = false;
                break;
            }
            }
        }
    }
};

} // namespace

std::string describe(const Outcome& o)
{
    if (const auto* v = std::get_if<Value>(&o)) {
        return "Value(" + to_decimal(v->n) + ")";
    }
    if (const auto* d = std::get_if<Diverged>(&o)) {
        return "Diverged(fuel=" + std::to_string(d->fuel) + ")";
    }
    const auto& s = std::get<Stuck>(o);
    return "Stuck(%" + to_decimal(s.var_index) + ", arity " + std::to_string(s.arity) + ")";
}

Evaluation evaluate(const ExprPtr& body, std::span<const Natural> args, std::uint64_t fuel)
{
    auto env = std::make_shared<const std::vector<Natural>>(args.begin(), args.end());
    return Machine(body, std::move(env), fuel).run();
}

Outcome eval(const ProgramIndex& p, std::span<const Natural> args, std::uint64_t fuel)
{
    return evaluate(decode(p.code), args, fuel).outcome;
}

Outcome eval(const ProgramIndex& p, std::initializer_list<Natural> args, std::uint64_t fuel)
{
    return eval(p, std::span<const Natural>(args.begin(), args.size()), fuel);
}

} // namespace lawvere::universe
