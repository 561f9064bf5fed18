#include "lawvere/universe/constructions.hpp"

#include <algorithm>

namespace lawvere::universe {

namespace {

// Fuel used by h = (ifz (run decider %1) a b) around the decider call.
constexpr std::uint64_t kRiceOverhead = 5;

bool same_behaviour(const Outcome& l, const Outcome& r)
{
    if (is_value(l) && is_value(r)) {
        return std::get<Value>(l) == std::get<Value>(r);
    }
    return !is_value(l) && !is_value(r);
}

bool all_agree(const std::vector<Sample>& samples)
{
    return std::all_of(samples.begin(), samples.end(), [](const Sample& s) { return s.agree; });
}

std::vector<Natural> first_naturals(unsigned count)
{
    std::vector<Natural> out;
    for (unsigned i = 0; i < count; ++i) {
        out.emplace_back(i);
    }
    return out;
}

} // namespace

ExprPtr specialize(const Expr& e, const Natural& y)
{
    switch (e.op()) {
    case Op::Var:
        if (e.number() == 1) {
            return constant(y);
        }
        if (e.number() >= 2) {
            return var(e.number() - 1);
        }
        return var(e.number());
    case Op::Const:
        return constant(e.number());
    default:
        break;
    }
    std::array<ExprPtr, 3> kids;
    for (std::size_t i = 0; i < e.arity(); ++i) {
        kids[i] = specialize(*e.child(i), y);
    }
    return std::make_shared<const Expr>(e.op(), Natural(0), std::move(kids));
}

ProgramIndex smn_meta(const Natural& p, const Natural& y)
{
    return index_of(*specialize(*decode(p), y));
}

ProgramIndex recursion_fixed_point(const ProgramIndex& h)
{
    // D(m, x) = phi_{h(phi_m(m))}(x); t specializes D at its own index.
    ExprPtr d_body = run(run(constant(h.code), run(var(1), var(1))), var(2));
    Natural d = encode(*d_body);
    Natural t = encode(*smn(constant(d), var(1)));
    return smn_meta(d, t);
}

ProgramIndex quine_transformer()
{
    return index_of(*smn(constant(10), var(1)));
}

ProgramIndex quine()
{
    return recursion_fixed_point(quine_transformer());
}

ProgramIndex omega()
{
    Natural self_apply = encode(*run(var(1), var(1)));
    return index_of(*run(constant(self_apply), constant(self_apply)));
}

std::string to_string(HaltVerdict v)
{
    switch (v) {
    case HaltVerdict::SaidHaltButDiverged: return "SaidHaltButDiverged";
    case HaltVerdict::SaidDivergeButHalted: return "SaidDivergeButHalted";
    case HaltVerdict::CandidateNotTotal: return "CandidateNotTotal";
    }
    return "?";
}

bool RefutationWitness::consistent() const
{
    switch (verdict) {
    case HaltVerdict::CandidateNotTotal:
        return !is_value(candidate_answer);
    case HaltVerdict::SaidDivergeButHalted:
        return candidate_answer == Outcome{Value{0}} && g_run == Outcome{Value{1}};
    case HaltVerdict::SaidHaltButDiverged:
        return is_value(candidate_answer) && std::get<Value>(candidate_answer).n != 0 &&
               std::holds_alternative<Diverged>(g_run);
    }
    return false;
}

RefutationWitness refute_halting(const ProgramIndex& candidate, std::uint64_t fuel)
{
    ExprPtr g_body = if_zero(run(smn(constant(candidate.code), var(1)), var(1)), constant(1),
                             decode(omega().code));
    ProgramIndex g = index_of(*g_body);

    Outcome answer = eval(candidate, {g.code, g.code}, fuel);
    Outcome g_run = evaluate(g_body, std::vector<Natural>{g.code}, fuel + kRefutationOverhead).outcome;

    HaltVerdict verdict = HaltVerdict::CandidateNotTotal;
    if (const auto* v = std::get_if<Value>(&answer)) {
        verdict = v->n == 0 ? HaltVerdict::SaidDivergeButHalted : HaltVerdict::SaidHaltButDiverged;
    }
    return RefutationWitness{candidate, std::move(g), std::move(answer), std::move(g_run), verdict,
                             fuel};
}

std::vector<Sample> compare_behaviour(const ProgramIndex& p, const ProgramIndex& q,
                                      const std::vector<Natural>& inputs, std::uint64_t fuel,
                                      std::uint64_t retry_fuel)
{
    std::vector<Sample> out;
    out.reserve(inputs.size());
    for (const Natural& x : inputs) {
        Outcome l = eval(p, {x}, fuel);
        Outcome r = eval(q, {x}, fuel);
        if (!same_behaviour(l, r) && retry_fuel > fuel) {
            l = eval(p, {x}, retry_fuel);
            r = eval(q, {x}, retry_fuel);
        }
        bool agree = same_behaviour(l, r);
        out.push_back(Sample{x, std::move(l), std::move(r), agree});
    }
    return out;
}

bool RecursionCheck::verified() const
{
    return is_value(h_of_n0) && !samples.empty() && all_agree(samples);
}

RecursionCheck check_recursion_fixed_point(const ProgramIndex& h,
                                           const std::vector<Natural>& inputs,
                                           std::uint64_t fuel, std::uint64_t retry_fuel)
{
    ProgramIndex n0 = recursion_fixed_point(h);
    Outcome hn = eval(h, {n0.code}, fuel);
    std::vector<Sample> samples;
    if (const auto* v = std::get_if<Value>(&hn)) {
        samples = compare_behaviour(n0, ProgramIndex{v->n}, inputs, fuel, retry_fuel);
    }
    return RecursionCheck{h, std::move(n0), std::move(hn), std::move(samples)};
}

std::string to_string(RiceVerdict v)
{
    return v == RiceVerdict::Contradiction ? "Contradiction" : "DeciderNotTotal";
}

bool RiceReport::claims_member() const
{
    const auto* v = std::get_if<Value>(&decider_answer);
    return v != nullptr && v->n != 0;
}

bool RiceReport::verified() const
{
    if (verdict == RiceVerdict::DeciderNotTotal) {
        return !is_value(decider_answer);
    }
    if (!is_value(decider_answer)) {
        return false;
    }
    const ProgramIndex& expected = claims_member() ? b : a;
    return h_value == Outcome{Value{expected.code}} && !samples.empty() && all_agree(samples);
}

RiceReport rice_contradiction(const ProgramIndex& decider, const ProgramIndex& a,
                              const ProgramIndex& b, std::uint64_t fuel)
{
    ExprPtr h_body = if_zero(run(constant(decider.code), var(1)), constant(a.code), constant(b.code));
    ProgramIndex h = index_of(*h_body);
    ProgramIndex n0 = recursion_fixed_point(h);

    Outcome answer = eval(decider, {n0.code}, fuel);
    Outcome hn = eval(h, {n0.code}, fuel + kRiceOverhead);

    RiceReport report{decider, a, b, h, n0, std::move(answer), std::move(hn), {},
                      RiceVerdict::DeciderNotTotal};
    if (is_value(report.decider_answer)) {
        report.verdict = RiceVerdict::Contradiction;
        if (const auto* v = std::get_if<Value>(&report.h_value)) {
            report.samples =
                compare_behaviour(n0, ProgramIndex{v->n}, first_naturals(5), fuel, 10 * fuel);
        }
    }
    return report;
}

bool halts_within(const ProgramIndex& program, const Natural& input, std::uint64_t fuel)
{
    return is_value(eval(program, {input}, fuel));
}

instances::DescribesMatrix bounded_halting_matrix(std::size_t n, std::uint64_t fuel)
{
    instances::DescribesMatrix m;
    m.labels.reserve(n);
    m.rel.assign(n, std::vector<bool>(n));
    std::vector<ExprPtr> bodies;
    bodies.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        m.labels.push_back(std::to_string(j));
        bodies.push_back(decode(Natural(static_cast<unsigned long>(j))));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Natural> arg{Natural(static_cast<unsigned long>(i))};
        for (std::size_t j = 0; j < n; ++j) {
            m.rel[i][j] = is_value(evaluate(bodies[j], arg, fuel).outcome);
        }
    }
    return m;
}

} // namespace lawvere::universe
