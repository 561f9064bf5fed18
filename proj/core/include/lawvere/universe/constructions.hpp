#pragma once

// Specialization, the recursion-theorem fixed point and what is built on it:
// the quine, the halting refutation, Rice's contradiction and the bounded
// halting table.

#include "lawvere/instances.hpp"
#include "lawvere/natural.hpp"
#include "lawvere/universe/expr.hpp"
#include "lawvere/universe/machine.hpp"

#include <cstdint>
#include <vector>

namespace lawvere::universe {

/// Index of the unary program obtained from the binary body decode(p) by
/// fixing its first argument to y: %1 becomes the numeral y, %k becomes
/// %(k-1) for k >= 2.
ProgramIndex smn_meta(const Natural& p, const Natural& y);

/// Body-level form of smn_meta.
ExprPtr specialize(const Expr& binary_body, const Natural& y);

/// Kleene's construction: returns n0 with phi_{n0} = phi_{h(n0)} whenever h
/// is total.
ProgramIndex recursion_fixed_point(const ProgramIndex& h);

/// Index of (smn 10 %1): y -> code of the constant-y program (10y + 1).
ProgramIndex quine_transformer();

/// A program q with phi_q(x) = q for every x.
ProgramIndex quine();

/// (run 2208 2208): self-application of (run %1 %1); never halts.
ProgramIndex omega();

/// Fuel used by g around its inner call to the candidate.
inline constexpr std::uint64_t kRefutationOverhead = 7;

enum class HaltVerdict {
    SaidHaltButDiverged,
    SaidDivergeButHalted,
    CandidateNotTotal,
};

std::string to_string(HaltVerdict v);

struct RefutationWitness {
    ProgramIndex candidate;
    ProgramIndex g_index;
    Outcome candidate_answer; // candidate on (g, g) at `fuel`
    Outcome g_run;            // g on g at fuel + kRefutationOverhead
    HaltVerdict verdict;
    std::uint64_t fuel;

    /// The verdict matches the two recorded outcomes.
    bool consistent() const;
};

/// Builds g = (ifz (run (smn candidate %1) %1) 1 omega), the program that
/// does the opposite of what the candidate predicts about it.
RefutationWitness refute_halting(const ProgramIndex& candidate, std::uint64_t fuel);

/// One probe of two programs on the same input.
struct Sample {
    Natural input;
    Outcome left;
    Outcome right;
    bool agree;
};

/// Evaluates p and q on each input at `fuel`. A pair agrees when both give
/// the same Value or neither gives a Value; a disagreement is retried at
/// `retry_fuel` before it is reported.
std::vector<Sample> compare_behaviour(const ProgramIndex& p, const ProgramIndex& q,
                                      const std::vector<Natural>& inputs, std::uint64_t fuel,
                                      std::uint64_t retry_fuel);

struct RecursionCheck {
    ProgramIndex h;
    ProgramIndex n0;
    Outcome h_of_n0;
    std::vector<Sample> samples; // phi_{n0} vs phi_{h(n0)}

    bool verified() const;
};

RecursionCheck check_recursion_fixed_point(const ProgramIndex& h,
                                           const std::vector<Natural>& inputs,
                                           std::uint64_t fuel, std::uint64_t retry_fuel);

enum class RiceVerdict {
    Contradiction,   // decider's answer on n0 is refuted by phi_{n0} = phi_{h(n0)}
    DeciderNotTotal, // decider failed to answer on n0
};

std::string to_string(RiceVerdict v);

struct RiceReport {
    ProgramIndex decider;
    ProgramIndex a; // claimed member of the property
    ProgramIndex b; // claimed non-member
    ProgramIndex h_index;
    ProgramIndex n0;
    Outcome decider_answer;
    Outcome h_value;
    std::vector<Sample> samples; // phi_{n0} vs phi_{h(n0)}
    RiceVerdict verdict;

    /// Decider said "in" (nonzero) or "out" (zero) on n0.
    bool claims_member() const;
    bool verified() const;
};

/// h(x) = a if the decider rejects x, b if it accepts; its fixed point n0
/// behaves like b exactly when the decider puts n0 inside the property.
RiceReport rice_contradiction(const ProgramIndex& decider, const ProgramIndex& a,
                              const ProgramIndex& b, std::uint64_t fuel);

/// True iff program j returns a value on input i within `fuel`.
bool halts_within(const ProgramIndex& program, const Natural& input, std::uint64_t fuel);

/// rel[i][j] = program j halts on input i within fuel, for 0 <= i, j < n.
/// Column j approximates the halting set W_j from below.
instances::DescribesMatrix bounded_halting_matrix(std::size_t n, std::uint64_t fuel);

} // namespace lawvere::universe
