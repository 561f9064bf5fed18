#pragma once

// Fuel-bounded evaluation. Every node visit costs one unit of fuel, shared
// across nested Run calls, so every call terminates and a Value observed at
// fuel F is observed again at any larger fuel.

#include "lawvere/natural.hpp"
#include "lawvere/universe/expr.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <variant>

namespace lawvere::universe {

struct Value {
    Natural n;
    friend bool operator==(const Value&, const Value&) = default;
};

/// Fuel ran out; `fuel` is the budget that was exhausted. Bounded evidence
/// only, never a claim of non-termination.
struct Diverged {
    std::uint64_t fuel;
    friend bool operator==(const Diverged&, const Diverged&) = default;
};

/// A Var referenced an argument that does not exist.
struct Stuck {
    Natural var_index;
    std::size_t arity;
    friend bool operator==(const Stuck&, const Stuck&) = default;
};

using Outcome = std::variant<Value, Diverged, Stuck>;

inline bool is_value(const Outcome& o) { return std::holds_alternative<Value>(o); }

/// "Value(n)", "Diverged(fuel=F)", "Stuck(%k, arity a)".
std::string describe(const Outcome& o);

struct Evaluation {
    Outcome outcome;
    std::uint64_t fuel_used = 0;
};

Evaluation evaluate(const ExprPtr& body, std::span<const Natural> args, std::uint64_t fuel);

Outcome eval(const ProgramIndex& p, std::span<const Natural> args, std::uint64_t fuel);

/// Convenience for literal argument lists.
Outcome eval(const ProgramIndex& p, std::initializer_list<Natural> args, std::uint64_t fuel);

} // namespace lawvere::universe
