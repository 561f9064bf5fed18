#pragma once

// The classical paradoxes as finite instances of the diagonal construction.
// Each builder tabulates its relation as an EvalMatrix, picks the
// fixed-point-free endomap of the paradox, and returns the diagonal object
// with a certificate that it is missing from every column.

#include "lawvere/diagonal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lawvere::instances {

using diagonal::Index;

/// Subsets S_0 .. S_{n-1} of {0, ..., n-1}; members[m][i] is true iff i in S_m.
struct SubsetFamily {
    std::size_t universe_size = 0;
    std::vector<std::vector<bool>> members;
};

/// rel[i][j] is true iff item j describes (contains, accepts) item i.
/// Russell, Grelling, the Liar and the bounded halting table all fit here.
struct DescribesMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> rel;
};

enum class Truth : std::uint8_t { True = 0, Meaningless = 1, False = 2 };

char truth_letter(Truth v);

struct TriValuedMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<Truth>> cells;
};

/// cells[i][j] is the digit at place 10^-i of the j-th described real; row 0
/// is the units digit.
struct DigitMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint8_t>> cells;
};

/// Everything a caller needs to re-verify an instance through diagonal-core.
template <typename Value>
struct InstanceResult {
    std::vector<Value> diagonal_object;
    diagonal::EvalMatrix matrix;
    diagonal::EndoMap alpha;
    diagonal::NonRepresentabilityReport report;
};

/// G = { i : i not in S_i }.
InstanceResult<bool> powerset_instance(const SubsetFamily& fam);

/// het[i] = not rel[i][i]: the items that do not describe themselves.
InstanceResult<bool> relation_instance(const DescribesMatrix& m);

/// g[i] = alpha(m[i][i]) with alpha(T) = F, alpha(M) = alpha(F) = T.
InstanceResult<Truth> strong_liar_instance(const TriValuedMatrix& m);

/// digits[i] = 9 - m[i][i].
InstanceResult<std::uint8_t> richard_instance(const DigitMatrix& m);

/// The strong-liar endomap on {T, M, F}.
diagonal::EndoMap strong_liar_alpha();

/// The Richard endomap i -> 9 - i on {0, ..., 9}.
diagonal::EndoMap richard_alpha();

/// Boolean negation on {false, true}.
diagonal::EndoMap negation_alpha();

/// Membership matrix of a subset family, viewed as a describes-relation:
/// rel[i][m] = (i in S_m).
DescribesMatrix membership_relation(const SubsetFamily& fam);

/// Parses "T"/"M"/"F". Throws InputError otherwise.
Truth parse_truth(const std::string& s);

} // namespace lawvere::instances
