#include "lawvere/instances.hpp"

#include "lawvere/errors.hpp"

namespace lawvere::instances {

using diagonal::Carrier;
using diagonal::EndoMap;
using diagonal::EvalMatrix;

namespace {

std::vector<std::string> index_labels(std::size_t n)
{
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

template <typename Cell, typename ToIndex>
EvalMatrix square_matrix(const std::vector<std::string>& labels,
                         const std::vector<std::vector<Cell>>& cells, const Carrier& y,
                         ToIndex to_index)
{
    const std::size_t n = cells.size();
    if (n == 0) {
        throw InputError("instance table must have at least one row");
    }
    std::vector<std::vector<Index>> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cells[i].size() != n) {
            throw InputError("instance table row " + std::to_string(i) + " has " +
                             std::to_string(cells[i].size()) + " entries, expected " +
                             std::to_string(n));
        }
        for (const auto& c : cells[i]) {
            idx[i].push_back(to_index(c));
        }
    }
    Carrier items(n, labels.empty() ? index_labels(n) : labels);
    return EvalMatrix(items, items, y, std::move(idx));
}

template <typename Value, typename FromIndex>
InstanceResult<Value> run_instance(EvalMatrix matrix, EndoMap alpha, FromIndex from_index)
{
    auto report = diagonal::cantor_witness(matrix, alpha);
    std::vector<Value> out;
    out.reserve(report.g.values.size());
    for (Index v : report.g.values) {
        out.push_back(from_index(v));
    }
    return InstanceResult<Value>{std::move(out), std::move(matrix), std::move(alpha),
                                 std::move(report)};
}

Carrier boolean_carrier()
{
    return Carrier(2, {"false", "true"});
}

} // namespace

char truth_letter(Truth v)
{
    switch (v) {
    case Truth::True: return 'T';
    case Truth::Meaningless: return 'M';
    case Truth::False: return 'F';
    }
    return '?';
}

Truth parse_truth(const std::string& s)
{
    if (s == "T") return Truth::True;
    if (s == "M") return Truth::Meaningless;
    if (s == "F") return Truth::False;
    throw InputError("expected one of T, M, F but got '" + s + "'");
}

EndoMap strong_liar_alpha()
{
    return EndoMap(Carrier(3, {"T", "M", "F"}), {2, 0, 0});
}

EndoMap richard_alpha()
{
    std::vector<Index> map(10);
    for (Index i = 0; i < 10; ++i) {
        map[i] = 9 - i;
    }
    return EndoMap(Carrier(10), std::move(map));
}

EndoMap negation_alpha()
{
    return EndoMap(boolean_carrier(), {1, 0});
}

DescribesMatrix membership_relation(const SubsetFamily& fam)
{
    const std::size_t n = fam.universe_size;
    if (fam.members.size() != n) {
        throw InputError("subset family needs exactly " + std::to_string(n) + " subsets");
    }
    DescribesMatrix m{index_labels(n), std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
    for (std::size_t s = 0; s < n; ++s) {
        if (fam.members[s].size() != n) {
            throw InputError("subset " + std::to_string(s) + " has the wrong length");
        }
        for (std::size_t i = 0; i < n; ++i) {
            m.rel[i][s] = fam.members[s][i];
        }
    }
    return m;
}

InstanceResult<bool> powerset_instance(const SubsetFamily& fam)
{
    return relation_instance(membership_relation(fam));
}

InstanceResult<bool> relation_instance(const DescribesMatrix& m)
{
    auto matrix = square_matrix(m.labels, m.rel, boolean_carrier(),
                                [](bool b) { return static_cast<Index>(b); });
    return run_instance<bool>(std::move(matrix), negation_alpha(),
                              [](Index v) { return v == 1; });
}

InstanceResult<Truth> strong_liar_instance(const TriValuedMatrix& m)
{
    auto matrix = square_matrix(m.labels, m.cells, strong_liar_alpha().carrier(),
                                [](Truth v) { return static_cast<Index>(v); });
    return run_instance<Truth>(std::move(matrix), strong_liar_alpha(),
                               [](Index v) { return static_cast<Truth>(v); });
}

InstanceResult<std::uint8_t> richard_instance(const DigitMatrix& m)
{
    auto matrix = square_matrix(m.labels, m.cells, richard_alpha().carrier(), [](std::uint8_t d) {
        if (d > 9) {
            throw InputError("digit table entry " + std::to_string(d) + " is not a digit");
        }
        return static_cast<Index>(d);
    });
    return run_instance<std::uint8_t>(std::move(matrix), richard_alpha(),
                                      [](Index v) { return static_cast<std::uint8_t>(v); });
}

} // namespace lawvere::instances
