#pragma once

// Finite evaluation matrices f : T x S -> Y, endomaps of Y, and the
// diagonal constructions over them: the Cantor-style non-representability
// certificate and its fixed-point counterpart.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lawvere::diagonal {

using Index = std::size_t;

/// A finite set {0, ..., size-1}, optionally labelled.
class Carrier {
public:
    /// Throws InputError if size == 0, label count differs from size, or
    /// labels repeat.
    explicit Carrier(std::size_t size, std::vector<std::string> labels = {});

    std::size_t size() const { return size_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// The element's label, or its decimal index when unlabelled.
    std::string label(Index i) const;

    friend bool operator==(const Carrier&, const Carrier&) = default;

private:
    std::size_t size_;
    std::vector<std::string> labels_;
};

/// Total self-map of a carrier.
class EndoMap {
public:
    EndoMap(Carrier carrier, std::vector<Index> map);

    static EndoMap identity(const Carrier& carrier);

    const Carrier& carrier() const { return carrier_; }
    std::span<const Index> map() const { return map_; }
    Index operator()(Index y) const { return map_.at(y); }

private:
    Carrier carrier_;
    std::vector<Index> map_;
};

/// Tabulation of f : T x S -> Y. Rows are T, columns are S.
class EvalMatrix {
public:
    EvalMatrix(Carrier rows, Carrier cols, Carrier y, std::vector<std::vector<Index>> cells);

    const Carrier& rows() const { return rows_; }
    const Carrier& cols() const { return cols_; }
    const Carrier& y() const { return y_; }
    bool is_square() const { return rows_.size() == cols_.size(); }

    Index at(Index t, Index s) const { return cells_.at(t).at(s); }
    std::vector<Index> column(Index s) const;
    const std::vector<std::vector<Index>>& cells() const { return cells_; }

private:
    Carrier rows_;
    Carrier cols_;
    Carrier y_;
    std::vector<std::vector<Index>> cells_;
};

/// beta : T -> S together with a chosen right inverse beta_bar : S -> T,
/// i.e. beta[beta_bar[s]] == s for every s. |T| = beta.size(),
/// |S| = beta_bar.size().
class Section {
public:
    Section(std::vector<Index> beta, std::vector<Index> beta_bar);

    /// beta = beta_bar = identity on n elements.
    static Section diagonal(std::size_t n);

    std::span<const Index> beta() const { return beta_; }
    std::span<const Index> beta_bar() const { return beta_bar_; }

private:
    std::vector<Index> beta_;
    std::vector<Index> beta_bar_;
};

/// A map g : T -> Y.
struct YMap {
    Carrier domain;
    Carrier y;
    std::vector<Index> values;

    friend bool operator==(const YMap&, const YMap&) = default;
};

/// g differs from every column s of f, at row witness[s].
struct NonRepresentabilityReport {
    YMap g;
    std::vector<Index> witness;

    /// Re-checks every recorded inequality against f.
    bool verify(const EvalMatrix& f) const;
};

/// g = alpha . f . diag is column `column` of f, so value = f(column, column)
/// is a fixed point of alpha.
struct FixedPointWitness {
    Index column;
    Index value;

    bool verify(const EvalMatrix& f, const EndoMap& alpha) const;

    friend bool operator==(const FixedPointWitness&, const FixedPointWitness&) = default;
};

/// g(t) = alpha(f(t, t)). Requires f square and alpha on f's Y.
YMap compose_diagonal(const EvalMatrix& f, const EndoMap& alpha);

/// g(t) = alpha(f(t, beta(t))).
YMap compose_with_section(const EvalMatrix& f, const EndoMap& alpha, const Section& sec);

/// All columns s with g(t) == f(t, s) for every t. Empty: g not representable.
std::vector<Index> representing_columns(const YMap& g, const EvalMatrix& f);

std::vector<Index> fixed_points(const EndoMap& alpha);

/// Builds g (diagonal form, or section form when `sec` is given) and records,
/// for each column s, the row where the proof shows g and f(-, s) differ:
/// t = s, or t = beta_bar(s). Throws NotApplicable if alpha has a fixed point.
NonRepresentabilityReport cantor_witness(const EvalMatrix& f, const EndoMap& alpha,
                                         const std::optional<Section>& sec = std::nullopt);

/// If g = alpha . f . diag is representable, returns the smallest representing
/// column and the fixed point it yields.
std::optional<FixedPointWitness> weak_diagonal_fixed_point(const EvalMatrix& f,
                                                           const EndoMap& alpha);

} // namespace lawvere::diagonal
