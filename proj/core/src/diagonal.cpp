#include "lawvere/diagonal.hpp"

#include "lawvere/errors.hpp"

#include <algorithm>
#include <set>

namespace lawvere::diagonal {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw InputError(what);
    }
}

void require_on_y(const EndoMap& alpha, const EvalMatrix& f)
{
    require(alpha.carrier().size() == f.y().size(),
            "endomap carrier has " + std::to_string(alpha.carrier().size()) +
                " elements but the matrix codomain has " + std::to_string(f.y().size()));
}

} // namespace

Carrier::Carrier(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels))
{
    require(size_ >= 1, "carrier must be non-empty");
    if (!labels_.empty()) {
        require(labels_.size() == size_, "carrier of size " + std::to_string(size_) + " given " +
                                             std::to_string(labels_.size()) + " labels");
        std::set<std::string> seen(labels_.begin(), labels_.end());
        require(seen.size() == labels_.size(), "carrier labels must be distinct");
    }
}

std::string Carrier::label(Index i) const
{
    return has_labels() ? labels_.at(i) : std::to_string(i);
}

EndoMap::EndoMap(Carrier carrier, std::vector<Index> map)
    : carrier_(std::move(carrier)), map_(std::move(map))
{
    require(map_.size() == carrier_.size(), "endomap needs one entry per carrier element");
    for (Index v : map_) {
        require(v < carrier_.size(), "endomap entry " + std::to_string(v) + " out of range");
    }
}

EndoMap EndoMap::identity(const Carrier& carrier)
{
    std::vector<Index> map(carrier.size());
    for (Index i = 0; i < map.size(); ++i) {
        map[i] = i;
    }
    return EndoMap(carrier, std::move(map));
}

EvalMatrix::EvalMatrix(Carrier rows, Carrier cols, Carrier y,
                       std::vector<std::vector<Index>> cells)
    : rows_(std::move(rows)), cols_(std::move(cols)), y_(std::move(y)), cells_(std::move(cells))
{
    require(cells_.size() == rows_.size(), "matrix has " + std::to_string(cells_.size()) +
                                               " rows, expected " + std::to_string(rows_.size()));
    for (Index t = 0; t < cells_.size(); ++t) {
        require(cells_[t].size() == cols_.size(),
                "matrix row " + std::to_string(t) + " has " + std::to_string(cells_[t].size()) +
                    " cells, expected " + std::to_string(cols_.size()));
        for (Index v : cells_[t]) {
            require(v < y_.size(), "matrix cell value " + std::to_string(v) + " in row " +
                                       std::to_string(t) + " out of range");
        }
    }
}

std::vector<Index> EvalMatrix::column(Index s) const
{
    std::vector<Index> out;
    out.reserve(cells_.size());
    for (const auto& row : cells_) {
        out.push_back(row.at(s));
    }
    return out;
}

Section::Section(std::vector<Index> beta, std::vector<Index> beta_bar)
    : beta_(std::move(beta)), beta_bar_(std::move(beta_bar))
{
    require(!beta_.empty() && !beta_bar_.empty(), "section maps must be non-empty");
    for (Index s : beta_) {
        require(s < beta_bar_.size(), "beta entry " + std::to_string(s) + " out of range");
    }
    for (Index s = 0; s < beta_bar_.size(); ++s) {
        Index t = beta_bar_[s];
        require(t < beta_.size(), "beta_bar entry " + std::to_string(t) + " out of range");
        require(beta_[t] == s, "beta_bar is not a right inverse of beta at s=" +
                                   std::to_string(s) + " (beta is not onto)");
    }
}

Section Section::diagonal(std::size_t n)
{
    std::vector<Index> id(n);
    for (Index i = 0; i < n; ++i) {
        id[i] = i;
    }
    return Section(id, id);
}

bool NonRepresentabilityReport::verify(const EvalMatrix& f) const
{
    if (g.values.size() != f.rows().size() || witness.size() != f.cols().size()) {
        return false;
    }
    for (Index s = 0; s < witness.size(); ++s) {
        Index t = witness[s];
        if (t >= g.values.size() || g.values[t] == f.at(t, s)) {
            return false;
        }
    }
    return true;
}

bool FixedPointWitness::verify(const EvalMatrix& f, const EndoMap& alpha) const
{
    if (!f.is_square() || column >= f.rows().size() || value >= alpha.carrier().size()) {
        return false;
    }
    return alpha(value) == value && f.at(column, column) == value &&
           alpha(f.at(column, column)) == f.at(column, column);
}

YMap compose_diagonal(const EvalMatrix& f, const EndoMap& alpha)
{
    require(f.is_square(), "diagonal composition needs a square matrix (S = T)");
    require_on_y(alpha, f);
    std::vector<Index> values(f.rows().size());
    for (Index t = 0; t < values.size(); ++t) {
        values[t] = alpha(f.at(t, t));
    }
    return YMap{f.rows(), f.y(), std::move(values)};
}

YMap compose_with_section(const EvalMatrix& f, const EndoMap& alpha, const Section& sec)
{
    require_on_y(alpha, f);
    require(sec.beta().size() == f.rows().size(), "beta must have one entry per row");
    require(sec.beta_bar().size() == f.cols().size(), "beta_bar must have one entry per column");
    std::vector<Index> values(f.rows().size());
    for (Index t = 0; t < values.size(); ++t) {
        values[t] = alpha(f.at(t, sec.beta()[t]));
    }
    return YMap{f.rows(), f.y(), std::move(values)};
}

std::vector<Index> representing_columns(const YMap& g, const EvalMatrix& f)
{
    require(g.values.size() == f.rows().size(), "map domain does not match matrix rows");
    require(g.y.size() == f.y().size(), "map codomain does not match matrix codomain");
    std::vector<Index> out;
    for (Index s = 0; s < f.cols().size(); ++s) {
        bool same = true;
        for (Index t = 0; t < g.values.size() && same; ++t) {
            same = g.values[t] == f.at(t, s);
        }
        if (same) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Index> fixed_points(const EndoMap& alpha)
{
    std::vector<Index> out;
    for (Index y = 0; y < alpha.carrier().size(); ++y) {
        if (alpha(y) == y) {
            out.push_back(y);
        }
    }
    return out;
}

NonRepresentabilityReport cantor_witness(const EvalMatrix& f, const EndoMap& alpha,
                                         const std::optional<Section>& sec)
{
    require_on_y(alpha, f);
    if (auto fixed = fixed_points(alpha); !fixed.empty()) {
        throw NotApplicable("endomap has a fixed point at " + alpha.carrier().label(fixed.front()) +
                            "; the non-representability argument needs a fixed-point-free map");
    }
    NonRepresentabilityReport report{
        sec ? compose_with_section(f, alpha, *sec) : compose_diagonal(f, alpha), {}};
    report.witness.resize(f.cols().size());
    for (Index s = 0; s < f.cols().size(); ++s) {
        report.witness[s] = sec ? sec->beta_bar()[s] : s;
    }
    if (!report.verify(f)) {
        // Unreachable for a fixed-point-free alpha: g(t) = alpha(f(t, s)) != f(t, s).
        throw std::logic_error("constructed non-representability report failed to verify");
    }
    return report;
}

std::optional<FixedPointWitness> weak_diagonal_fixed_point(const EvalMatrix& f,
                                                           const EndoMap& alpha)
{
    YMap g = compose_diagonal(f, alpha);
    auto columns = representing_columns(g, f);
    if (columns.empty()) {
        return std::nullopt;
    }
    Index t = columns.front();
    return FixedPointWitness{t, f.at(t, t)};
}

} // namespace lawvere::diagonal
