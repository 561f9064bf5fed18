#include "lawvere/cli/formats.hpp"

#include "lawvere/errors.hpp"

#include <fstream>
#include <sstream>

namespace lawvere::cli {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what)
{
    throw InputError("field '" + field + "': " + what);
}

const json& require_field(const json& j, const std::string& field)
{
    if (!j.is_object()) {
        throw InputError("input must be a JSON object");
    }
    auto it = j.find(field);
    if (it == j.end()) {
        field_error(field, "missing");
    }
    return *it;
}

std::vector<std::size_t> index_array(const json& j, const std::string& field)
{
    if (!j.is_array()) {
        field_error(field, "expected an array of non-negative integers");
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned()) {
            field_error(field + "[" + std::to_string(i) + "]", "expected a non-negative integer");
        }
        out.push_back(j[i].get<std::size_t>());
    }
    return out;
}

std::vector<std::string> string_array(const json& j, const std::string& field)
{
    if (!j.is_array()) {
        field_error(field, "expected an array of strings");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
            field_error(field + "[" + std::to_string(i) + "]", "expected a string");
        }
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::vector<std::string> optional_labels(const json& j, const std::string& field)
{
    auto it = j.find(field);
    return it == j.end() ? std::vector<std::string>{} : string_array(*it, field);
}

diagonal::Carrier carrier(std::size_t size, std::vector<std::string> labels,
                          const std::string& field)
{
    if (!labels.empty() && labels.size() != size) {
        field_error(field, "has " + std::to_string(labels.size()) + " labels, expected " +
                               std::to_string(size));
    }
    try {
        return diagonal::Carrier(size, std::move(labels));
    } catch (const InputError& e) {
        field_error(field, e.what());
    }
}

template <typename Build>
auto with_field(const std::string& field, Build build)
{
    try {
        return build();
    } catch (const InputError& e) {
        field_error(field, e.what());
    }
}

} // namespace

MatrixFile parse_matrix_file(const json& j, bool with_section)
{
    const json& f_json = require_field(j, "f");
    if (!f_json.is_array() || f_json.empty()) {
        field_error("f", "expected a non-empty array of rows");
    }
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t t = 0; t < f_json.size(); ++t) {
        cells.push_back(index_array(f_json[t], "f[" + std::to_string(t) + "]"));
    }
    const std::size_t cols = cells.front().size();
    if (cols == 0) {
        field_error("f[0]", "rows must be non-empty");
    }

    auto alpha_map = index_array(require_field(j, "alpha"), "alpha");
    if (alpha_map.empty()) {
        field_error("alpha", "must be non-empty");
    }
    auto y = carrier(alpha_map.size(), optional_labels(j, "y_labels"), "y_labels");
    auto t_labels = optional_labels(j, "t_labels");
    auto s_labels = optional_labels(j, "s_labels");
    if (s_labels.empty() && cols == cells.size()) {
        s_labels = t_labels;
    }
    auto rows = carrier(cells.size(), std::move(t_labels), "t_labels");
    auto columns = carrier(cols, std::move(s_labels), "s_labels");

    auto alpha = with_field("alpha", [&] { return diagonal::EndoMap(y, alpha_map); });
    auto f = with_field("f", [&] { return diagonal::EvalMatrix(rows, columns, y, cells); });

    std::optional<diagonal::Section> section;
    if (with_section) {
        auto beta = index_array(require_field(j, "beta"), "beta");
        auto beta_bar = index_array(require_field(j, "beta_bar"), "beta_bar");
        if (beta.size() != rows.size()) {
            field_error("beta", "needs one entry per row (" + std::to_string(rows.size()) + ")");
        }
        if (beta_bar.size() != columns.size()) {
            field_error("beta_bar",
                        "needs one entry per column (" + std::to_string(columns.size()) + ")");
        }
        section = with_field("beta_bar", [&] { return diagonal::Section(beta, beta_bar); });
    } else if (!f.is_square()) {
        field_error("f", "diagonal form needs a square matrix; use --section for T != S");
    }
    return MatrixFile{std::move(f), std::move(alpha), std::move(section)};
}

instances::DescribesMatrix describes_from_matrix_file(const json& j)
{
    MatrixFile mf = parse_matrix_file(j, false);
    if (mf.alpha.carrier().size() != 2 || mf.alpha(0) != 1 || mf.alpha(1) != 0) {
        field_error("alpha", "a describes-relation needs the negation map [1, 0]");
    }
    instances::DescribesMatrix m;
    m.labels = mf.f.rows().has_labels() ? mf.f.rows().labels() : std::vector<std::string>{};
    for (const auto& row : mf.f.cells()) {
        std::vector<bool> bits;
        for (auto v : row) {
            bits.push_back(v == 1);
        }
        m.rel.push_back(std::move(bits));
    }
    return m;
}

instances::SubsetFamily parse_subset_family(const json& j)
{
    const json& n_json = require_field(j, "universe_size");
    if (!n_json.is_number_unsigned() || n_json.get<std::size_t>() == 0) {
        field_error("universe_size", "expected a positive integer");
    }
    const std::size_t n = n_json.get<std::size_t>();
    const json& subsets = require_field(j, "subsets");
    if (!subsets.is_array() || subsets.size() != n) {
        field_error("subsets", "expected exactly " + std::to_string(n) + " subsets");
    }
    instances::SubsetFamily fam{n, {}};
    for (std::size_t s = 0; s < n; ++s) {
        std::string field = "subsets[" + std::to_string(s) + "]";
        std::vector<bool> bits(n);
        for (auto e : index_array(subsets[s], field)) {
            if (e >= n) {
                field_error(field, "element " + std::to_string(e) + " outside the universe");
            }
            bits[e] = true;
        }
        fam.members.push_back(std::move(bits));
    }
    return fam;
}

instances::TriValuedMatrix parse_trivalued(const json& j)
{
    instances::TriValuedMatrix m;
    m.labels = string_array(require_field(j, "labels"), "labels");
    const json& table = require_field(j, "table");
    if (!table.is_array() || table.size() != m.labels.size()) {
        field_error("table", "expected one row per label");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        std::string field = "table[" + std::to_string(i) + "]";
        std::vector<instances::Truth> row;
        for (const auto& cell : string_array(table[i], field)) {
            row.push_back(with_field(field, [&] { return instances::parse_truth(cell); }));
        }
        m.cells.push_back(std::move(row));
    }
    return m;
}

instances::DigitMatrix parse_digit_table(const json& j)
{
    instances::DigitMatrix m;
    m.labels = string_array(require_field(j, "labels"), "labels");
    auto expansions = string_array(require_field(j, "expansions"), "expansions");
    const std::size_t n = expansions.size();
    if (n == 0 || m.labels.size() != n) {
        field_error("expansions", "expected one non-empty expansion per label");
    }
    m.cells.assign(n, std::vector<std::uint8_t>(n));
    for (std::size_t col = 0; col < n; ++col) {
        const std::string& e = expansions[col];
        std::string field = "expansions[" + std::to_string(col) + "]";
        if (e.size() < 2 || e[0] != '0' || e[1] != '.') {
            field_error(field, "expected a decimal expansion of the form 0.ddd");
        }
        std::string places = "0" + e.substr(2);
        if (places.size() < n) {
            field_error(field, "needs at least " + std::to_string(n - 1) + " decimals");
        }
        for (std::size_t row = 0; row < n; ++row) {
            char c = places[row];
            if (c < '0' || c > '9') {
                field_error(field, "non-digit character '" + std::string(1, c) + "'");
            }
            m.cells[row][col] = static_cast<std::uint8_t>(c - '0');
        }
    }
    return m;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}

} // namespace lawvere::cli
