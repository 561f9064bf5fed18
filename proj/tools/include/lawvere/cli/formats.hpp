#pragma once

// Input file formats of the command-line tool. All indices are 0-based and
// every validation error names the offending JSON field.

#include "lawvere/diagonal.hpp"
#include "lawvere/instances.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace lawvere::cli {

/// {"y_labels":[..], "t_labels":[..], "s_labels":[..], "alpha":[..],
///  "f":[[..]], "beta":[..]?, "beta_bar":[..]?}
struct MatrixFile {
    diagonal::EvalMatrix f;
    diagonal::EndoMap alpha;
    std::optional<diagonal::Section> section;
};

/// `with_section` requires beta and beta_bar to be present.
MatrixFile parse_matrix_file(const nlohmann::json& j, bool with_section);

/// A two-valued matrix file read as a describes-relation (alpha must be
/// negation).
instances::DescribesMatrix describes_from_matrix_file(const nlohmann::json& j);

/// {"universe_size": n, "subsets": [[members..]..]}
instances::SubsetFamily parse_subset_family(const nlohmann::json& j);

/// {"labels": [..], "table": [["T"|"M"|"F"..]..]}
instances::TriValuedMatrix parse_trivalued(const nlohmann::json& j);

/// {"labels": [..], "expansions": ["0.314159..", ..]}; column j is the j-th
/// expansion, row i its digit at place 10^-i (row 0 = units digit). The
/// table is n x n for n expansions, so each needs at least n-1 decimals.
instances::DigitMatrix parse_digit_table(const nlohmann::json& j);

/// Reads a file into a string. Throws InputError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Parses JSON text, reporting syntax errors as InputError.
nlohmann::json parse_json(const std::string& text, const std::string& source);

} // namespace lawvere::cli
