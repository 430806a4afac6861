#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pcix/matrix.hpp"
#include "pcix/spectral.hpp"

namespace pcix {

/// Reciprocity slack for full-grid text input, where lower entries are usually
/// typed with a handful of digits.
inline constexpr double kCsvReciprocityTol = 1e-6;

struct MatrixDocument {
  PCMatrix matrix{2};
  std::optional<std::string> name;
  std::optional<std::string> description;
};

/// Parses either a full n x n grid of comma-separated decimals or upper-triangle
/// lines "i,j,value" (1-based). A file is upper-triangle form iff every line has
/// three fields and the first two are integers with 1 <= i < j. Blank lines and
/// lines starting with '#' are skipped.
PCMatrix parse_csv(std::string_view text);

/// Full grid, 15 significant digits.
std::string to_csv(const PCMatrix& m);
/// "i,j,value" lines for the strict upper triangle, 15 significant digits.
std::string to_upper_csv(const PCMatrix& m);

/// {"n": N, "entries": [[...]], "name"?: ..., "description"?: ...}
MatrixDocument parse_matrix_json(const nlohmann::json& j);
nlohmann::json to_json(const MatrixDocument& doc, int significant_digits = 15);
nlohmann::json to_json(const PCMatrix& m, int significant_digits = 15);

/// {"3": 0.5245, "4": 0.882, ...}
RITable parse_ri_table(const nlohmann::json& j);
nlohmann::json to_json(const RITable& ri);

/// Reads a matrix file, JSON if its first non-blank character is '{', CSV otherwise.
MatrixDocument load_matrix_file(const std::filesystem::path& path);
RITable load_ri_table_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// v rounded to the given number of significant digits.
double round_significant(double v, int digits);

/// Fixed six-decimal rendering used for indicator values in text output.
std::string format_indicator(double v);

}  // namespace pcix
