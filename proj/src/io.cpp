#include "pcix/io.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "pcix/error.hpp"

namespace pcix {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::vector<std::string_view>> split_records(std::string_view text) {
  std::vector<std::vector<std::string_view>> records;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields;
    while (true) {
      const auto comma = line.find(',');
      fields.push_back(trim(line.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    records.push_back(std::move(fields));
  }
  return records;
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> to_index(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_upper_triangle_form(const std::vector<std::vector<std::string_view>>& records) {
  for (const auto& r : records) {
    if (r.size() != 3) return false;
    const auto i = to_index(r[0]);
    const auto j = to_index(r[1]);
    if (!i || !j || *i < 1 || *j <= *i) return false;
  }
  return true;
}

double parse_value(std::string_view field, std::size_t line) {
  const auto v = to_double(field);
  if (!v) {
    std::ostringstream os;
    os << "record " << line << ": '" << field << "' is not a number";
    throw ValidationError(os.str());
  }
  return *v;
}

std::string format_g(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

PCMatrix parse_csv(std::string_view text) {
  const auto records = split_records(text);
  if (records.empty()) throw ValidationError("no matrix data");

  if (is_upper_triangle_form(records)) {
    std::vector<UpperEntry> upper;
    upper.reserve(records.size());
    for (std::size_t r = 0; r < records.size(); ++r)
      upper.push_back({*to_index(records[r][0]), *to_index(records[r][1]),
                       parse_value(records[r][2], r + 1)});
    return make_matrix(upper);
  }

  std::vector<std::vector<double>> grid;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (records[r].size() != records.size()) {
      std::ostringstream os;
      os << "ragged grid: row " << r + 1 << " has " << records[r].size() << " fields, expected "
         << records.size();
      throw ValidationError(os.str());
    }
    std::vector<double> row;
    for (auto f : records[r]) row.push_back(parse_value(f, r + 1));
    grid.push_back(std::move(row));
  }
  return PCMatrix::from_full(grid, kCsvReciprocityTol);
}

std::string to_csv(const PCMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += format_g(m(i, j), 15);
    }
    out += '\n';
  }
  return out;
}

std::string to_upper_csv(const PCMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      out += std::to_string(i + 1) + ',' + std::to_string(j + 1) + ',' + format_g(m(i, j), 15) + '\n';
  return out;
}

MatrixDocument parse_matrix_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("matrix document must be a JSON object");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ValidationError("matrix document needs an 'entries' array");

  std::vector<std::vector<double>> grid;
  for (const auto& row : j["entries"]) {
    if (!row.is_array()) throw ValidationError("'entries' must be an array of rows");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ValidationError("matrix entries must be numbers");
      r.push_back(v.get<double>());
    }
    grid.push_back(std::move(r));
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(grid.size()))
      throw ValidationError("'n' does not match the number of rows");
  }

  MatrixDocument doc{PCMatrix::from_full(grid), std::nullopt, std::nullopt};
  if (j.contains("name") && j["name"].is_string()) doc.name = j["name"].get<std::string>();
  if (j.contains("description") && j["description"].is_string())
    doc.description = j["description"].get<std::string>();
  return doc;
}

nlohmann::json to_json(const MatrixDocument& doc, int significant_digits) {
  nlohmann::json j = to_json(doc.matrix, significant_digits);
  if (doc.name) j["name"] = *doc.name;
  if (doc.description) j["description"] = *doc.description;
  return j;
}

nlohmann::json to_json(const PCMatrix& m, int significant_digits) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(round_significant(m(i, j), significant_digits));
    rows.push_back(std::move(row));
  }
  return {{"n", m.size()}, {"entries", std::move(rows)}};
}

RITable parse_ri_table(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("RI table must be a JSON object");
  std::map<int, double> values;
  for (const auto& [key, val] : j.items()) {
    const auto n = to_index(key);
    if (!n || !val.is_number())
      throw ValidationError("RI table entries must map an order n to a number");
    values[static_cast<int>(*n)] = val.get<double>();
  }
  return RITable(std::move(values));
}

nlohmann::json to_json(const RITable& ri) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [n, v] : ri.values()) j[std::to_string(n)] = v;
  return j;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatrixDocument load_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
    return parse_matrix_json(j);
  }
  return {parse_csv(text), std::nullopt, std::nullopt};
}

RITable load_ri_table_file(const std::filesystem::path& path) {
  try {
    return parse_ri_table(nlohmann::json::parse(read_text_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

double round_significant(double v, int digits) {
  return std::strtod(format_g(v, digits).c_str(), nullptr);
}

std::string format_indicator(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace pcix
