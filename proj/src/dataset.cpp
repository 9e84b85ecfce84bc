#include "twostep/dataset.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace twostep {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool parse_field(std::string_view field, double& out) {
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc() && result.ptr == last;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, Index input_dim, Index target_dim) {
  if (input_dim < 1 || target_dim < 1)
    throw std::invalid_argument("load_csv: input and target dims must be >= 1");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset " + path.string());

  const std::size_t expected = static_cast<std::size_t>(input_dim + target_dim);
  Dataset data;
  std::string line;
  std::size_t lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::vector<std::string_view> fields = split_fields(line);

    std::vector<double> values(fields.size());
    bool numeric = true;
    for (std::size_t k = 0; k < fields.size(); ++k)
      if (!parse_field(fields[k], values[k])) {
        numeric = false;
        break;
      }
    if (!numeric) {
      if (first_content) {  // header row
        first_content = false;
        continue;
      }
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": non-numeric field");
    }
    first_content = false;
    if (fields.size() != expected)
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(expected) + " columns, got " + std::to_string(fields.size()));

    ColVec x(input_dim);
    for (Index i = 0; i < input_dim; ++i) x(i) = values[static_cast<std::size_t>(i)];
    ColVec y(target_dim);
    for (Index i = 0; i < target_dim; ++i)
      y(i) = values[static_cast<std::size_t>(input_dim + i)];
    data.inputs.push_back(std::move(x));
    data.targets.push_back(std::move(y));
  }
  if (data.inputs.empty()) throw IoError("dataset " + path.string() + " has no samples");
  return data;
}

}  // namespace twostep
