#include "ibi/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ibi/errors.hpp"

namespace ibi {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> record_lines;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;
  std::size_t record_start = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = record.size() == 1 && record[0].empty();
    if (!blank) {
      records.push_back(std::move(record));
      record_lines.push_back(record_start);
    }
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw ParseError(line, "", "unexpected quote inside a field");
        }
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        record_start = line;
        break;
      default:
        field.push_back(ch);
    }
  }
  if (in_quotes) throw ParseError(line, "", "unterminated quoted field");
  if (!field.empty() || !record.empty() || field_was_quoted) end_record();

  if (records.empty()) throw ParseError(1, "", "missing header row");
  CsvTable table;
  table.header = std::move(records.front());
  for (auto& h : table.header) h = std::string(trim(h));
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw ParseError(record_lines[r], "",
                       "expected " + std::to_string(table.header.size()) +
                           " fields, found " +
                           std::to_string(records[r].size()));
    }
    table.rows.push_back(std::move(records[r]));
    table.row_numbers.push_back(record_lines[r]);
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

GroupedDataset dataset_from_table(const CsvTable& table,
                                  const CsvSelection& selection) {
  auto column_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (table.header[i] == name) return i;
    }
    throw ParseError(1, name, "no such column");
  };
  const std::size_t group_col = column_index(selection.group_column);

  std::vector<std::size_t> feature_cols;
  std::vector<std::string> feature_names;
  if (selection.features.empty()) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (i == group_col) continue;
      feature_cols.push_back(i);
      feature_names.push_back(table.header[i]);
    }
  } else {
    for (const auto& f : selection.features) {
      const std::size_t idx = column_index(f);
      if (idx == group_col) {
        throw InvalidArgument("group column cannot be used as a feature");
      }
      feature_cols.push_back(idx);
      feature_names.push_back(f);
    }
  }
  if (feature_cols.empty()) throw InvalidArgument("no feature columns");

  std::set<std::string> mapped(selection.group_order.begin(),
                               selection.group_order.end());
  if (mapped.size() != 3) {
    throw InvalidArgument("group mapping needs three distinct labels");
  }

  std::set<std::string> present;
  for (const auto& row : table.rows) {
    present.insert(std::string(trim(row[group_col])));
  }
  if (present.size() < 3) {
    throw FewerThanThreeGroups("input has " + std::to_string(present.size()) +
                               " distinct group label(s); three are needed");
  }
  for (const auto& label : selection.group_order) {
    if (!present.contains(label)) {
      throw FewerThanThreeGroups("group label '" + label +
                                 "' does not occur in the input");
    }
  }
  for (const auto& label : present) {
    if (!mapped.contains(label)) {
      throw UnknownGroupLabel("group label '" + label +
                              "' is not mapped to A, B or C");
    }
  }

  std::array<std::vector<std::vector<double>>, 3> rows;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string label(trim(row[group_col]));
    int g = 0;
    while (selection.group_order[g] != label) ++g;
    std::vector<double> values;
    values.reserve(feature_cols.size());
    for (std::size_t j = 0; j < feature_cols.size(); ++j) {
      double v = 0.0;
      if (!parse_double(row[feature_cols[j]], v)) {
        throw ParseError(table.row_numbers[r], feature_names[j],
                         "'" + row[feature_cols[j]] + "' is not a number");
      }
      values.push_back(v);
    }
    rows[g].push_back(std::move(values));
  }

  std::array<Eigen::MatrixXd, 3> groups;
  const auto p = static_cast<Eigen::Index>(feature_cols.size());
  for (int g = 0; g < 3; ++g) {
    groups[g].resize(static_cast<Eigen::Index>(rows[g].size()), p);
    for (std::size_t i = 0; i < rows[g].size(); ++i) {
      for (Eigen::Index j = 0; j < p; ++j) {
        groups[g](static_cast<Eigen::Index>(i), j) =
            rows[g][i][static_cast<std::size_t>(j)];
      }
    }
  }
  return GroupedDataset(std::move(groups), std::move(feature_names),
                        selection.group_order);
}

GroupedDataset load_csv(const std::string& path,
                        const CsvSelection& selection) {
  return dataset_from_table(read_csv_file(path), selection);
}

}  // namespace ibi
