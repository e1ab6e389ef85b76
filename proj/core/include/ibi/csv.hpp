#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ibi/dataset.hpp"

namespace ibi {

/// RFC 4180 table: a header row followed by records. Quoted fields may
/// contain separators, doubled quotes and line breaks. A UTF-8 byte order
/// mark is skipped.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based physical row number of each record (the header is row 1).
  std::vector<std::size_t> row_numbers;
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv_file(const std::string& path);

struct CsvSelection {
  std::string group_column;
  /// Labels mapped to groups A, B, C.
  std::array<std::string, 3> group_order;
  /// Empty: every column except the group column.
  std::vector<std::string> features;
};

/// Builds a dataset from a parsed table. Errors: ParseError for missing or
/// non-numeric feature values and unknown columns, FewerThanThreeGroups when
/// the table has fewer than three distinct labels or a mapped label is
/// absent, UnknownGroupLabel for labels outside the mapping.
GroupedDataset dataset_from_table(const CsvTable& table,
                                  const CsvSelection& selection);

/// read_csv_file + dataset_from_table. Throws FileNotFound.
GroupedDataset load_csv(const std::string& path, const CsvSelection& selection);

}  // namespace ibi
