#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "rkhs/closed_forms.hpp"
#include "rkhs/kernels.hpp"
#include "rkhs/representer.hpp"

namespace rkhs {

inline constexpr const char* kCsvSchema = "rkhs-v1";

/// CSV layout:
///   # schema=rkhs-v1
///   # key=value key=value ...
///   col,col,...
///   rows, numbers printed with %.17g
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; ErrorKind::io if absent.
  std::size_t column(std::string_view name) const;
  /// Metadata value for a key; ErrorKind::io if absent.
  const std::string& meta(std::string_view key) const;
};

std::string format_double(double v);

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);
void write_csv_file(const std::string& path, const CsvTable& table);
CsvTable read_csv_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

nlohmann::json to_json(const KernelSpec& spec);
KernelSpec kernel_from_json(const nlohmann::json& j);

/// Columns re_z, im_z, re_w, im_w; lambda and kernel in the metadata.
CsvTable to_table(const LabeledDataset& data, const KernelSpec& kernel);
LabeledDataset dataset_from_table(const CsvTable& table);

/// Columns re_z, im_z, re_alpha, im_alpha.
CsvTable to_table(const CoefficientExpansion& e);
CoefficientExpansion expansion_from_table(const CsvTable& table);

nlohmann::json to_json(const LabeledDataset& data, const KernelSpec& kernel);
nlohmann::json to_json(const CoefficientExpansion& e);
LabeledDataset dataset_from_json(const nlohmann::json& j);
CoefficientExpansion expansion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OutputFormulaReport& r);

}  // namespace rkhs
