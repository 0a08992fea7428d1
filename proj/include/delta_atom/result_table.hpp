// result_table.hpp - numeric CSV tables with a metadata preamble.
//
// Layout: '#'-prefixed metadata lines (tool version, experiment, resolved
// config, git-style SHA-1 of the body), then the header row and data rows.
// Floats use the shortest round-trip decimal form; lines end in '\n'.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace delta_atom {

inline constexpr const char* kVersion = "0.1.0";

class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> header);

  void add_row(std::vector<double> row);  // throws DimensionError on width mismatch

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;

  std::string experiment;
  nlohmann::json config;

  std::string body() const;
  // SHA-1 of "blob <size>\0" + body, hex.
  std::string content_hash() const;
  std::string to_csv() const;

  // Temp file in the target directory, then rename. Throws IoError.
  void write(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

std::string format_double(double v);

}  // namespace delta_atom
