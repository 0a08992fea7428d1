#include "delta_atom/result_table.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "delta_atom/errors.hpp"

namespace delta_atom {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

ResultTable::ResultTable(std::vector<std::string> header) : header_(std::move(header)) {}

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != header_.size()) {
    throw DimensionError("ResultTable: row width " + std::to_string(row.size()) +
                         " does not match header width " + std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::size_t ResultTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  throw ValidationError("ResultTable: no column '" + name + "'");
}

std::vector<double> ResultTable::column(const std::string& name) const {
  const std::size_t j = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[j]);
  return out;
}

std::string ResultTable::body() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += csv_field(header_[i]);
  }
  out += '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += format_double(r[i]);
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::content_hash() const {
  const std::string b = body();
  const std::string blob = "blob " + std::to_string(b.size()) + '\0' + b;
  std::array<unsigned char, EVP_MAX_MD_SIZE> d{};
  unsigned int len = 0;
  if (EVP_Digest(blob.data(), blob.size(), d.data(), &len, EVP_sha1(), nullptr) != 1) {
    throw NumericError("ResultTable: SHA-1 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[d[i] >> 4];
    out += hex[d[i] & 0xF];
  }
  return out;
}

std::string ResultTable::to_csv() const {
  std::string out;
  out += "# delta-atom " + std::string(kVersion) + "\n";
  out += "# experiment: " + experiment + "\n";
  out += "# config: " + config.dump() + "\n";
  out += "# content-sha1: " + content_hash() + "\n";
  return out + body();
}

void ResultTable::write(const std::string& path) const {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    const std::string text = to_csv();
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace delta_atom
