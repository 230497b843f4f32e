#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qb3/statistics.hpp"

namespace qb3 {

/// Filesystem-level failure while writing an output file (maps to CLI exit
/// code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& text);  // "csv" | "json"
std::string extension(OutputFormat f);               // ".csv" | ".json"

/// Ordered key/value provenance block emitted at the top of every output
/// file; keys appear in insertion order in both formats.
class TableMetadata {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);
  void add(const std::string& key, double value);  // full precision (%.17g)
  void add(const std::string& key, std::int64_t value);
  void add(const std::string& key, std::uint64_t value);
  void add(const std::string& key, int value);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Plot-ready numeric table: metadata block, column names, and rows of
/// doubles (rendered with 12 significant digits).
struct Table {
  TableMetadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// CSV: "# key = value" metadata lines, a comma-separated header row, then
/// one comma-separated numeric row per entry.
std::string render_csv(const Table& table);

/// JSON object mirroring the CSV content: {"metadata": {...},
/// "columns": [...], "rows": [[...]]}, metadata values kept as strings.
std::string render_json(const Table& table);

/// Renders and writes the table; throws IoError when the file cannot be
/// created or written.
void write_table(const std::string& path, OutputFormat format, const Table& table);

/// Table form of a histogram: columns bin_low, bin_high, density, with the
/// estimate's provenance merged into `base` metadata.
Table pdf_table(const PdfEstimate& pdf, TableMetadata base);

}  // namespace qb3
