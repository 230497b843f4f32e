#include "qb3/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace qb3 {

namespace {

std::string fmt_double(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("format must be 'csv' or 'json', got '" + text + "'");
}

std::string extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

void TableMetadata::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}
void TableMetadata::add(const std::string& key, const char* value) {
  entries_.emplace_back(key, std::string(value));
}
void TableMetadata::add(const std::string& key, double value) {
  entries_.emplace_back(key, fmt_double(value, "%.17g"));
}
void TableMetadata::add(const std::string& key, std::int64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}
void TableMetadata::add(const std::string& key, std::uint64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}
void TableMetadata::add(const std::string& key, int value) {
  entries_.emplace_back(key, std::to_string(value));
}

std::string render_csv(const Table& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata.entries()) {
    out += "# " + key + " = " + value + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += fmt_double(row[i], "%.12g");
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json j;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata.entries()) {
    j["metadata"][key] = value;
  }
  j["columns"] = table.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (double v : row) jrow.push_back(nlohmann::ordered_json::parse(fmt_double(v, "%.12g")));
    j["rows"].push_back(std::move(jrow));
  }
  return j.dump(2) + "\n";
}

void write_table(const std::string& path, OutputFormat format, const Table& table) {
  const std::string body = format == OutputFormat::csv ? render_csv(table) : render_json(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << body;
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

Table pdf_table(const PdfEstimate& pdf, TableMetadata base) {
  const PdfMetadata& m = pdf.metadata();
  base.add("ensemble", m.ensemble);
  base.add("measure", m.measure);
  base.add("theta", m.theta);
  base.add("seed", m.seed);
  base.add("stream-base", m.stream_base);
  base.add("nodes", m.nodes);
  base.add("samples", pdf.n_samples());
  base.add("bins", pdf.bins());

  Table t;
  t.metadata = std::move(base);
  t.columns = {"bin_low", "bin_high", "density"};
  t.rows.reserve(pdf.densities().size());
  for (std::size_t i = 0; i < pdf.densities().size(); ++i) {
    t.rows.push_back({pdf.bin_edges()[i], pdf.bin_edges()[i + 1], pdf.densities()[i]});
  }
  return t;
}

}  // namespace qb3
