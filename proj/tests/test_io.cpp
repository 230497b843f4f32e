#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "doctest.h"
#include "qb3/io.hpp"
#include "support.hpp"

using namespace qb3;

namespace {

Table sample_table() {
  Table t;
  t.metadata.add("command", "demo");
  t.metadata.add("seed", std::uint64_t{42});
  t.metadata.add("theta", 0.5 * std::numbers::pi);
  t.columns = {"x", "y"};
  t.rows = {{0.0, 1.0}, {0.125, 0.1234567890123456}, {1e-30, 3.0}};
  return t;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format names") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  CHECK(extension(OutputFormat::csv) == ".csv");
  CHECK(extension(OutputFormat::json) == ".json");
  CHECK(to_string(OutputFormat::json) == "json");
}

TEST_CASE("csv rendering") {
  const std::string csv = render_csv(sample_table());
  // Metadata keys keep insertion order; doubles carry 17 significant digits
  // in metadata and 12 in rows.
  CHECK(csv ==
        "# command = demo\n"
        "# seed = 42\n"
        "# theta = 1.5707963267948966\n"
        "x,y\n"
        "0,1\n"
        "0.125,0.123456789012\n"
        "1e-30,3\n");
}

TEST_CASE("json rendering mirrors the csv content") {
  const nlohmann::json j = nlohmann::json::parse(render_json(sample_table()));
  CHECK(j["metadata"]["command"] == "demo");
  CHECK(j["metadata"]["seed"] == "42");
  CHECK(j["metadata"]["theta"] == "1.5707963267948966");
  CHECK(j["columns"] == nlohmann::json({"x", "y"}));
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0][0] == 0.0);
  CHECK(j["rows"][1][1] == doctest::Approx(0.123456789012).epsilon(1e-12));
  CHECK(j["rows"][2][0] == doctest::Approx(1e-30).epsilon(1e-6));
}

TEST_CASE("file writing") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "qb3_io_test";
  std::filesystem::create_directories(dir);

  SUBCASE("written bytes equal the rendering") {
    const std::string path = (dir / "t.csv").string();
    write_table(path, OutputFormat::csv, sample_table());
    CHECK(slurp(path) == render_csv(sample_table()));
    std::filesystem::remove(path);
  }

  SUBCASE("unwritable path raises io failure") {
    CHECK_THROWS_AS(
        write_table((dir / "missing" / "t.csv").string(), OutputFormat::csv, sample_table()),
        IoError);
  }
}

TEST_CASE("pdf serialization") {
  std::vector<double> samples;
  RngStream rng(1, test::kStream + 60);
  for (int i = 0; i < 400; ++i) samples.push_back(rng.uniform());
  PdfMetadata meta;
  meta.ensemble = "symmetric";
  meta.measure = "tau";
  meta.theta = std::numbers::pi;
  meta.seed = 11;
  meta.stream_base = 7;
  meta.nodes = 64;
  const PdfEstimate pdf = estimate_pdf(samples, 10, meta);

  TableMetadata base;
  base.add("command", "pdf");
  const Table t = pdf_table(pdf, base);

  CHECK(t.columns == std::vector<std::string>{"bin_low", "bin_high", "density"});
  REQUIRE(t.rows.size() == 10);

  // Provenance lands in the metadata block, command first.
  const auto& e = t.metadata.entries();
  CHECK(e.front().first == "command");
  bool saw_seed = false, saw_bins = false;
  for (const auto& [k, v] : e) {
    if (k == "seed") {
      saw_seed = true;
      CHECK(v == "11");
    }
    if (k == "bins") {
      saw_bins = true;
      CHECK(v == "10");
    }
  }
  CHECK(saw_seed);
  CHECK(saw_bins);

  // The emitted rows still integrate to 1.
  double integral = 0.0;
  for (const auto& row : t.rows) integral += (row[1] - row[0]) * row[2];
  CHECK(std::abs(integral - 1.0) <= 1e-9);
}

}  // TEST_SUITE
