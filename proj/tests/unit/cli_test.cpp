#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fgn/covariance.hpp"
#include "grid.hpp"

namespace fgn::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class GoldenTable : public ::testing::TestWithParam<std::string> {};

TEST_P(GoldenTable, PrettyMatchesByteForByte) {
  const std::string h = GetParam();
  std::string file = h;
  file[1] = '_';
  const Result r = run_cli({"table", "--hurst", h, "--n-max", "10", "--format", "pretty"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_file(std::string(FGN_GOLDEN_DIR) + "/table_h" + file + ".txt"));
}

INSTANTIATE_TEST_SUITE_P(AllTables, GoldenTable,
                         ::testing::Values("0.51", "0.6", "0.7", "0.8", "0.9", "0.99"));

TEST(Table, RecurrenceMatchesGolden) {
  const Result r = run_cli(
      {"table", "--hurst", "0.9", "--n-max", "10", "--method", "recurrence", "--format", "pretty"});
  ASSERT_EQ(r.code, 0);
  auto got = lines(r.out);
  auto want = lines(read_file(std::string(FGN_GOLDEN_DIR) + "/table_h0_9.txt"));
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_EQ(got[i], want[i]);
}

TEST(Table, IndependentCaseIsZero) {
  const Result r = run_cli({"table", "--hurst", "0.5", "--n-max", "3"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "schema=fgn/1,command=table,hurst=0.5,n_max=3,method=solve");
  EXPECT_EQ(ls[1], "n,k=2,k=3");
  EXPECT_EQ(ls[2], "2,0,");
  EXPECT_EQ(ls[3], "3,0,0");
}

TEST(Coeffs, PrettyRow) {
  const Result r =
      run_cli({"coeffs", "--hurst", "0.8", "--n", "5", "--method", "recurrence", "--format", "pretty"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.42108 0.08574 0.07202 0.07684"), std::string::npos) << r.out;
}

TEST(Coeffs, CsvZeros) {
  const Result r = run_cli({"coeffs", "--hurst", "0.5", "--n", "4", "--method", "solve", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0].rfind("schema=fgn/1,command=coeffs", 0), 0u);
  EXPECT_EQ(ls[1], "n,k,gamma");
  for (std::size_t i = 2; i < 5; ++i) EXPECT_EQ(split_csv(ls[i])[2], "0");
}

TEST(Coeffs, CramerMatchesTable) {
  const Result r = run_cli({"coeffs", "--hurst", "0.9", "--n", "3", "--method", "cramer"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  EXPECT_NEAR(std::stod(split_csv(ls[2])[2]), 0.60809, 5e-6);
  EXPECT_NEAR(std::stod(split_csv(ls[3])[2]), 0.17948, 5e-6);
}

TEST(Coeffs, CsvAndJsonCarryTheSameNumbers) {
  for (const char* method : {"solve", "recurrence", "cramer"}) {
    const std::vector<std::string> base{"coeffs", "--hurst", "0.73", "--n", "12", "--method", method};
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = lines(run_cli(csv_args).out);
    const auto doc = nlohmann::json::parse(run_cli(json_args).out);
    EXPECT_EQ(doc["schema_version"], "fgn/1");
    EXPECT_EQ(doc["command"], "coeffs");
    ASSERT_EQ(doc["rows"].size() + 2, csv.size());
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
      const auto cells = split_csv(csv[i + 2]);
      EXPECT_EQ(std::stoll(cells[0]), doc["rows"][i][0].get<long long>());
      EXPECT_EQ(std::stoll(cells[1]), doc["rows"][i][1].get<long long>());
      EXPECT_EQ(std::stod(cells[2]), doc["rows"][i][2].get<double>());
    }
  }
}

TEST(Coeffs, TableCsvJsonRoundTripWithBlanks) {
  const auto csv = lines(run_cli({"table", "--hurst", "0.66", "--n-max", "7"}).out);
  const auto doc = nlohmann::json::parse(
      run_cli({"table", "--hurst", "0.66", "--n-max", "7", "--format", "json"}).out);
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const auto cells = split_csv(csv[i + 2]);
    ASSERT_EQ(cells.size(), doc["rows"][i].size());
    for (std::size_t j = 1; j < cells.size(); ++j) {
      if (cells[j].empty()) {
        EXPECT_TRUE(doc["rows"][i][j].is_null());
      } else {
        EXPECT_EQ(std::stod(cells[j]), doc["rows"][i][j].get<double>());
      }
    }
  }
}

TEST(ExitCodes, UsageAndNumericalErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coeffs", "--hurst", "0.7"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coeffs", "--hurst", "abc", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coeffs", "--hurst", "1.5", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coeffs", "--hurst", "0.7", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coeffs", "--hurst", "0.7", "--n", "3", "--method", "lu"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coeffs", "--hurst", "0.7", "--n", "14", "--method", "cramer"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coeffs", "--hurst", "0.7", "--n", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--hurst-grid", "0.6:"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--hurst-grid", "1.2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bench", "--reps", "2"}).code, kExitUsage);
  const Result singular = run_cli({"coeffs", "--hurst", "1", "--n", "3"});
  EXPECT_EQ(singular.code, kExitNumerical);
  EXPECT_NE(singular.err.find("SingularRegime"), std::string::npos);
  EXPECT_EQ(run_cli({"psi", "--hurst", "0.4"}).code, kExitNumerical);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Verify, FullScanPasses) {
  const Result r = run_cli({"verify", "--suite", "all", "--hurst-grid", "0.51:0.99:0.01", "--n-max", "100"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find(",FAIL,"), std::string::npos);
}

TEST(Verify, RowNonMonotonicityIsDescriptive) {
  const Result r = run_cli({"verify", "--suite", "conjectures", "--hurst-grid", "0.9", "--n-max", "10"});
  EXPECT_EQ(r.code, kExitOk);
  bool found = false;
  for (const auto& line : lines(r.out)) {
    if (line.rfind("conjectures,row_monotonicity,", 0) == 0) {
      found = true;
      EXPECT_NE(line.find(",INFO,"), std::string::npos);
      EXPECT_NE(line.find("n=4 k=4"), std::string::npos) << line;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Verify, IndependentCaseNotApplicable) {
  const Result r = run_cli({"verify", "--suite", "covariance", "--hurst-grid", "0.5", "--n-max", "10"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(",NA,"), std::string::npos);
}

TEST(Verify, ShortRangeGrid) {
  const Result r = run_cli({"verify", "--suite", "covariance", "--hurst-grid", "0.05:0.45:0.05"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(Limits, PrettyByDefault) {
  const Result r = run_cli({"limits"});
  ASSERT_EQ(r.code, 0);
  for (const char* v : {"0.783083", "0.216917", "0.742250", "0.069508", "0.188242"}) {
    EXPECT_NE(r.out.find(v), std::string::npos) << v;
  }
  EXPECT_EQ(r.out.rfind("# schema=fgn/1 command=limits", 0), 0u);
}

TEST(Psi, GridOutput) {
  const Result r = run_cli({"psi", "--hurst", "0.7", "--x-grid", "0:1:0.01"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 103u);
  EXPECT_EQ(ls[1], "x,psi,y,eta");
  const HurstParam h(0.7);
  const auto first = split_csv(ls[2]);
  EXPECT_EQ(std::stod(first[0]), 0.0);
  EXPECT_NEAR(std::stod(first[1]), (1 + rho(h, 2)) / rho(h, 1), 1e-15);
  EXPECT_TRUE(first[2].empty());
  EXPECT_NE(r.err.find("largest value"), std::string::npos);
}

TEST(Bench, Shape) {
  const Result r = run_cli({"bench", "--n-list", "100,500", "--reps", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 8u);
  EXPECT_EQ(ls[1], "method,n,hurst,reps,median_seconds,checksum");
  for (std::size_t i = 2; i < 8; ++i) {
    const auto cells = split_csv(ls[i]);
    ASSERT_EQ(cells.size(), 6u);
    EXPECT_GT(std::stod(cells[4]), 0.0);
  }
}

TEST(OutFile, WritesData) {
  const std::string path = ::testing::TempDir() + "fgn_cli_out.csv";
  const Result r = run_cli({"--out", path, "limits", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(lines(read_file(path)).size(), 7u);
  std::remove(path.c_str());
}

TEST(GridSpec, Parsing) {
  const auto g = parse_grid("0.51:0.99:0.01");
  ASSERT_EQ(g.size(), 49u);
  EXPECT_EQ(g.front(), 0.51);
  EXPECT_EQ(g[20], 0.71);
  EXPECT_EQ(g.back(), 0.99);
  EXPECT_EQ(parse_grid("0.6,0.7:0.9:0.1"), (std::vector<double>{0.6, 0.7, 0.8, 0.9}));
  EXPECT_EQ(parse_grid("0:1:0.4"), (std::vector<double>{0.0, 0.4, 0.8}));
  EXPECT_EQ(parse_grid("0:1:0.01").size(), 101u);
  EXPECT_EQ(parse_size_list("100,500:1500:500"), (std::vector<std::size_t>{100, 500, 1000, 1500}));
  EXPECT_THROW((void)parse_grid(""), UsageError);
  EXPECT_THROW((void)parse_grid("1:0:0.1"), UsageError);
  EXPECT_THROW((void)parse_grid("0:1:0"), UsageError);
  EXPECT_THROW((void)parse_grid("0.5x"), UsageError);
  EXPECT_THROW((void)parse_size_list("2.5"), UsageError);
}

}  // namespace
}  // namespace fgn::cli
