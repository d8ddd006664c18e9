// Copyright 2026 The qpurify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "qpurify/cli.hpp"

namespace qpurify::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

using Rows = std::vector<std::vector<std::string>>;

Rows parse_csv(const std::string& text) {
  Rows rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) rows.push_back(split(line, ','));
  return rows;
}

size_t column(const Rows& rows, const std::string& name) {
  for (size_t i = 0; i < rows.at(0).size(); ++i)
    if (rows[0][i] == name) return i;
  ADD_FAILURE() << "no column " << name;
  return 0;
}

double num(const std::string& s) { return std::stod(s); }

TEST(Syntax, Ranges) {
  EXPECT_EQ(parse_int_range("2..5"), (std::vector<int>{2, 3, 4, 5}));
  EXPECT_EQ(parse_int_range("primes:2..13"), (std::vector<int>{2, 3, 5, 7, 11, 13}));
  EXPECT_EQ(parse_int_range("2,3,11"), (std::vector<int>{2, 3, 11}));
  EXPECT_THROW(parse_int_range("primes:2,4"), InvalidInput);
  EXPECT_THROW(parse_int_range("5..2"), InvalidInput);
  EXPECT_THROW(parse_int_range("a..b"), InvalidInput);
}

TEST(Syntax, Grids) {
  const auto g = parse_grid("0.5:0.6:0.05", 1.0);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_DOUBLE_EQ(g[2], 0.6);
  EXPECT_EQ(parse_grid("10:20", 1.0).size(), 11u);
  EXPECT_EQ(parse_grid("0.1,0.2", 1.0).size(), 2u);
  EXPECT_THROW(parse_grid("1:0:0.1", 1.0), InvalidInput);
  EXPECT_THROW(parse_grid("0:1:0", 1.0), InvalidInput);
  EXPECT_THROW(parse_grid("x", 1.0), InvalidInput);
}

TEST(Syntax, DeltaPolicies) {
  EXPECT_EQ(parse_delta("n_to_1").kind, DeltaPolicy::Kind::NToOne);
  EXPECT_EQ(parse_delta("npow:-0.2").value, -0.2);
  EXPECT_EQ(parse_delta("fixed:0.1").kind, DeltaPolicy::Kind::Fixed);
  EXPECT_THROW(parse_delta("npow:0.5"), InvalidInput);
  EXPECT_THROW(parse_delta("fixed:-1"), InvalidInput);
  EXPECT_THROW(parse_delta("sometimes"), InvalidInput);
}

TEST(RecurrenceRun, XOnlyQuartitsClimbToTarget) {
  const auto r = run_cli({"recurrence-run", "--d", "4", "--preset", "x_only", "--F", "0.40", "--protocol", "p1p2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"iter", "step", "F", "success_prob", "cum_yield"}));
  EXPECT_EQ(rows[1][1], "init");
  for (size_t i = 2; i < rows.size(); ++i) EXPECT_GT(num(rows[i][2]), num(rows[i - 1][2]));
  EXPECT_GE(num(rows.back()[2]), 1.0 - 1e-4);
}

TEST(RecurrenceRun, PureInputSingleRow) {
  const auto r = run_cli({"recurrence-run", "--d", "3", "--F", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_csv(r.out).size(), 2u);
}

TEST(RecurrenceRun, NoisyMixedErrorsSevenDims) {
  for (const char* proto : {"p1p2", "dejmps"}) {
    const auto r = run_cli({"recurrence-run", "--d", "7", "--preset", "xz_mixture", "--x-weight", "0.25", "--F", "0.6",
                            "--Q", "0.88", "--protocol", proto, "--max-iters", "40"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_GT(parse_csv(r.out).size(), 2u);
  }
  const auto p = regime_scan(Protocol::P1P2, Dimension(7), 0.88, PresetKind::XZMixture, 0.25);
  const auto d = regime_scan(Protocol::DEJMPS, Dimension(7), 0.88, PresetKind::XZMixture, 0.25);
  ASSERT_TRUE(p.purifiable);
  EXPECT_LE(p.F_min, d.F_min);
  EXPECT_GT(p.F_max - p.F_min, d.purifiable ? d.F_max - d.F_min : 0.0);
}

TEST(RecurrenceRun, StepLabels) {
  const auto r = run_cli({"recurrence-run", "--d", "2", "--preset", "x_only", "--F", "0.7", "--protocol", "three_copy"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_csv(r.out)[2][1], "THREE_COPY");
}

TEST(Thresholds, BbpsswFiveDims) {
  const auto r = run_cli({"thresholds", "--protocol", "bbpssw", "--d-range", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_NEAR(num(rows[1][column(rows, "Q_th")]), 0.8622, 1e-4);
}

TEST(Thresholds, BbpsswDecreasing) {
  const auto r = run_cli({"thresholds", "--protocol", "bbpssw", "--d-range", "2..40", "--Q-grid", "0.9,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 1u + 39u * 2u);
  const size_t q = column(rows, "Q_th");
  for (size_t i = 3; i < rows.size(); i += 2) EXPECT_LT(num(rows[i][q]), num(rows[i - 2][q]));
}

TEST(Thresholds, P1P2Isotropic) {
  const auto r = run_cli({"thresholds", "--protocol", "p1p2", "--d-range", "2..6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 5u);
  EXPECT_GE(j[0]["Q_th"].get<double>(), 0.93);
  EXPECT_LE(j[0]["Q_th"].get<double>(), 0.95);
  EXPECT_GE(j[4]["Q_th"].get<double>(), 0.81);
  EXPECT_LE(j[4]["Q_th"].get<double>(), 0.85);
  for (size_t i = 1; i < j.size(); ++i) EXPECT_LT(j[i]["Q_th"].get<double>(), j[i - 1]["Q_th"].get<double>());
  EXPECT_TRUE(j[0]["Q_th_asymptote"].is_null());
}

TEST(Thresholds, OutputIndependentOfThreads) {
  const std::vector<std::string> base{"thresholds", "--protocol", "dejmps", "--d-range", "2..4", "--Q-grid",
                                      "0.95:1:0.025"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  const auto a = run_cli(one), b = run_cli(four);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Hashing, FiniteSizeSweep) {
  const auto r = run_cli({"hashing", "--d", "5", "--F", "0.99", "--n-sweep", "10:1000", "--delta", "npow:-0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 992u);
  const size_t y = column(rows, "yield"), f = column(rows, "F_out_bound");
  EXPECT_EQ(num(rows[1][y]), 0.0);
  EXPECT_GT(num(rows.back()[y]), 0.0);
  for (size_t i = 2; i < rows.size(); ++i) EXPECT_GE(num(rows[i][f]), num(rows[i - 1][f]) - 1e-12);
}

TEST(Hashing, MinimalFidelity) {
  const auto r = run_cli({"hashing", "--d", "2", "--fmin"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(num(parse_csv(r.out)[1][1]), 0.8107, 1e-3);
}

TEST(Hashing, ThresholdTable) {
  const auto r = run_cli({"hashing", "--threshold", "--d-range", "primes:2..97"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 26u);
  const size_t q = column(rows, "q_min");
  for (size_t i = 2; i < rows.size(); ++i) EXPECT_LT(num(rows[i][q]), num(rows[i - 1][q]));
  EXPECT_GT(num(rows.back()[q]), 0.8409);
  EXPECT_LT(num(rows.back()[q]), num(rows[1][q]));
}

TEST(Hashing, OtherModes) {
  const auto a = run_cli({"hashing", "--d-range", "2,3", "--F-grid", "0.8:1:0.1"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(parse_csv(a.out).size(), 7u);
  const auto q = run_cli({"hashing", "--d", "3", "--q-grid", "0.8:1:0.05", "--format", "json"});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(nlohmann::json::parse(q.out).size(), 5u);
  const auto mc = run_cli({"hashing", "--d", "3", "--montecarlo", "--n", "4", "--trials", "20000", "--seed", "5"});
  ASSERT_EQ(mc.code, 0) << mc.err;
  EXPECT_EQ(mc.out, run_cli({"hashing", "--d", "3", "--montecarlo", "--n", "4", "--trials", "20000", "--seed", "5",
                             "--threads", "3"})
                        .out);
}

TEST(Hashing, CompositeRejected) {
  EXPECT_EQ(run_cli({"hashing", "--d", "4", "--fmin"}).code, 2);
  EXPECT_EQ(run_cli({"hashing", "--d-range", "2..5", "--fmin"}).code, 2);
  EXPECT_EQ(run_cli({"hashing", "--d", "2", "--fmin", "--threshold"}).code, 2);
}

TEST(Ghz, Orderings) {
  const auto r = run_cli({"ghz", "--d-list", "2", "--N-list", "2..5", "--F-grid", "0.9,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  const size_t y = column(rows, "Y"), F = column(rows, "F");
  double prev = -1;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][F] == "1") {
      EXPECT_EQ(rows[i][y], "1");
    } else {
      EXPECT_GT(num(rows[i][y]), prev);
      prev = num(rows[i][y]);
    }
  }
  const auto byd = parse_csv(run_cli({"ghz", "--d-list", "2,3,5,11", "--N-list", "3", "--F-grid", "0.9"}).out);
  for (size_t i = 2; i < byd.size(); ++i) EXPECT_GT(num(byd[i][y]), num(byd[i - 1][y]));
}

TEST(OracleCheck, DefaultSuitePasses) {
  const auto r = run_cli({"oracle-check", "--format", "json", "--samples", "10", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  for (const auto& row : j) {
    EXPECT_TRUE(row["pass"].get<bool>());
    EXPECT_LT(row["max_deviation"].get<double>(), 1e-10);
  }
  EXPECT_EQ(r.out, run_cli({"oracle-check", "--format", "json", "--samples", "10", "--seed", "3"}).out);
}

TEST(OracleCheck, SevenDimsIsASizeError) {
  const auto r = run_cli({"oracle-check", "--d-list", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("supports"), std::string::npos);
}

TEST(ExitCodes, ValidationAndIo) {
  EXPECT_EQ(run_cli({"recurrence-run", "--d", "3", "--preset", "weird", "--F", "0.5"}).code, 2);
  EXPECT_EQ(run_cli({"recurrence-run", "--F", "0.5"}).code, 2);
  EXPECT_EQ(run_cli({"recurrence-run", "--d", "3", "--F", "0.5", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"no-such-command"}).code, 2);
  EXPECT_EQ(run_cli({"recurrence-run", "--state", "/nonexistent/state.json"}).code, 1);
  EXPECT_EQ(run_cli({"recurrence-run", "--d", "3", "--F", "0.5", "--output", "/nonexistent/dir/out.csv"}).code, 1);
}

TEST(Output, FileAndStateInput) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto state = dir / "qpurify_cli_state.json";
  const auto out = dir / "qpurify_cli_out.csv";
  {
    std::ofstream f(state);
    f << R"({"d": 2, "alpha": [[0.6, 0.4], [0.0, 0.0]]})";
  }
  const auto r = run_cli({"recurrence-run", "--state", state.string(), "--max-iters", "1", "--F-target", "0.99",
                          "--output", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto rows = parse_csv(read_text_file(out.string()));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2][2], "0.692307692308");
  EXPECT_EQ(rows[2][3], "0.52");
  EXPECT_EQ(rows[2][4], "0.26");
  std::filesystem::remove(state);
  std::filesystem::remove(out);
}

#ifdef QPURIFY_CLI_PATH
TEST(Binary, ExitCodesThroughProcess) {
  const std::string exe = QPURIFY_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int s = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("hashing --d 2 --fmin"), 0);
  EXPECT_EQ(status("oracle-check --d-list 7"), 2);
  EXPECT_EQ(status("hashing --d 2 --fmin --output /nonexistent/x.csv"), 1);
  EXPECT_EQ(status("--help"), 0);
}
#endif

}  // namespace
}  // namespace qpurify::cli
