// Copyright 2026 The Antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "antimagic/constructive.hpp"
#include "antimagic/spider_tree.hpp"
#include "antimagic/text_format.hpp"

namespace antimagic::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("antimagic_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string spec(const std::string& name, int core, const std::string& left,
                   const std::string& right) const {
    return write(name, "core = " + std::to_string(core) + "\nleft = " + left +
                           "\nright = " + right + "\n");
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char kFigure2Labeling[] =
    "m = 8\n"
    "edge = core/1, label = 3\n"
    "edge = core/2, label = 8\n"
    "edge = R/odd/1/1, label = 1\n"
    "edge = R/odd/2/1, label = 4\n"
    "edge = L/odd/1/1, label = 6\n"
    "edge = L/odd/1/2, label = 2\n"
    "edge = L/odd/1/3, label = 7\n"
    "edge = L/unit/1, label = 5\n";

TEST_F(CliTest, LabelFigure2) {
  const std::string s = spec("fig2.txt", 2, "3,1", "1,1");
  EXPECT_EQ(run({"label", "--spec", s, "--out", path("fig2.lab")}), kExitOk);
  EXPECT_EQ(read("fig2.lab"), kFigure2Labeling);
  EXPECT_THAT(out_.str(), HasSubstr("Figure2"));
  EXPECT_EQ(run({"label", "--spec", s}), kExitOk);
  EXPECT_EQ(out_.str(), kFigure2Labeling);
}

TEST_F(CliTest, LabelRejectsSingleSidePath) {
  EXPECT_EQ(run({"label", "--spec", spec("bad.txt", 1, "2", "1,1")}),
            kExitMalformed);
  EXPECT_THAT(err_.str(), HasSubstr("error"));
  EXPECT_EQ(run({"label", "--spec", path("missing.txt")}), kExitMalformed);
}

TEST_F(CliTest, LabelOddRightExample) {
  EXPECT_EQ(run({"label", "--spec", spec("odd.txt", 1, "1,1,1", "3,1")}),
            kExitOk);
  EXPECT_EQ(out_.str(),
            "m = 8\n"
            "edge = core/1, label = 8\n"
            "edge = R/odd/1/1, label = 1\n"
            "edge = R/odd/2/1, label = 7\n"
            "edge = R/odd/2/2, label = 6\n"
            "edge = R/odd/2/3, label = 2\n"
            "edge = L/unit/1, label = 3\n"
            "edge = L/unit/2, label = 4\n"
            "edge = L/unit/3, label = 5\n");
}

TEST_F(CliTest, LabelWritesDotAndTrace) {
  const std::string s = spec("odd.txt", 1, "1,1,1", "3,1");
  EXPECT_EQ(run({"label", "--spec", s, "--out", path("o.lab"), "--dot",
                 path("o.dot"), "--trace"}),
            kExitOk);
  EXPECT_THAT(err_.str(), HasSubstr("# route UnequalOddRight: OddRight\n"));
  EXPECT_THAT(err_.str(), HasSubstr("step=1 edge=R/odd/1/1 label=1\n"));
  EXPECT_THAT(err_.str(), HasSubstr("step=12 edge=core/1 label=8\n"));
  EXPECT_THAT(read("o.dot"), HasSubstr("[label=8]"));
}

TEST_F(CliTest, LabelIsByteIdenticalAcrossRuns) {
  const std::string s = spec("big.txt", 3, "4,2,1,1,3", "2,5,2");
  ASSERT_EQ(run({"label", "--spec", s, "--out", path("a.lab"), "--dot",
                 path("a.dot")}),
            kExitOk);
  const std::string first_out = out_.str();
  ASSERT_EQ(run({"label", "--spec", s, "--out", path("b.lab"), "--dot",
                 path("b.dot")}),
            kExitOk);
  EXPECT_EQ(out_.str(), first_out);
  EXPECT_EQ(read("a.lab"), read("b.lab"));
  EXPECT_EQ(read("a.dot"), read("b.dot"));
}

TEST_F(CliTest, VerifyFigure2) {
  const std::string s = spec("fig2.txt", 2, "3,1", "1,1");
  const std::string l = write("fig2.lab", kFigure2Labeling);
  EXPECT_EQ(run({"verify", "--spec", s, "--labeling", l, "--strong"}), kExitOk);
  EXPECT_THAT(out_.str(), HasSubstr("strongly antimagic: ok"));
  EXPECT_EQ(run({"verify", "--spec", s, "--labeling", l}), kExitOk);
}

TEST_F(CliTest, VerifySwappedLabelsFails) {
  std::string text = kFigure2Labeling;
  text.replace(text.find("label = 1\n"), 10, "label = 7\n");
  text.replace(text.find("L/odd/1/3, label = 7"), 20, "L/odd/1/3, label = 1");
  const std::string s = spec("fig2.txt", 2, "3,1", "1,1");
  EXPECT_EQ(run({"verify", "--spec", s, "--labeling", write("sw.lab", text),
                 "--strong"}),
            kExitPropertyFailure);
  EXPECT_THAT(err_.str(), HasSubstr("violation: "));
}

TEST_F(CliTest, VerifyRepeatedLabelIsBijectionFailure) {
  std::string text = kFigure2Labeling;
  text.replace(text.find("label = 8"), 9, "label = 2");
  const std::string s = spec("fig2.txt", 2, "3,1", "1,1");
  EXPECT_EQ(run({"verify", "--spec", s, "--labeling", write("rep.lab", text),
                 "--strong"}),
            kExitPropertyFailure);
  EXPECT_THAT(err_.str(), HasSubstr("bijection: FAIL"));
}

TEST_F(CliTest, VerifyMalformedInputs) {
  const std::string s = spec("fig2.txt", 2, "3,1", "1,1");
  EXPECT_EQ(run({"verify", "--spec", s, "--labeling",
                 write("x.lab", "m = 8\nedge = nowhere, label = 1\n")}),
            kExitMalformed);
  EXPECT_EQ(run({"verify", "--spec", s}), kExitMalformed);
}

TEST_F(CliTest, LabelOutputAlwaysVerifies) {
  for (const auto& c : enumerate_instances(10)) {
    const std::string s = write("in.txt", format_instance(c.as_spec()));
    ASSERT_EQ(run({"label", "--spec", s, "--out", path("in.lab")}), kExitOk);
    EXPECT_EQ(run({"verify", "--spec", s, "--labeling", path("in.lab"),
                   "--strong"}),
              kExitOk)
        << c.to_string();
  }
}

TEST_F(CliTest, SweepSmallBudgets) {
  EXPECT_EQ(run({"sweep", "--max-edges", "5", "--report", path("r5.txt")}),
            kExitOk);
  EXPECT_EQ(out_.str(), "instances=1 passed=1 failed=0\n");
  EXPECT_EQ(read("r5.txt"),
            "core=1 left=1,1 right=1,1\tm=5\ttag=EqualDeg3\t"
            "route=EqualDeg3: TypeA\tresult=pass\n"
            "# instances=1 passed=1 failed=0\n");
  EXPECT_EQ(run({"sweep", "--max-edges", "6"}), kExitOk);
  EXPECT_EQ(out_.str(), "instances=4 passed=4 failed=0\n");
  EXPECT_EQ(run({"sweep", "--max-edges", "4"}), kExitMalformed);
}

TEST_F(CliTest, SweepWorkersDoNotChangeTheReport) {
  ASSERT_EQ(run({"sweep", "--max-edges", "12", "--workers", "1", "--report",
                 path("one.txt")}),
            kExitOk);
  ASSERT_EQ(run({"sweep", "--max-edges", "12", "--workers", "3", "--report",
                 path("three.txt")}),
            kExitOk);
  EXPECT_EQ(read("one.txt"), read("three.txt"));
}

TEST_F(CliTest, SweepWithOracle) {
  ASSERT_EQ(run({"sweep", "--max-edges", "8", "--oracle-max", "7", "--report",
                 path("r.txt")}),
            kExitOk);
  const std::string report = read("r.txt");
  EXPECT_THAT(report, HasSubstr("m=7\ttag="));
  EXPECT_THAT(report, HasSubstr("\toracle=found\n"));
  EXPECT_THAT(report, ::testing::Not(HasSubstr("oracle=none")));
}

TEST_F(CliTest, SweepReportMatchesLibrary) {
  SweepOptions options;
  options.max_edges = 9;
  const SweepReport report = run_sweep(options);
  EXPECT_EQ(report.failed, 0);
  EXPECT_EQ(report.records.size(), enumerate_instances(9).size());
  for (size_t i = 0; i < report.records.size(); ++i) {
    EXPECT_EQ(report.records[i].instance, enumerate_instances(9)[i]);
  }
}

TEST_F(CliTest, OracleFigure2) {
  const std::string s = spec("fig2.txt", 2, "3,1", "1,1");
  EXPECT_EQ(run({"oracle", "--spec", s, "--strong"}), kExitOk);
  EXPECT_THAT(out_.str(), HasSubstr("# oracle found nodes="));
  const std::string witness = write("w.lab", out_.str());
  EXPECT_EQ(run({"verify", "--spec", s, "--labeling", witness, "--strong"}),
            kExitOk);
  EXPECT_EQ(run({"oracle", "--spec", s, "--timeout-seconds", "30"}), kExitOk);
}

TEST_F(CliTest, OracleBeyondBudget) {
  EXPECT_EQ(run({"oracle", "--spec", spec("big.txt", 5, "3,3,3", "3,3,3"),
                 "--strong"}),
            kExitBudget);
  EXPECT_EQ(run({"oracle", "--spec", spec("bad.txt", 1, "1", "1")}),
            kExitMalformed);
}

TEST_F(CliTest, ExportDot) {
  const std::string s = spec("fig2.txt", 2, "3,1", "1,1");
  const std::string l = write("fig2.lab", kFigure2Labeling);
  EXPECT_EQ(run({"export-dot", "--spec", s, "--labeling", l, "--out",
                 path("f.dot")}),
            kExitOk);
  const std::string dot = read("f.dot");
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 9 + 8 + 1);
  EXPECT_THAT(dot, HasSubstr("\"v_2\" -- \"v_r\" [label=8];"));

  EXPECT_EQ(run({"export-dot", "--spec", s, "--out", path("plain.dot")}),
            kExitOk);
  EXPECT_EQ(read("plain.dot").find("label="), std::string::npos);

  const std::string other = spec("odd.txt", 1, "1,1,1", "3,1");
  EXPECT_EQ(run({"export-dot", "--spec", other, "--labeling", l, "--out",
                 path("bad.dot")}),
            kExitMalformed);
  EXPECT_EQ(run({"export-dot", "--spec", s}), kExitMalformed);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), kExitMalformed);
  EXPECT_EQ(run({"frobnicate"}), kExitMalformed);
  EXPECT_EQ(run({"sweep"}), kExitMalformed);
  EXPECT_EQ(run({"sweep", "--max-edges", "6", "--workers", "0"}),
            kExitMalformed);
  EXPECT_EQ(run({"--help"}), kExitOk);
  EXPECT_THAT(out_.str(), HasSubstr("sweep"));
}

}  // namespace
}  // namespace antimagic::cli
