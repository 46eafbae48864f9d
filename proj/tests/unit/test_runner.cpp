// SPDX-License-Identifier: Apache-2.0
//
// mmblock: line-of-sight blockage analysis and simulation for mmWave networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mmblock/config.hpp"
#include "mmblock/csv.hpp"
#include "mmblock/errors.hpp"
#include "mmblock/runner.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mmblock;
using namespace mmblock::io;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

class RunnerTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("mmblock_runner_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    ExperimentSpec spec(const std::string &text, std::vector<std::string> overrides = {})
    {
        overrides.push_back("output=" + (dir_ / "out").string());
        return parse_config(text, overrides);
    }

    fs::path dir_;
    std::ostringstream log_;
};

} // namespace

TEST_F(RunnerTest, AnalyticSweepWritesThreeFigures)
{
    const auto s = spec("mode = analytic-sweep\nbs_density_per_km2 = 10:1000:12\n"
                        "blocker_density_per_m2 = 0.01,0.1\nself_blockage_deg = 0,60\n");
    const auto summary = run(s, log_);
    ASSERT_EQ(summary.files.size(), 3u);
    for (const char *suffix : {"_probability.csv", "_frequency.csv", "_duration.csv"}) {
        const auto text = slurp(dir_ / ("out" + std::string(suffix)));
        const auto ls = lines(text);
        ASSERT_GE(ls.size(), 2u);
        EXPECT_EQ(ls[0].rfind("# mmblock-results v1 mode=analytic-sweep seed=1", 0), 0u);
        EXPECT_EQ(ls[1], csv_header());
        EXPECT_EQ(text.find('\r'), std::string::npos);
        EXPECT_EQ(text.back(), '\n');
    }
    // 48 grid points, 3 + 2 + 2 metrics each
    EXPECT_EQ(summary.rows, 48u * 7u);
    EXPECT_EQ(summary.undefined_rows, 0u);
}

TEST_F(RunnerTest, GoldenAnalyticSweep)
{
    const auto s = spec("mode = analytic-sweep\nbs_density_per_km2 = 50,200,800\nblocker_density_per_m2 = 0.01,0.1\n");
    run(s, log_);
    for (const char *suffix : {"_probability.csv", "_frequency.csv", "_duration.csv"}) {
        const fs::path golden = fs::path(MMBLOCK_GOLDEN_DIR) / ("analytic_sweep" + std::string(suffix));
        EXPECT_EQ(slurp(dir_ / ("out" + std::string(suffix))), slurp(golden)) << golden;
    }
}

TEST_F(RunnerTest, ZeroCoverageIsFlaggedPerRow)
{
    const auto s = spec("mode = analytic-sweep\nbs_density_per_km2 = 0,100\n");
    const auto summary = run(s, log_);
    EXPECT_GT(summary.undefined_rows, 0u);
    const auto text = slurp(dir_ / "out_probability.csv");
    EXPECT_NE(text.find(",conditional_blockage_probability,,,,analytic,undefined"), std::string::npos);
}

TEST_F(RunnerTest, PlanDefaultsGiveOneRow)
{
    const auto summary = run(spec("mode = plan\n"), log_);
    EXPECT_EQ(summary.rows, 1u);
    const auto ls = lines(slurp(dir_ / "out.csv"));
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_NE(ls[2].find("min_bs_density_marginal_per_m2,4.50100"), std::string::npos);
    EXPECT_NE(log_.str().find("450.1"), std::string::npos);
}

TEST_F(RunnerTest, PlanInfeasibleRow)
{
    const auto summary = run(spec("mode = plan\nself_blockage_deg = 360\n"), log_);
    EXPECT_EQ(summary.infeasible_rows, 1u);
    EXPECT_NE(slurp(dir_ / "out.csv").find("infeasible"), std::string::npos);
}

TEST_F(RunnerTest, CompareIsByteIdenticalAcrossRunsAndThreads)
{
    const std::string text = "mode = compare\niterations = 12\nhorizon_s = 300\nblocker_density_per_m2 = 0.1\n"
                             "bs_density_per_km2 = 100,200\n";
    run(spec(text), log_, 1);
    const auto first = slurp(dir_ / "out.csv");
    run(spec(text), log_, 1);
    EXPECT_EQ(slurp(dir_ / "out.csv"), first);
    run(spec(text), log_, 3);
    EXPECT_EQ(slurp(dir_ / "out.csv"), first);

    const auto ls = lines(first);
    ASSERT_EQ(ls.size(), 2u + 2u * 8u);
    EXPECT_NE(ls[2].find(",analytic,"), std::string::npos);
    EXPECT_NE(ls[3].find(",simulated,"), std::string::npos);
}

TEST_F(RunnerTest, StratifiedCompareIsDeterministic)
{
    const std::string text = "mode = compare\nestimator = stratified\niterations = 30\nhorizon_s = 300\n";
    run(spec(text), log_, 1);
    const auto first = slurp(dir_ / "out.csv");
    run(spec(text), log_, 2);
    EXPECT_EQ(slurp(dir_ / "out.csv"), first);
    EXPECT_NE(first.find("estimator=stratified"), std::string::npos);
}

TEST_F(RunnerTest, SchemaStableUnderOverrideOrder)
{
    const std::string base = "mode = analytic-sweep\n";
    run(spec(base, {"bs_density_per_km2=100,300", "blocker_density_per_m2=0.05"}), log_);
    const auto a = slurp(dir_ / "out_duration.csv");
    run(spec(base, {"blocker_density_per_m2=0.05", "bs_density_per_km2=100,300"}), log_);
    EXPECT_EQ(slurp(dir_ / "out_duration.csv"), a);
}

TEST_F(RunnerTest, UnwritableOutputIsIoErrorWithPath)
{
    auto s = spec("mode = plan\n");
    s.output = (dir_ / "missing" / "sub" / "out").string();
    try {
        run(s, log_);
        FAIL() << "expected IoError";
    } catch (const IoError &e) {
        EXPECT_NE(std::string(e.what()).find("missing/sub/out.csv"), std::string::npos);
    }
}

TEST(Csv, ScientificFormatting)
{
    EXPECT_EQ(format_scientific(0.0), "0.000000000e+00");
    EXPECT_EQ(format_scientific(450.1), "4.501000000e+02");
    EXPECT_EQ(format_scientific(std::numeric_limits<double>::quiet_NaN()), "");
}
