// Copyright 2026 The hqc Authors
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

#include <filesystem>
#include <numbers>
#include <sstream>

#include "hqc/cli.hpp"
#include "hqc/families.hpp"
#include "hqc/io.hpp"
#include "test_support.hpp"

namespace hqc {
namespace {

using nlohmann::json;
using testing::kSqrt2;
using testing::singlet;
using testing::werner;

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hqc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    std::string save_state(const std::string &name, const DensityMatrix &rho) const {
        write_text_file(path(name), state_to_json(rho).dump());
        return path(name);
    }

    int run(const std::vector<std::string> &args, const cli::Environment &env = {}) {
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_, env);
    }

    json output() const { return json::parse(out_.str()); }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(Cli, AnalyzeSinglet) {
    ASSERT_EQ(run({"analyze", save_state("s.json", singlet())}), 0);
    const json j = output();
    EXPECT_NEAR(j["report"]["b"].get<double>(), kSqrt2, 1e-14);
    EXPECT_TRUE(j["report"]["flags"].empty());
    EXPECT_EQ(j["seed_source"], "default");
}

TEST_F(Cli, AnalyzeQuasiDistillable) {
    ASSERT_EQ(run({"analyze", save_state("qd.json", rho_qd(0.4))}), 0);
    const auto flags = output()["report"]["flags"];
    for (const char *f : {"NO_CHSH_VIOLATION", "MAXIMAL_HIDDEN_CHSH", "A_INACCESSIBLE_CHSH", "B_INACCESSIBLE_CHSH",
                          "AB_INACCESSIBLE_CHSH"}) {
        EXPECT_TRUE(std::find(flags.begin(), flags.end(), f) != flags.end()) << f;
    }
}

TEST_F(Cli, AnalyzeRMatrixCsv) {
    write_text_file(path("r.csv"), r_to_csv(to_r_picture(singlet())));
    ASSERT_EQ(run({"analyze", path("r.csv")}), 0);
    EXPECT_NEAR(output()["report"]["f3"].get<double>(), std::numbers::sqrt3, 1e-14);
    ASSERT_EQ(run({"analyze", path("r.csv"), "--format", "rcsv"}), 0);
}

TEST_F(Cli, InputErrorsGiveErrorJson) {
    write_text_file(path("bad.json"), "{\"dim\": [2,2], \"matrix\": ");
    EXPECT_EQ(run({"analyze", path("bad.json")}), 2);
    EXPECT_EQ(output()["error"]["kind"], "ParseError");

    json j = state_to_json(singlet());
    j["matrix"][0][0]["re"] = -0.5;
    j["matrix"][1][1]["re"] = 1.0;
    write_text_file(path("neg.json"), j.dump());
    EXPECT_EQ(run({"analyze", path("neg.json")}), 2);
    EXPECT_EQ(output()["error"]["kind"], "NotPositive");

    EXPECT_EQ(run({"analyze", path("missing.json")}), 2);
    EXPECT_EQ(output()["error"]["kind"], "IoError");

    EXPECT_EQ(run({"frobnicate"}), 2);
    EXPECT_EQ(output()["error"]["kind"], "ParseError");
    EXPECT_EQ(run({}), 2);
}

TEST_F(Cli, Help) {
    EXPECT_EQ(run({"--help"}), 0);
    EXPECT_NE(out_.str().find("sweep"), std::string::npos);
}

TEST_F(Cli, Certify) {
    const std::string qd = save_state("qd.json", rho_qd(0.5));
    ASSERT_EQ(run({"certify", qd, "--party", "A", "--objective", "f3"}), 0);
    EXPECT_TRUE(output()["certified"].get<bool>());
    EXPECT_NEAR(output()["centre_magnitude"].get<double>(), 2.0 / 3.0, 1e-14);
    ASSERT_EQ(run({"certify", qd, "--party", "A", "--objective", "f3", "--c-chsh", "0.5", "--c-f3", "0.7"}), 0);
    EXPECT_FALSE(output()["certified"].get<bool>());
    EXPECT_EQ(run({"certify", qd, "--party", "C"}), 2);
    EXPECT_EQ(run({"certify", qd, "--c-chsh", "0.8"}), 2);
}

TEST_F(Cli, ScanQuasiDistillableReportsRoots) {
    ASSERT_EQ(run({"scan", "qd", "--p", "0.01:0.99:99", "--out", path("qd.csv")}), 0);
    const json j = output();
    EXPECT_NEAR(j["boundary"]["chsh"].get<double>(), 0.6667, 5e-5);
    EXPECT_NEAR(j["boundary"]["f3"].get<double>(), 0.5075, 5e-5);
    EXPECT_EQ(j["rows"], 99);
    const std::string csv = read_text_file(path("qd.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "theta,p,B,F3,HBstar,HF3star,cA,cB,entangled,flags");
}

TEST_F(Cli, ScanMaximallyMixedMarginals) {
    ASSERT_EQ(run({"scan", "mm", "--theta", "0:0.785:50", "--p", "0:1:50", "--out", path("mm.csv")}), 0);
    EXPECT_GT(output()["flag_counts"]["AB_INACCESSIBLE_CHSH"].get<int>(), 0);
}

TEST_F(Cli, ScanBadGrids) {
    EXPECT_EQ(run({"scan", "m", "--p", "0:1:0", "--out", path("x.csv")}), 2);
    EXPECT_EQ(output()["error"]["kind"], "DomainError");
    EXPECT_EQ(run({"scan", "m", "--p", "0:1", "--out", path("x.csv")}), 2);
    EXPECT_EQ(run({"scan", "m", "--p", "0:2:3", "--out", path("x.csv")}), 2);
    EXPECT_EQ(run({"scan", "werner", "--out", path("x.csv")}), 2);
}

TEST_F(Cli, SweepWritesEnvelopeDeterministically) {
    const std::vector<std::string> args{"sweep", "--n", "20000", "--seed", "42", "--out-prefix", path("a")};
    ASSERT_EQ(run(args), 0);
    EXPECT_TRUE(output()["violations"].empty());
    EXPECT_EQ(output()["seed"], 42);
    const std::string first = read_text_file(path("a_envelope.csv"));
    ASSERT_EQ(run(args), 0);
    EXPECT_EQ(read_text_file(path("a_envelope.csv")), first);
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--workers", "3"});
    ASSERT_EQ(run(threaded), 0);
    EXPECT_EQ(read_text_file(path("a_envelope.csv")), first);
}

TEST_F(Cli, SweepEmpty) {
    ASSERT_EQ(run({"sweep", "--n", "0", "--out-prefix", path("e")}), 0);
    EXPECT_EQ(read_text_file(path("e_envelope.csv")), "c_mid,max_B,max_F3,count\n");
}

TEST_F(Cli, SweepSeedFromEnvironmentIsFlagged) {
    cli::Environment env;
    env.hqc_seed = "17";
    ASSERT_EQ(run({"sweep", "--n", "100", "--out-prefix", path("s")}, env), 0);
    EXPECT_EQ(output()["seed"], 17);
    EXPECT_EQ(output()["seed_source"], "env:HQC_SEED");
    ASSERT_EQ(run({"sweep", "--n", "100", "--seed", "3", "--out-prefix", path("s")}, env), 0);
    EXPECT_EQ(output()["seed"], 3);
    EXPECT_EQ(output()["seed_source"], "flag");
    env.hqc_seed = "x";
    EXPECT_EQ(run({"sweep", "--n", "100", "--out-prefix", path("s")}, env), 2);
}

TEST_F(Cli, SweepCounterexampleExitCode) {
    // Thresholds far below the true ones turn ordinary states into findings.
    ASSERT_EQ(run({"sweep", "--n", "2000", "--c-chsh", "0.01", "--c-f3", "0.02", "--out-prefix", path("c")}), 3);
    const json j = output();
    ASSERT_FALSE(j["violations"].empty());
    const std::string dumped = j["violations"][0]["state_file"];
    EXPECT_NO_THROW(state_from_json(parse_json(read_text_file(dumped))));
}

TEST_F(Cli, FilterPaperFilter) {
    const double theta = std::numbers::pi / 6;
    const DensityMatrix rho = rho_m({theta, 0.5});
    const auto [fa, fb] = paper_filter_rho_m(theta);
    write_text_file(path("fa.json"), filter_to_json(fa).dump());
    ASSERT_EQ(run({"filter", save_state("m.json", rho), "--fa", path("fa.json"), "--out", path("f.json")}), 0);
    const json j = output();
    EXPECT_NEAR(j["after"]["b"].get<double>(), hidden_chsh(to_r_picture(rho)), 1e-8);
    EXPECT_LT(j["success_probability"].get<double>(), 1.0);
    EXPECT_NO_THROW(state_from_json(parse_json(read_text_file(path("f.json")))));
}

TEST_F(Cli, FilterIdentity) {
    write_text_file(path("id.json"), filter_to_json(LocalFilter::identity()).dump());
    ASSERT_EQ(run({"filter", save_state("w.json", werner(0.7)), "--fa", path("id.json"), "--fb", path("id.json")}), 0);
    const json j = output();
    EXPECT_NEAR(j["success_probability"].get<double>(), 1.0, 1e-15);
    EXPECT_NEAR(j["after"]["b"].get<double>(), j["before"]["b"].get<double>(), 1e-15);
}

TEST_F(Cli, FilterOptimise) {
    ASSERT_EQ(run({"filter", save_state("w.json", werner(0.5)), "--optimize", "A", "chsh", "--starts", "8"}), 0);
    const json j = output();
    EXPECT_NEAR(j["optimizer"]["value"].get<double>(), 0.5 * kSqrt2, 1e-6);
    EXPECT_NEAR(j["after"]["b"].get<double>(), 0.5 * kSqrt2, 1e-6);
}

TEST_F(Cli, FilterErrors) {
    const std::string s = save_state("s.json", testing::basis_state(3));
    EXPECT_EQ(run({"filter", s}), 2);
    json f{{"f", {{{{"re", 1.0}, {"im", 0.0}}, {{"re", 0.0}, {"im", 0.0}}},
                  {{{"re", 0.0}, {"im", 0.0}}, {{"re", 1e-7}, {"im", 0.0}}}}}};
    write_text_file(path("kill.json"), f.dump());
    EXPECT_EQ(run({"filter", s, "--fa", path("kill.json")}), 2);
    EXPECT_EQ(output()["error"]["kind"], "ZeroSuccessProbability");
}

}  // namespace
}  // namespace hqc
