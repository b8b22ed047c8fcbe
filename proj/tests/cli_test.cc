// Copyright 2026 The qudit-mub Authors
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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qudit_mub/gates.h"
#include "qudit_mub/json_io.h"

using namespace qmub;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qudit-mub");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "qudit_mub_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string run_binary(const std::string &args) {
    std::string cmd = std::string(QUDIT_MUB_CLI_PATH) + " " + args;
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, n);
    }
    pclose(p);
    return out;
}

}  // namespace

TEST(cli, basis_and_verify) {
    auto path = scratch("basis3.json");
    auto r = run({"basis", "--dims", "3", "--json", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    auto v = run({"verify", path.string(), "--json"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(Json::parse(v.out)["pass"], true);

    Json broken = Json::parse(slurp(path));
    broken["elements"][2]["perm"] = broken["elements"][1]["perm"];
    broken["elements"][2]["phase"] = broken["elements"][1]["phase"];
    auto bad = scratch("broken.json");
    std::ofstream(bad) << broken.dump();
    auto vb = run({"verify", bad.string(), "--json"});
    EXPECT_EQ(vb.code, 1);
    EXPECT_EQ(Json::parse(vb.out)["pass"], false);

    auto missing = run({"verify", scratch("absent.json").string()});
    EXPECT_EQ(missing.code, 2);
}

TEST(cli, composite_basis) {
    auto r = run({"basis", "--dims", "6", "--json"});
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["dims"].dump(), "[2,3]");
    EXPECT_EQ(j["elements"].size(), 36u);
}

TEST(cli, partition) {
    auto r = run({"partition", "--dims", "3", "--json"});
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["families"].size(), 4u);
    EXPECT_EQ(j["report"]["pass"], true);
    EXPECT_EQ(run({"partition", "--dims", "4"}).code, 2);
    EXPECT_EQ(run({"partition", "--dims", "3,3"}).code, 2);
}

TEST(cli, knight) {
    auto r4 = run({"knight", "--d", "4", "--json"});
    EXPECT_EQ(r4.code, 0);
    Json j4 = Json::parse(r4.out);
    EXPECT_EQ(j4["matrices"][0]["valid"], false);
    EXPECT_EQ(j4["matrices"][0]["violations"][0]["kind"], "column");

    auto r5 = run({"knight", "--d", "5", "--json"});
    EXPECT_EQ(r5.code, 0);
    Json j5 = Json::parse(r5.out);
    EXPECT_EQ(j5["matrices"].size(), 3u);
    EXPECT_EQ(j5["search"]["count"], 3);

    auto rb = run({"knight", "--d", "11", "--b", "4", "--json"});
    EXPECT_EQ(rb.code, 0);
    EXPECT_EQ(Json::parse(rb.out)["matrices"].size(), 1u);
    EXPECT_FALSE(Json::parse(rb.out).contains("search"));
    EXPECT_EQ(run({"knight", "--d", "5", "--b", "7"}).code, 2);
}

TEST(cli, classify) {
    auto r = run({"classify", "--gate", "F", "--dims", "3", "--json"});
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["characterizable"], true);
    EXPECT_EQ(j["mub_preserving"], true);
    auto n = run({"classify", "--gate", "random:3", "--dims", "2", "--json"});
    EXPECT_EQ(Json::parse(n.out)["characterizable"], false);
    EXPECT_EQ(run({"classify", "--gate", "bogus", "--dims", "2"}).code, 2);
    EXPECT_EQ(run({"classify", "--gate", "F"}).code, 2);

    auto gate_file = scratch("gate.json");
    std::ofstream(gate_file) << to_json(gate_from_name("CSUM", {3, 3})).dump();
    auto f = run({"classify", "--gate", gate_file.string(), "--json"});
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(Json::parse(f.out)["characterizable"], true);
    EXPECT_EQ(run({"classify", "--gate", gate_file.string(), "--dims", "9"}).code, 2);
}

TEST(cli, estimate) {
    auto r = run({"estimate", "--gate", "F", "--dims", "3", "--channel", "depolarizing:0.1", "--samples", "2000", "--seed",
                  "7", "--json"});
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    double mean = j["raw_mean"];
    double se = j["stderr"];
    double exact = j["exact_reference"];
    EXPECT_NEAR(exact, 0.9333333333333333, 1e-12);
    EXPECT_LT(std::abs(mean - exact), 3 * se);
    EXPECT_EQ(j["n_samples"], 2000);
    EXPECT_EQ(j["seed"], 7);

    auto ch_file = scratch("channel.json");
    std::ofstream(ch_file) << to_json(unitary_error(gate_from_name("F", {3}))).dump();
    auto perfect = run({"estimate", "--gate", "F", "--dims", "3", "--channel", ch_file.string(), "--json"});
    EXPECT_EQ(perfect.code, 0);
    EXPECT_NEAR(Json::parse(perfect.out)["mean"].get<double>(), 1.0, 1e-12);

    auto shots = run({"estimate", "--gate", "X", "--dims", "2", "--channel", "dephasing:0.1", "--samples", "50",
                      "--shots", "20", "--json"});
    EXPECT_EQ(shots.code, 0);
    EXPECT_EQ(Json::parse(shots.out)["shots"], 20);

    EXPECT_EQ(run({"estimate", "--gate", "F", "--dims", "3", "--channel", "depolarizing:2"}).code, 2);
    EXPECT_EQ(run({"estimate", "--gate", "F", "--dims", "3", "--channel", "nope:0.1"}).code, 2);
    EXPECT_EQ(run({"estimate", "--gate", "F", "--dims", "3", "--channel", "depolarizing:x"}).code, 2);
    EXPECT_EQ(run({"estimate", "--gate", "F", "--dims", "3", "--channel", "identity", "--samples", "0"}).code, 2);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"basis", "--dims", "3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"basis"}).code, 2);
    EXPECT_EQ(run({"basis", "--dims", "1"}).code, 2);
    EXPECT_EQ(run({"basis", "--dims", "3", "extra"}).code, 2);
    auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("partition"), std::string::npos);
}

TEST(cli, text_output) {
    auto r = run({"partition", "--dims", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pass: true"), std::string::npos);
}

TEST(cli, binary_output_is_byte_identical) {
    for (std::string args : {"estimate --gate F --dims 3 --channel depolarizing:0.1 --samples 500 --seed 11 --json",
                             "classify --gate tensor:F+S --dims 3,3 --json",
                             "partition --dims 5 --json"}) {
        std::string a = run_binary(args);
        std::string b = run_binary(args);
        EXPECT_FALSE(a.empty());
        EXPECT_EQ(a, b) << args;
    }
}
