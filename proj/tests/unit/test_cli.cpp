/*
   Copyright 2026 The gkmcoh Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gkm;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(GKMCOH_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch_file(const std::string& name, const std::string& text) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

std::string cube_path() {
    static std::string path = [] {
        Json j = graph_to_json(hypercube_graph(3).graph);
        return scratch_file("gkmcoh_test_cube.json", j.dump()).string();
    }();
    return path;
}

} // namespace

TEST_CASE("cli generators emit valid graphs") {
    RunResult cube = run("gen cube 3");
    CHECK(cube.exit_code == 0);
    Json j = Json::parse(cube.out);
    CHECK(j["vertices"].size() == 8);
    CHECK(j["edges"].size() == 12);
    CHECK(j["two_faces"].size() == 6);
    CHECK(graph_from_json(j) == hypercube_graph(3).graph);

    Json simplex = Json::parse(run("gen simplex 2").out);
    CHECK(simplex["vertices"].size() == 3);

    Json bruhat = Json::parse(run("gen bruhat 3").out);
    CHECK(bruhat["vertices"].size() == 6);
    CHECK(bruhat["edges"].size() == 9);

    RunResult prod = run("gen product cube 1 cube 2");
    CHECK(prod.exit_code == 0);
    Json jp = Json::parse(prod.out);
    CHECK(jp["vertices"].size() == 8);
    CHECK(jp["edges"].size() == 12);

    RunResult nested = run("gen product product cube 1 cube 1 simplex 1");
    CHECK(nested.exit_code == 0);
    CHECK(Json::parse(nested.out)["vertices"].size() == 8);
}

TEST_CASE("cli output is byte-identical across runs") {
    RunResult a = run("gen cube 3");
    RunResult b = run("gen cube 3");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
    CHECK(a.out.back() == '\n');
}

TEST_CASE("cli rejects bad generator expressions") {
    CHECK(run("gen cube").exit_code == 2);
    CHECK(run("gen cube x").exit_code == 2);
    CHECK(run("gen frobnicate 3").exit_code == 2);
    CHECK(run("gen cube 3 extra").exit_code == 2);
    CHECK(run("gen product cube 1").exit_code == 2);
    CHECK(run("gen bruhat 9").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("cli counterexample walk-through") {
    RunResult r = run("counterexample-cube");
    CHECK(r.exit_code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["is_class"] == true);
    CHECK(j["witness_verified"] == true);
    CHECK(j["extension"]["ok"] == false);
    CHECK(j["extension"]["failed_at"] == "010");
    const Json& w = j["extension"]["certificate"]["witness"];
    CHECK(w["i"] == 0);
    CHECK(w["j"] == 1);
    CHECK(w["difference"] ==
          Json::array({Json{{"exps", Json::array({0, 0, 1})}, {"coef", "1"}}}));
    CHECK(w["moduli"][0] == Json::array({"0", "1", "0"}));
    CHECK(w["moduli"][1] == Json::array({"1", "0", "0"}));
}

TEST_CASE("cli class check and basis") {
    std::string cube = cube_path();
    LabeledGraph cubeg = hypercube_graph(3).graph;
    GradedClass ones;
    for (const std::string& id : cubeg.vertex_ids())
        ones.set(id, Polynomial::constant(3, 1));
    std::string cls =
        scratch_file("gkmcoh_test_ones.json", class_to_json(ones).dump()).string();
    RunResult ok = run("check-class -g " + cube + " -c " + cls);
    CHECK(ok.exit_code == 0);
    CHECK(Json::parse(ok.out)["is_class"] == true);

    GradedClass bad = ones;
    bad.set("000", Polynomial::variable(3, 0));
    std::string badf =
        scratch_file("gkmcoh_test_bad.json", class_to_json(bad).dump()).string();
    RunResult no = run("check-class -g " + cube + " -c " + badf);
    CHECK(no.exit_code == 1);
    Json jn = Json::parse(no.out);
    CHECK(jn["is_class"] == false);
    CHECK(jn.contains("failing_edge"));

    RunResult basis = run("basis -g " + cube + " -d 1");
    CHECK(basis.exit_code == 0);
    Json jb = Json::parse(basis.out);
    REQUIRE(jb["degrees"].size() == 2);
    CHECK(jb["degrees"][0]["dim"] == 1);
    CHECK(jb["degrees"][1]["dim"] == 6);
}

TEST_CASE("cli extension pipeline") {
    std::string cube = cube_path();
    LabeledGraph g = hypercube_graph(3).graph;
    LabeledGraph sub = g.induced({"000", "001", "011", "111", "110"});
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial z = Polynomial::variable(3, 2);
    GradedClass cls;
    for (const std::string& id : sub.vertex_ids())
        cls.set(id, id == "110" ? x + z : x);
    std::string clsf =
        scratch_file("gkmcoh_test_5v.json", class_to_json(cls).dump()).string();

    RunResult r = run("extend -g " + cube + " --sub 000,001,011,111,110 -c " + clsf +
                      " --order 010,100,101");
    CHECK(r.exit_code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["ok"] == false);
    CHECK(j["failed_at"] == "010");
    CHECK(j["certificate"]["outcome"] == "obstructed");

    GradedClass good = restrict_class(cohomology_basis(g, 1)[0], sub);
    std::string goodf =
        scratch_file("gkmcoh_test_good.json", class_to_json(good).dump()).string();
    RunResult s = run("extend -g " + cube + " --sub 000,001,011,111,110 -c " + goodf);
    CHECK(s.exit_code == 0);
    Json js = Json::parse(s.out);
    CHECK(js["ok"] == true);
    CHECK(class_from_json(js["result"], 3).values.size() == 8);

    RunResult pair = run("check-pair -g " + cube + " --vertex 010 -d 2");
    CHECK(pair.exit_code == 0);
    CHECK(Json::parse(pair.out)["cr_pair"] == true);
}

TEST_CASE("cli surjectivity, sweep and span checks") {
    std::string cube = cube_path();
    RunResult sur =
        run("surjective -g " + cube + " --sub 000,001,011,111,110 -d 1");
    CHECK(sur.exit_code == 1);
    Json j = Json::parse(sur.out);
    CHECK(j["surjective"] == false);
    CHECK(j["degrees"][1]["image_dim"] == 6);

    RunResult sweep = run("sweep -g " + cube + " --xi 1,2,4 --cutoff 5/2 -d 2");
    CHECK(sweep.exit_code == 0);
    Json js = Json::parse(sweep.out);
    CHECK(js["sweep"]["ok"] == true);
    CHECK(js["oracle"]["surjective"] == true);
    CHECK(js["consistent"] == true);
    CHECK(js["order"] ==
          Json::array({"110", "001", "101", "011", "111"}));

    std::string s3 = scratch_file("gkmcoh_test_s3.json",
                                  graph_to_json(gen_bruhat(3).graph).dump())
                         .string();
    RunResult span = run("span-check -g " + s3 + " --interval 123:231");
    CHECK(span.exit_code == 0);
    Json jspan = Json::parse(span.out);
    CHECK(jspan["report"]["ok"] == true);
    CHECK(jspan["order"] == Json::array({"312", "321"}));

    RunResult spanbad = run("span-check -g " + s3 + " --interval 231:123");
    CHECK(spanbad.exit_code == 2);
}

TEST_CASE("cli reads graphs from stdin by default") {
    std::string cmd = std::string(GKMCOH_BIN) + " gen cube 2 | " +
                      std::string(GKMCOH_BIN) + " export-dot";
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.rfind("graph G {", 0) == 0);
}

TEST_CASE("cli error paths exit with 2") {
    std::string junk = scratch_file("gkmcoh_test_junk.json", "not json").string();
    CHECK(run("basis -g " + junk).exit_code == 2);
    CHECK(run("basis -g /nonexistent/file.json").exit_code == 2);
    std::string cube = cube_path();
    CHECK(run("surjective -g " + cube + " --sub 000,zzz").exit_code == 2);
    CHECK(run("sweep -g " + cube + " --xi 1,1,0 --cutoff 1").exit_code == 2);
    CHECK(run("sweep -g " + cube + " --xi 1,2 --cutoff 1").exit_code == 2);
    CHECK(run("span-check -g " + cube + " --interval 123:231").exit_code == 2);
    CHECK(run("extend -g " + cube + " --sub 000 -c " + junk).exit_code == 2);
}

TEST_CASE("cli degree cap environment variable") {
    std::string cube = cube_path();
    RunResult capped = run("basis -g " + cube, "GKMCOH_DEGREE_CAP=1");
    CHECK(capped.exit_code == 0);
    CHECK(Json::parse(capped.out)["degrees"].size() == 2);

    RunResult defaulted = run("basis -g " + cube + " -d 0", "GKMCOH_DEGREE_CAP=1");
    CHECK(Json::parse(defaulted.out)["degrees"].size() == 1);  // flag wins

    CHECK(run("basis -g " + cube, "GKMCOH_DEGREE_CAP=banana").exit_code == 2);
}

TEST_CASE("cli help exits zero") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("gen --help").exit_code == 0);
}
