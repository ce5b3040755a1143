#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../tools/cli_app.hpp"
#include "nestdig/construct.hpp"
#include "nestdig/edgelist.hpp"
#include "nestdig/model.hpp"
#include "support.hpp"

using namespace nestdig;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;

    json out_json() const { return json::parse(out); }
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_file(const std::string& name,
                                   const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "nestdig-cli-tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

std::string running_path() {
    static std::string p =
        scratch_file("running.edges",
                     format_edge_list(nestdig::testing::running_example()))
            .string();
    return p;
}

} // namespace

TEST_CASE("check-ordering accepts a nest ordering") {
    auto r = run_cli({"check-ordering", running_path(), "--order", "1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out_json()["ok"] == true);
    CHECK(r.out_json()["violations"].empty());
}

TEST_CASE("check-ordering reports violations with exit 1") {
    auto path = scratch_file("notnest.edges", "3 4\n1 1\n2 2\n3 3\n1 3\n");
    auto r = run_cli({"check-ordering", path.string(), "--order", "1,2,3"});
    CHECK(r.code == 1);
    json j = r.out_json();
    CHECK(j["ok"] == false);
    bool found = false;
    for (const auto& v : j["violations"])
        if (v["rule"] == "i-first" && v["witness"] == json::array({1, 2, 3, 3}))
            found = true;
    CHECK(found);
}

TEST_CASE("check-ordering against a pattern class") {
    auto r = run_cli({"check-ordering", running_path(), "--order", "1,2,3",
                      "--class", "reflexive-interval"});
    CHECK(r.code == 0);
    CHECK(r.out_json()["ok"] == true);

    auto loopless = scratch_file("loopless.edges", "1 0\n");
    auto r2 = run_cli({"check-ordering", loopless.string(), "--order", "1",
                       "--class", "nest"});
    CHECK(r2.code == 1);
    CHECK(r2.out_json()["violations"][0]["rule"] == "nest-j");
}

TEST_CASE("build-model emits the exact model JSON") {
    auto r = run_cli({"build-model", running_path(), "--order", "1,2,3"});
    CHECK(r.code == 0);
    IntervalModel expected =
        build_model(nestdig::testing::running_example(), Ordering::identity(3));
    CHECK(r.out == model_to_json(expected).dump() + "\n");
}

TEST_CASE("build-model refuses a non-nest ordering with exit 1") {
    auto path = scratch_file("notnest.edges", "3 4\n1 1\n2 2\n3 3\n1 3\n");
    auto r = run_cli({"build-model", path.string(), "--order", "1,2,3"});
    CHECK(r.code == 1);
    CHECK(r.out_json()["error"] == "not a nest ordering");
    CHECK(r.out_json()["report"]["ok"] == false);
}

TEST_CASE("build-model then verify-model round trip") {
    auto built = run_cli({"build-model", running_path(), "--order", "1,2,3"});
    REQUIRE(built.code == 0);
    auto model_path = scratch_file("running-model.json", built.out);

    auto verified = run_cli(
        {"verify-model", model_path.string(), "--against", running_path()});
    CHECK(verified.code == 0);
    json j = verified.out_json();
    CHECK(j["ok"] == true);
    CHECK(j["mismatches"].empty());
    CHECK(j["positive_length"] == false);
    auto shapes = j["shapes"];
    CHECK(std::find(shapes.begin(), shapes.end(), "nest") != shapes.end());
    CHECK(std::find(shapes.begin(), shapes.end(), "reflexive") != shapes.end());

    auto extracted = run_cli({"extract-ordering", model_path.string()});
    CHECK(extracted.code == 0);
    CHECK(extracted.out_json()["ordering"] == json::array({1, 2, 3}));
    CHECK(extracted.out_json()["points"].size() == 3);
}

TEST_CASE("verify-model flags mismatches with exit 1") {
    auto built = run_cli({"build-model", running_path(), "--order", "1,2,3"});
    auto model_path = scratch_file("running-model.json", built.out);
    auto other = scratch_file("smaller.edges", "3 5\n1 1\n2 2\n3 3\n2 3\n3 2\n");
    auto r = run_cli({"verify-model", model_path.string(), "--against",
                      other.string()});
    CHECK(r.code == 1);
    json j = r.out_json();
    CHECK(j["ok"] == false);
    REQUIRE(j["mismatches"].size() == 1);
    CHECK(j["mismatches"][0]["u"] == 1);
    CHECK(j["mismatches"][0]["v"] == 3);
    CHECK(j["mismatches"][0]["kind"] == "intersection-without-arc");
}

TEST_CASE("recognize members and non-members") {
    auto r = run_cli({"recognize", running_path()});
    CHECK(r.code == 0);
    json j = r.out_json();
    CHECK(j["verdict"] == "member");
    CHECK(j["ordering"] == json::array({1, 2, 3}));
    CHECK(j["model"]["n"] == 3);

    auto cyc = scratch_file("twocycle.edges", "2 2\n1 2\n2 1\n");
    auto r2 = run_cli({"recognize", cyc.string()});
    CHECK(r2.code == 1);
    CHECK(r2.out_json()["verdict"] == "non-member");
    CHECK(r2.out_json()["ordering"].is_null());
    CHECK_FALSE(r2.out_json()["refutation"].get<std::string>().empty());
}

TEST_CASE("classify") {
    auto r = run_cli({"classify", running_path()});
    CHECK(r.code == 0);
    json classes = r.out_json()["classes"];
    CHECK(classes.size() == 7);
    CHECK(classes["nest"]["admitted"] == true);
    CHECK(classes["nest"]["ordering"].is_array());
}

TEST_CASE("census") {
    auto r = run_cli({"census", "--n", "2", "--reflexive"});
    CHECK(r.code == 0);
    json j = r.out_json();
    CHECK(j["total"] == 4);
    CHECK(j["nest_agreement"] == 4);
    CHECK(j["admitted"]["nest"] == 4);
}

TEST_CASE("gen matches the library generator and is deterministic") {
    auto r = run_cli({"gen", "--n", "3", "--p", "0.5", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(parse_edge_list(r.out) == random_digraph(3, 0.5, 7, false));
    CHECK(run_cli({"gen", "--n", "3", "--p", "0.5", "--seed", "7"}).out == r.out);

    auto refl = run_cli({"gen", "--n", "4", "--p", "0.3", "--seed", "1",
                         "--reflexive"});
    CHECK(parse_edge_list(refl.out).is_reflexive());
}

TEST_CASE("separate finds nothing between nest and reflexive interval") {
    auto r = run_cli({"separate", "--from", "nest", "--to",
                      "reflexive-interval", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "none\n");
}

TEST_CASE("input errors exit with 2") {
    CHECK(run_cli({"recognize", "/nonexistent/file.edges"}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"check-ordering", running_path(), "--order", "1,2"}).code == 2);
    CHECK(run_cli({"check-ordering", running_path(), "--order", "1,2,x"}).code == 2);
    CHECK(run_cli({"check-ordering", running_path(), "--order", "1,2,3",
                   "--class", "bogus"}).code == 2);
    auto bad = scratch_file("bad.edges", "2 1\n1 5\n");
    CHECK(run_cli({"recognize", bad.string()}).code == 2);
    auto badmodel = scratch_file("bad-model.json",
                                 R"({"n":1,"intervals":[{"I":["2/4","1/1"],"J":["1/1","1/1"]}]})");
    CHECK(run_cli({"extract-ordering", badmodel.string()}).code == 2);
}

TEST_CASE("bound overruns exit with 3") {
    CHECK(run_cli({"census", "--n", "5", "--reflexive"}).code == 3);
    auto big = run_cli({"gen", "--n", "10", "--p", "0.5", "--seed", "3",
                        "--reflexive"});
    auto big_path = scratch_file("big.edges", big.out);
    CHECK(run_cli({"recognize", big_path.string()}).code == 3);
}
