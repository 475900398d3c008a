#include "doctest.h"

#include "kunzkit/cli.hpp"
#include "kunzkit/jsonio.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = kunzkit::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

const char* m8_hyperplanes =
    "[[0,0,2,0,0,-1,0],[0,-1,1,0,0,0,1],[-1,0,0,1,1,0,0],"
    "[0,0,0,0,0,-1,2],[-1,0,1,0,0,1,0],[-1,1,0,0,0,0,1]]";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pinned outputs") {
    auto dim = run({"dimension", "--m", "8", "--hyperplanes", m8_hyperplanes});
    CHECK(dim.code == 0);
    CHECK(dim.out == "2\n");

    auto betti = run({"betti-matrix", "--m", "8", "--hyperplanes", m8_hyperplanes});
    CHECK(betti.code == 0);
    CHECK(betti.out == "[[2,0,0,-2],[3,-1,-1,0]]\n");

    auto fact = run({"factorizations", "6,7,8,9", "--element-class", "4"});
    CHECK(fact.code == 0);
    CHECK(fact.out == "[[1,0,1],[0,2,0]]\n");
}

TEST_CASE("one input, many spellings") {
    const std::string golden = "{\"apery\":[7,8,9,16,17],\"m\":6}\n";
    CHECK(run({"apery", "6,7,8,9"}).out == golden);
    CHECK(run({"apery", "{\"generators\": [6, 7, 8, 9]}"}).out == golden);
    CHECK(run({"apery", "{\"m\": 6, \"kunz\": [1, 1, 1, 2, 2]}"}).out == golden);
    CHECK(run({"apery", "{\"m\": 6, \"apery\": [7, 8, 9, 16, 17]}"}).out == golden);
    CHECK(run({"apery", "6, 7, 8, 9"}).out == golden);

    const auto path = std::filesystem::temp_directory_path() / "kunzkit_cli_input.json";
    {
        std::ofstream f(path);
        f << "{\"generators\": [6, 7, 8, 9]}\n";
    }
    CHECK(run({"apery", path.string()}).out == golden);
    std::filesystem::remove(path);

    // The seed flag is accepted everywhere and changes nothing.
    CHECK(run({"apery", "6,7,8,9", "--seed", "42"}).out == golden);
}

TEST_CASE("semigroup subcommands") {
    CHECK(run({"kunz", "6,7,8,9"}).out == "{\"kunz\":[1,1,1,2,2],\"m\":6}\n");

    const auto pres = kunzkit::Json::parse(run({"minpres", "6,7,8,9"}).out);
    REQUIRE(pres.size() == 4);
    CHECK(pres[0] == kunzkit::Json({{"at", 14}, {"left", {1, 0, 1, 0}}, {"right", {0, 2, 0, 0}}}));
    CHECK(pres[3]["at"] == 18);

    const auto outer = kunzkit::Json::parse(run({"outer-betti", "6,7,8,9"}).out);
    REQUIRE(outer.size() == 3);
    CHECK(outer[0] == kunzkit::Json({{"class", 0}, {"factorizations", {{0, 0, 2}}}}));

    CHECK(run({"minpres-poset", "6,7,8,9"}).out ==
          "[{\"at\":4,\"left\":[1,0,1],\"right\":[0,2,0]}]\n");
}

TEST_CASE("poset output formats") {
    const auto js = run({"poset", "6,7,8,9"});
    CHECK(js.code == 0);
    const auto parsed = kunzkit::Json::parse(js.out);
    CHECK(parsed["atoms"] == kunzkit::Json({1, 2, 3}));
    CHECK(parsed["subgroup"] == kunzkit::Json({0}));
    CHECK(parsed["covers"].size() == 8);

    // Hyperplane and cover inputs reach the same poset.
    const auto from_face =
        run({"poset", "{\"m\": 6, \"hyperplanes\": [[1,0,1,-1,0],[0,2,0,-1,0],[0,1,1,0,-1]]}"});
    CHECK(from_face.out == js.out);
    std::string covers = "{\"m\": 6, \"covers\": [";
    bool first = true;
    for (const auto& c : parsed["covers"]) {
        if (!first) covers += ",";
        covers += "[" + c[0].dump() + "," + c[1].dump() + "]";
        first = false;
    }
    covers += "]}";
    CHECK(run({"poset", covers}).out == js.out);

    const auto dot = run({"poset", "6,7,8,9", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.substr(0, 7) == "digraph");
    CHECK(dot.out.find("label=\"+3\"") != std::string::npos);

    const auto text = run({"poset", "6,7,8,9", "--format", "text"});
    CHECK(kunzkit::Json::parse(text.out) == parsed);

    // Determinism: repeated runs are byte-identical.
    CHECK(run({"poset", "6,7,8,9", "--format", "dot"}).out == dot.out);
    CHECK(run({"outer-betti", "9,20,30,35"}).out == run({"outer-betti", "9,20,30,35"}).out);
}

TEST_CASE("parametric and find-semigroup") {
    const auto pres = kunzkit::Json::parse(run({"parametric", "6,7,8,9"}).out);
    CHECK(pres["m"] == 6);
    REQUIRE(pres["trades"].size() == 4);
    CHECK(pres["trades"][0]["ell_const"] == "0");
    CHECK(pres["trades"][1] ==
          kunzkit::Json({{"at", 0},
                         {"left", {0, 0, 0}},
                         {"right", {0, 0, 2}},
                         {"ell_coeffs", {{"1", 0}, {"2", 0}, {"3", 2}}},
                         {"ell_const", "1"}}));

    const auto found = run(
        {"find-semigroup",
         "{\"m\":6,\"equalities\":[[1,0,1,-1,0],[0,2,0,-1,0],[0,1,1,0,-1]]}", "--bound", "3"});
    CHECK(found.code == 0);
    const auto fj = kunzkit::Json::parse(found.out);
    CHECK(fj["verdict"] == "found");
    CHECK(fj["generators"] == kunzkit::Json({3, 8, 13}));

    const auto none = run({"find-semigroup", "--m", "8", "--hyperplanes", m8_hyperplanes});
    const auto nj = kunzkit::Json::parse(none.out);
    CHECK(nj["verdict"] == "provably-none");
    CHECK(nj["witness"] == kunzkit::Json({0, 1, 0, 0, 0, -1, 0}));

    const auto bounded =
        run({"find-semigroup", "{\"m\":4,\"equalities\":[[7,0,-1]]}", "--bound", "2"});
    const auto bj = kunzkit::Json::parse(bounded.out);
    CHECK(bj["verdict"] == "none-within-bound");
    CHECK(bj["reason"] == "no interior point with coefficients up to 2 over 2 kernel directions");
}

TEST_CASE("oracle check subcommand") {
    const auto js = run({"check", "6,7,8,9"});
    CHECK(js.code == 0);
    const auto parsed = kunzkit::Json::parse(js.out);
    CHECK(parsed["all"] == true);
    CHECK(parsed["properties"].size() == 8);
    for (const auto& p : parsed["properties"]) CHECK(p["pass"] == true);

    const auto text = run({"check", "2,3", "--format", "text"});
    CHECK(text.code == 0);
    CHECK(text.out.find("PASS no single trade is redundant") != std::string::npos);
    CHECK(text.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("cardinality spectra") {
    CHECK(run({"enumerate-cardinalities", "--m", "4", "--max-coord", "8"}).out == "[1,2,3,6]\n");
    CHECK(run({"enumerate-cardinalities", "--m", "5", "--max-coord", "8"}).out ==
          "[1,2,3,5,6,10]\n");
    CHECK(run({"enumerate-cardinalities", "--max-coord", "8"}).code == 2);
    CHECK(run({"enumerate-cardinalities", "--m", "0", "--max-coord", "3"}).code == 1);
}

TEST_CASE("exit codes") {
    // Domain errors name the violated precondition on stderr.
    const auto gcd = run({"apery", "6,8,10"});
    CHECK(gcd.code == 1);
    CHECK(gcd.out.empty());
    CHECK(gcd.err.find("NotNumerical") != std::string::npos);
    CHECK(run({"kunz", "{\"m\":3,\"apery\":[5,4]}"}).code == 1);
    CHECK(run({"poset", "{\"m\":6,\"hyperplanes\":[[1,0,1,-1]]}"}).code == 1);

    // Usage errors: unknown subcommand, missing input, malformed input,
    // conflicting sources, wrong format, missing required flag.
    CHECK(run({"frobenius", "6,7,8,9"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"apery"}).code == 2);
    CHECK(run({"apery", "{\"generators\": [6,"}).code == 2);
    CHECK(run({"apery", "{\"foo\": 1}"}).code == 2);
    CHECK(run({"apery", "no_such_file.json"}).code == 2);
    CHECK(run({"betti-matrix", "6,7,8,9", "--m", "8", "--hyperplanes", "[[1]]"}).code == 2);
    CHECK(run({"betti-matrix"}).code == 2);
    CHECK(run({"apery", "6,7,8,9", "--format", "dot"}).code == 2);
    CHECK(run({"apery", "6,7,8,9", "--format", "yaml"}).code == 2);
    CHECK(run({"factorizations", "6,7,8,9"}).code == 2);

    CHECK(run({"--help"}).code == 0);
    CHECK(run({"poset", "--help"}).code == 0);
}

}  // TEST_SUITE
