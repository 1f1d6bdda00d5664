#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "seshadri/cli.hpp"
#include "seshadri/errors.hpp"
#include "support/golden_cases.hpp"

using namespace seshadri;
using namespace seshadri::cli;
using json = nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_CASE("golden outputs are byte-exact") {
    for (const auto& c : golden::cases()) {
        CAPTURE(c.file);
        const auto r = golden::run(c.args);
        CHECK(r.code == kExitOk);
        CHECK(r.err.empty());
        CHECK(r.out == golden::read_file(golden::path(c.file)));
    }
}

TEST_CASE("seshadri output fields") {
    const auto r = golden::run({"seshadri", "--d", "3", "--torsion", "2"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["epsilon"] == "3/5");
    CHECK(doc["pell"]["D"] == "6");
    CHECK(doc["pell"]["l0"] == "5");
    CHECK(doc["pell"]["k0"] == "2");
    CHECK(doc["is_lower_bound"] == false);
    CHECK(doc["assumptions"] == json::array({"rho=1"}));

    const auto simple = json::parse(golden::run({"seshadri", "--d", "1"}).out);
    CHECK(simple["epsilon"] == "4/3");
    CHECK(simple["mode"] == "simple");

    const auto square = json::parse(golden::run({"seshadri", "--d", "2"}).out);
    CHECK(square["case"] == "square");
    CHECK_FALSE(square.contains("pell"));

    const auto points = json::parse(golden::run({"seshadri", "--d", "2", "--points", "3"}).out);
    CHECK(points["epsilon"] == "8/7");
    CHECK(points["is_lower_bound"] == true);
}

TEST_CASE("pell subcommand") {
    CHECK(golden::run({"pell", "2"}).out == "{\"D\":\"2\",\"l0\":\"3\",\"k0\":\"2\"}\n");
    const auto big = json::parse(golden::run({"pell", "61"}).out);
    CHECK(big["l0"] == "1766319049");
    CHECK(golden::run({"pell", "4"}).code == kExitUsage);
    CHECK(golden::run({"pell", "abc"}).code == kExitUsage);
}

TEST_CASE("parse_spec_json") {
    auto spec = parse_spec_json(json::parse(R"({"d":3,"generators":[["0","1/3","0","0"]]})"));
    CHECK(spec.mode == Mode::subgroup);
    CHECK(spec.generators.size() == 1);
    CHECK(spec.d == 3);

    spec = parse_spec_json(
        json::parse(R"({"d":2,"mode":"half_periods","e1":["0","0","0","0"],"e2":["0","1/2","0","0"]})"));
    CHECK(spec.mode == Mode::half_periods);
    CHECK(spec.e2.coords[1] == Rational::reduce(1, 2));

    spec = parse_spec_json(json::parse(R"({"d":"5","mode":"torsion","m":3})"));
    CHECK(spec.m == 3);
    CHECK(spec.d == 5);

    spec = parse_spec_json(json::parse(R"({"d":1,"generators":[["-1/3","5/2","1","0"]]})"));
    CHECK(spec.generators[0].coords[0] == Rational::reduce(2, 3));
    CHECK(spec.generators[0].coords[1] == Rational::reduce(1, 2));
}

TEST_CASE("parse_spec_json errors name the field") {
    auto message = [](const char* text) -> std::string {
        try {
            parse_spec_json(json::parse(text));
        } catch (const InputError& e) {
            return e.what();
        }
        return "no error";
    };
    CHECK(message(R"({"d":0,"generators":[]})").rfind("$.d:", 0) == 0);
    CHECK(message(R"({"generators":[]})").rfind("$.d:", 0) == 0);
    CHECK(message(R"({"d":3,"generators":[["0","x","0","0"]]})").rfind("$.generators[0][1]:", 0) == 0);
    CHECK(message(R"({"d":3,"generators":[["0","0","0"]]})").rfind("$.generators[0]:", 0) == 0);
    CHECK(message(R"({"d":3,"mode":"torsion"})").rfind("$.m:", 0) == 0);
    CHECK(message(R"({"d":3,"mode":"bogus"})").rfind("$.mode:", 0) == 0);
    CHECK(message(R"([1,2])").rfind("$:", 0) == 0);
}

TEST_CASE("spec files") {
    const auto path = write_temp("seshadri_spec_ok.json", R"({"d":3,"generators":[["0","1/3","0","0"]]})");
    const auto r = golden::run({"seshadri", path});
    REQUIRE(r.code == kExitOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["g"] == "3");
    CHECK(doc["n"] == "1");
    CHECK(doc["type_of_M"] == json::array({"1", "1"}));

    const auto bad = write_temp("seshadri_spec_bad.json", R"({"d":3,"generators":[["0","1//3","0","0"]]})");
    const auto e = golden::run({"seshadri", bad});
    CHECK(e.code == kExitUsage);
    CHECK(e.err.find("$.generators[0][1]") != std::string::npos);

    const auto broken = write_temp("seshadri_spec_broken.json", "{ not json");
    CHECK(golden::run({"seshadri", broken}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "/nonexistent/spec.json"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", path, "--d", "2"}).code == kExitUsage);
}

TEST_CASE("round trip through the embedded problem") {
    const std::vector<std::vector<std::string>> argsets{
        {"seshadri", "--d", "1"},
        {"seshadri", "--d", "4", "--gen", "1/2,0,0,1/3", "--gen", "0,1/4,0,0"},
        {"seshadri", "--d", "3", "--torsion", "3"},
        {"seshadri", "--d", "5", "--half-periods", "1/2,0,1/2,0", "0,1/2,0,0"},
        {"seshadri", "--d", "6", "--points", "7"},
    };
    for (const auto& args : argsets) {
        const auto first = golden::run(args);
        REQUIRE(first.code == kExitOk);
        const auto problem = json::parse(first.out)["problem"];
        const auto path = write_temp("seshadri_roundtrip.json", problem.dump());
        const auto second = golden::run({"seshadri", path});
        CHECK(second.code == kExitOk);
        CHECK(second.out == first.out);
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(golden::run({}).code == kExitUsage);
    CHECK(golden::run({"frobnicate"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "--d", "3", "--bogus"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "--d", "3", "--gen", "0,x,0,0"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "--d", "3", "--gen", "0,1/2,0"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "--d", "0"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "--torsion", "2"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "--d", "3", "--torsion", "2", "--points", "2"}).code == kExitUsage);
    // sqrt(4) is an integer: the half-period formula does not apply.
    const auto hyp = golden::run({"seshadri", "--d", "4", "--half-periods", "0,0,0,0", "1/2,0,0,0"});
    CHECK(hyp.code == kExitUsage);
    CHECK(hyp.err.find("hypothesis") != std::string::npos);
    CHECK(golden::run({"seshadri", "--d", "3", "--half-periods", "0,0,0,0", "0,0,0,0"}).code == kExitUsage);
    CHECK(golden::run({"seshadri", "--d", "3", "--output", "xml"}).code == kExitUsage);
    CHECK(golden::run({"verify", "--trials", "0"}).code == kExitUsage);
}

TEST_CASE("verification exit codes") {
    auto ok = golden::run({"seshadri", "--d", "3", "--torsion", "2", "--verify"});
    CHECK(ok.code == kExitOk);
    CHECK(json::parse(ok.out)["verification"]["all_passed"] == true);

    RunHooks inject;
    inject.on_report = [](oracle::VerificationReport& r) {
        r.checks.push_back({"injected", oracle::Status::failed, "forced failure"});
    };
    auto failed = golden::run({"seshadri", "--d", "3", "--torsion", "2", "--verify"}, inject);
    CHECK(failed.code == kExitVerificationFailed);
    CHECK(json::parse(failed.out)["verification"]["all_passed"] == false);

    CHECK(golden::run({"verify", "--seed", "3", "--trials", "10"}).code == kExitOk);
    auto suite = golden::run({"verify", "--seed", "3", "--trials", "10"}, inject);
    CHECK(suite.code == kExitVerificationFailed);
    CHECK(json::parse(suite.out)["failures"].size() == 1);
}

TEST_CASE("text output walks through the derivation") {
    const auto r = golden::run({"seshadri", "--d", "1", "--gen", "1/2,0,0,0", "--gen", "0,0,1/2,0", "--output", "text"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("Lambda' basis") != std::string::npos);
    CHECK(r.out.find("Gram matrix") != std::string::npos);
    CHECK(r.out.find("minimal descending multiple n = 4") != std::string::npos);
    CHECK(r.out.find("sqrt(8) = [2; 1, 4]") != std::string::npos);
    CHECK(r.out.find("(l0, k0) = (3, 1)") != std::string::npos);
    CHECK(r.out.find("= 2/3") != std::string::npos);

    const auto points = golden::run({"seshadri", "--d", "2", "--points", "3", "--output", "text"});
    CHECK(points.out.find("epsilon >=") != std::string::npos);
}
