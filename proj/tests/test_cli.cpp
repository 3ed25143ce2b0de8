#include <catch2/catch_amalgamated.hpp>

#include <christoffel/cli.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using christoffel::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word command", "[cli]") {
    auto r = invoke({"word", "5", "2", "a", "b"});
    CHECK(r.code == 0);
    CHECK(r.out == "ababb\n");

    CHECK(invoke({"word", "5", "2"}).out == "10100\n");  // default letters 1, 0
    CHECK(invoke({"word", "5", "3", "0", "1"}).out == "00101\n");

    auto j = json::parse(invoke({"word", "5", "2", "--format", "json"}).out);
    CHECK(j["word"] == "10100");
    CHECK(j["m"] == 2);
}

TEST_CASE("array command", "[cli]") {
    auto r = invoke({"array", "5", "2", "a", "b"});
    CHECK(r.out == "ababb\nabbab\nbabab\nbabba\nbbaba\n");

    auto dense = invoke({"array", "3", "2", "0", "1", "--ring", "int"});
    CHECK(dense.out == "0 0 1\n0 1 0\n1 0 0\n");

    auto j = json::parse(invoke({"array", "3", "2", "0", "1", "--ring", "int", "--format",
                                 "json"}).out);
    CHECK(j["ring"] == "int");
    CHECK(j["rows"][2] == json::array({"1", "0", "0"}));
}

TEST_CASE("check command", "[cli]") {
    auto r = invoke({"check", "ababb"});
    CHECK(r.code == 0);
    CHECK(r.out.find("christoffel: true") != std::string::npos);
    CHECK(r.out.find("type: 2") != std::string::npos);
    CHECK(r.out.find("shift: 3") != std::string::npos);

    auto j = json::parse(invoke({"check", "abab", "--format", "json"}).out);
    CHECK(j["christoffel"] == false);
    CHECK(j["type"].is_null());
}

TEST_CASE("mul command", "[cli]") {
    auto r = invoke({"mul", "00101", "11110"});
    CHECK(r.code == 0);
    CHECK(r.out == "10100\n");

    auto bad = invoke({"mul", "01", "00101"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("LengthMismatch") != std::string::npos);

    CHECK(invoke({"mul", "00111", "11110"}).code == 1);  // not a Christoffel word
}

TEST_CASE("matrix commands", "[cli]") {
    auto r = invoke({"mul-matrix", "5", "3", "0", "1", "4", "1", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "n: 5\nm: 2\na: 1\nb: 0\n");

    auto inv = invoke({"inv", "5", "3", "1", "0"});
    CHECK(inv.code == 0);
    CHECK(inv.out.find("m: 2") != std::string::npos);
    CHECK(inv.out.find("verified: true") != std::string::npos);

    auto notinv = invoke({"inv", "5", "2", "1", "0"});
    CHECK(notinv.code == 1);
    CHECK(notinv.err.find("NotInvertible") != std::string::npos);

    auto det = invoke({"det", "5", "2", "1", "0", "--ring", "int"});
    CHECK(det.code == 0);
    CHECK(det.out == "closed: -2\nexact: -2\n");

    auto j = json::parse(
        invoke({"inv", "5", "3", "2/3", "-1/2", "--ring", "rat", "--format", "json"}).out);
    CHECK(j["verified"] == true);
    CHECK(j["ring"] == "rat");

    CHECK(invoke({"mul-matrix", "2", "1", "2", "0", "1", "3", "0", "--ring", "mod:6"}).code == 1);
}

TEST_CASE("dual command", "[cli]") {
    auto r = invoke({"dual", "00101"});
    CHECK(r.code == 0);
    CHECK(r.out == "01011\n");
}

TEST_CASE("group command", "[cli]") {
    auto r = invoke({"group", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order: 8") != std::string::npos);
    CHECK(r.out.find("invariant_factors: 2 4") != std::string::npos);

    auto j = json::parse(invoke({"group", "8", "--format", "json"}).out);
    CHECK(j["order"] == 8);
    CHECK(j["invariant_factors"] == json::array({2, 4}));
    CHECK(j["elements"].size() == 8);

    auto f3 = json::parse(invoke({"group", "4", "--p", "3", "--format", "json"}).out);
    CHECK(f3["p"] == 3);
    CHECK(f3["order"] == f3["elements"].size());

    CHECK(invoke({"group", "4", "--p", "6"}).code == 2);  // 6 is not prime
}

TEST_CASE("table command", "[cli]") {
    auto r = invoke({"table", "4", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == ",b_1,a_1,b_3,a_3");
    std::string row;
    std::getline(lines, row);
    CHECK(row == "b_1,a_1,b_1,a_3,b_3");  // b_1 * b_1 = a_1
}

TEST_CASE("verify-neven command", "[cli]") {
    auto r = invoke({"verify-neven", "--nmax", "16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=8 order=8 factors=[2, 4] ok") != std::string::npos);
    CHECK(r.out.find("15/15 sizes verified") != std::string::npos);

    auto j = json::parse(invoke({"verify-neven", "--nmax", "12", "--format", "json"}).out);
    CHECK(j["passed"] == 11);
    CHECK(j["total"] == 11);
}

TEST_CASE("represent command", "[cli]") {
    auto r = invoke({"represent", "2,4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified: true") != std::string::npos);

    auto j = json::parse(invoke({"represent", "2,4", "--format", "json"}).out);
    CHECK(j["verified"] == true);
    CHECK(j["invariant_factors"] == json::array({2, 4}));
    REQUIRE(j["generators"].size() == 2);

    CHECK(invoke({"represent", "11", "--nmax", "10"}).code == 1);  // not found
    CHECK(invoke({"represent", "2,3"}).code == 2);                 // not a divisibility chain
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"word"}).code == 2);
    CHECK(invoke({"word", "5", "2", "ab", "c"}).code == 2);
    CHECK(invoke({"word", "5", "2", "--format", "yaml"}).code == 2);
    CHECK(invoke({"det", "5", "2", "x", "y", "--ring", "int"}).code == 2);
    CHECK(invoke({"det", "5", "2", "1", "0", "--ring", "fp:6"}).code == 2);
    CHECK(invoke({"word", "5", "2", "--bogus"}).code == 2);
}

TEST_CASE("domain errors exit 1 without output", "[cli]") {
    auto r = invoke({"word", "6", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("NotCoprime") != std::string::npos);
}

TEST_CASE("output is deterministic", "[cli]") {
    for (auto args : {std::vector<std::string>{"group", "12", "--format", "json"},
                      {"table", "8", "--format", "csv"},
                      {"verify-neven", "--nmax", "10"}}) {
        auto first = invoke(args);
        auto second = invoke(args);
        CHECK(first.out == second.out);
        CHECK(first.code == second.code);
    }
}

TEST_CASE("json outputs round-trip", "[cli]") {
    for (auto args : {std::vector<std::string>{"word", "5", "2", "--format", "json"},
                      {"check", "ababb", "--format", "json"},
                      {"group", "8", "--format", "json"},
                      {"inv", "5", "3", "1", "0", "--format", "json"},
                      {"verify-neven", "--nmax", "8", "--format", "json"},
                      {"represent", "2,2", "--format", "json"},
                      {"table", "4", "--format", "json"}}) {
        auto r = invoke(args);
        REQUIRE(r.code == 0);
        json parsed = json::parse(r.out);
        CHECK(json::parse(parsed.dump()) == parsed);
    }
}

TEST_CASE("--out writes to a file", "[cli]") {
    std::string path = "cli_out_test.txt";
    auto r = invoke({"word", "5", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(content == "10100\n");
    std::remove(path.c_str());
}
