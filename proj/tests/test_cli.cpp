#include <doctest.h>

#include "kacpoly/cli.hpp"
#include "kacpoly/io.hpp"

#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    kacpoly::Json json() const { return kacpoly::Json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "kacpoly");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = kacpoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string data = KACPOLY_TEST_DATA;

} // namespace

TEST_CASE("kac subcommand")
{
    const Outcome r = run({"kac", "--quiver", data + "/kronecker2.json", "--dim", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"alpha\":[1,1],\"polynomial\":{\"num\":[\"1\",\"1\"],\"den\":[\"1\"]}}\n");

    const Outcome all = run({"kac", "--quiver", "kronecker2", "--all-upto", "2,2"});
    REQUIRE(all.code == 0);
    const auto doc = all.json();
    CHECK(doc["box"] == kacpoly::Json::parse("[2,2]"));
    CHECK(doc["polynomials"].size() == 6);

    const Outcome csv = run({"--format", "csv", "kac", "--quiver", "kronecker3", "--dim", "1,1"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("alpha,num,den\n", 0) == 0);
    CHECK(csv.out.find("1;1,1;1;1,1") != std::string::npos);
}

TEST_CASE("roots and character subcommands")
{
    const Outcome roots = run({"roots", "--quiver", "d4", "--bound", "1,1,1,2"});
    REQUIRE(roots.code == 0);
    CHECK(roots.json()["roots"].size() == 12);

    const Outcome ch = run({"character", "--quiver", "a1", "--hw", "4", "--bound", "5"});
    REQUIRE(ch.code == 0);
    const auto entries = ch.json()["character"];
    REQUIRE(entries.size() == 6);
    CHECK(entries[4]["mult"] == "1");
    CHECK(entries[5]["mult"] == "0");
}

TEST_CASE("weightmult subcommand")
{
    const Outcome r = run({"weightmult", "--quiver", data + "/a2.json", "--hw", "1,1", "--drop", "1,1", "--method", "both"});
    REQUIRE(r.code == 0);
    const auto doc = r.json();
    CHECK(doc["theorem1"] == "2");
    CHECK(doc["freudenthal"] == "2");
    CHECK(doc["methods_agree"] == true);
    CHECK(run({"weightmult", "--quiver", "a2", "--hw", "1,1", "--drop", "1,1", "--method", "magic"}).code == 1);
}

TEST_CASE("betti subcommand")
{
    const Outcome r = run({"betti", "--quiver", data + "/a1.json", "--v", "1", "--w", "2", "--method", "both"});
    REQUIRE(r.code == 0);
    const auto doc = r.json();
    CHECK(doc["p"] == kacpoly::Json::parse(R"(["0","1","1"])"));
    CHECK(doc["methods_agree"] == true);
    CHECK(doc["euler_characteristic"] == "2");

    const Outcome empty = run({"betti", "--quiver", "a1", "--v", "2", "--w", "1", "--method", "hausel"});
    REQUIRE(empty.code == 0);
    CHECK(empty.json()["empty"] == true);
    CHECK(empty.json()["p"].empty());
}

TEST_CASE("oracle subcommands")
{
    const Outcome ai = run({"oracle", "ai-count", "--quiver", "kronecker3", "--dim", "1,1", "--p", "2"});
    REQUIRE(ai.code == 0);
    CHECK(ai.json()["count"] == "7");
    const Outcome iso = run({"oracle", "iso-count", "--quiver", "a2", "--dim", "1,1", "--p", "2"});
    REQUIRE(iso.code == 0);
    CHECK(iso.json()["count"] == "2");
    CHECK(run({"oracle", "ai-count", "--quiver", "kronecker3", "--dim", "3,3", "--p", "2", "--cap", "100"}).code == 2);
    CHECK(run({"oracle", "ai-count", "--quiver", "a2", "--dim", "1,1", "--p", "6"}).code == 2);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"kac", "--quiver", "a2"}).code == 1);
    CHECK(run({"kac", "--quiver", "a2", "--dim", "1,x"}).code == 1);
    CHECK(run({"kac", "--quiver", "a2", "--dim", "1,1,1"}).code == 2);
    CHECK(run({"kac", "--quiver", data + "/loop.json", "--dim", "1,1"}).code == 2);
    CHECK(run({"kac", "--quiver", data + "/missing.json", "--dim", "1"}).code == 2);
    CHECK(run({"--format", "xml", "kac", "--quiver", "a2", "--dim", "1,1"}).code == 1);
    const Outcome loop = run({"roots", "--quiver", data + "/loop.json", "--bound", "1,1"});
    CHECK(loop.code == 2);
    CHECK_FALSE(loop.err.empty());
    CHECK(loop.out.empty());
}

TEST_CASE("output is deterministic across job counts")
{
    const Outcome serial = run({"--jobs", "1", "kac", "--quiver", "triangle", "--all-upto", "2,1,1"});
    const Outcome threaded = run({"--jobs", "4", "kac", "--quiver", "triangle", "--all-upto", "2,1,1"});
    REQUIRE(serial.code == 0);
    CHECK(serial.out == threaded.out);
}

TEST_CASE("selftest subcommand")
{
    const Outcome r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.json()["passed"] == true);
}
