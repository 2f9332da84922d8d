#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "torelli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = torelli::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name)
{
    return std::string(TORELLI_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze")
{
    const auto r = run({"--format", "json", "analyze", data("theta.json")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["genus"] == 2);
    CHECK(j["b1"] == 2);
    CHECK(j["stable"] == true);
    CHECK(j["three_edge_connected"] == true);
    CHECK(j["c1_sets"] == nlohmann::json::parse(R"(["{e1}","{e2}","{e3}"])"));

    const auto human = run({"analyze", data("theta.json")});
    CHECK(human.code == 0);
    CHECK(human.out.find("genus") != std::string::npos);
}

TEST_CASE("fiber")
{
    const auto r = run({"fiber", "--size", data("cycle4.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    const auto b = run({"--format", "json", "fiber", "--bounds", data("cycle4.json")});
    REQUIRE(b.code == 0);
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j["fiber_bound"] == 48);
    CHECK(j["fiber_bound_global"] == 3);
    CHECK(run({"--max-fiber", "5", "fiber", "--size", data("cycle4.json")}).code == 3);
}

TEST_CASE("equiv")
{
    CHECK(run({"equiv", "--c1", data("c1ex_x.json"), data("c1ex_xprime.json")}).code == 0);
    CHECK(run({"equiv", "--c1", data("theta_curve.json"), data("cycle3_curve.json")}).code == 1);
    CHECK(run({"equiv", "--t", data("c1ex_x.json"), data("c1ex_xprime.json")}).code == 0);
    CHECK(run({"equiv", "--cyclic", data("theta.json"), data("theta_curve.json")}).code == 0);
    CHECK(run({"equiv", "--strong", data("theta.json"), data("theta.json")}).code == 0);
}

TEST_CASE("torelli")
{
    CHECK(run({"torelli", "--check", data("cycle4.json")}).code == 1);
    CHECK(run({"torelli", "--check", data("theta_curve.json")}).code == 0);
    CHECK(run({"torelli-image", data("c1ex_x.json"), data("c1ex_xprime.json")}).code == 0);
}

TEST_CASE("graph verbs")
{
    CHECK(run({"c1-sets", data("cycle4.json")}).code == 0);
    const auto st = run({"--format", "json", "strata", data("theta.json")});
    REQUIRE(st.code == 0);
    CHECK(nlohmann::json::parse(st.out)["strata"].size() == 6);
    for (const char* kind : {"sp", "op", "opbar", "st"}) CHECK(run({"poset", "--kind", kind, data("theta.json")}).code == 0);
    CHECK(run({"orientations", data("theta.json"), "--support", "e1"}).code == 0);
    CHECK(run({"multidegrees", data("theta.json"), "--check", "u:1,v:0"}).code == 0);
    CHECK(run({"multidegrees", data("theta.json"), "--check", "u:2,v:-1"}).code == 1);
    CHECK(run({"stabilize", data("cycle4.json")}).code == 0);
    const auto eta = run({"eta", data("cycle4.json")});
    CHECK(eta.code == 0);
    CHECK(eta.out == "cycle\tp1\tq1\tp2\tq2\tp3\tq3\tp4\tq4\nz1\t1\t-1\t1\t-1\t1\t-1\t1\t-1\n");
    // Reversing a tree edge keeps the row; reversing the non-tree edge negates it.
    CHECK(run({"eta", data("cycle4.json"), "--orientation", "q1=p2"}).out == eta.out);
    const auto flipped = run({"eta", data("cycle4.json"), "--orientation", "q2=p3"});
    CHECK(flipped.code == 0);
    CHECK(flipped.out == "cycle\tp1\tq1\tp2\tq2\tp3\tq3\tp4\tq4\nz1\t-1\t1\t-1\t1\t-1\t1\t-1\t1\n");
    CHECK(run({"eta", data("cycle4.json"), "--orientation", "nope"}).code == 2);
}

TEST_CASE("errors")
{
    CHECK(run({"analyze", data("missing.json")}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"fiber", "--size", data("theta.json")}).code == 2);
}

TEST_CASE("reports are deterministic")
{
    const auto a = run({"--format", "json", "poset", "--kind", "st", data("theta.json")});
    const auto b = run({"--format", "json", "poset", "--kind", "st", data("theta.json")});
    CHECK(a.out == b.out);
}
