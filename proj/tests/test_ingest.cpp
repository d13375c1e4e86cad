#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cmdviz/errors.hpp"
#include "cmdviz/ingest.hpp"
#include "helpers.hpp"

using namespace cmdviz;
using cmdviz::testing::memory_experiment;

namespace {

std::string read_fixture(const char* name) {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("parse_json reads the memory example") {
    const auto report = parse_json(read_fixture("memory.json"));
    const auto& exp = report.experiment;
    CHECK(exp.num_agents() == 3);
    CHECK(exp.num_outcomes() == 2);
    CHECK(exp.num_independents() == 1);
    CHECK(exp.num_steps() == 3);
    CHECK(exp == memory_experiment());
}

TEST_CASE("parse_json minimal document") {
    const auto report = parse_json(
        R"({"agents":["a"],"outcomes":["y"],"independents":["x"],
            "steps":[{"independent_values":[0.0],"measurements":[[0.0]]}]})");
    CHECK(report.experiment.num_agents() == 1);
    CHECK(report.experiment.num_steps() == 1);
}

TEST_CASE("parse_json diagnostics") {
    SUBCASE("malformed syntax carries a position") {
        CHECK_THROWS_AS(parse_json("{\"agents\": [,]}"), ParseError);
    }
    SUBCASE("truncated step matrix names the step") {
        const auto doc =
            R"({"agents":["A1","A2","A3"],"outcomes":["r","a"],"independents":["x"],
                "steps":[{"independent_values":[0],"measurements":[[1,2],[3,4],[5,6]]},
                         {"independent_values":[1],"measurements":[[1,2],[3,4]]}]})";
        CHECK_THROWS_WITH_AS(parse_json(doc), doctest::Contains("step 1"), ValidationError);
    }
    SUBCASE("duplicate names rejected") {
        CHECK_THROWS_AS(parse_json(
                            R"({"agents":["a","a"],"outcomes":["y"],"independents":["x"],
                "steps":[{"independent_values":[0],"measurements":[[1],[2]]}]})"),
                        ValidationError);
    }
    SUBCASE("wrong independent vector length names the step") {
        CHECK_THROWS_WITH_AS(parse_json(
                                 R"({"agents":["a"],"outcomes":["y"],"independents":["x"],
                "steps":[{"independent_values":[0,1],"measurements":[[1]]}]})"),
                             doctest::Contains("step 0"), ValidationError);
    }
    SUBCASE("overflowing literal rejected as non-finite") {
        const auto doc =
            R"({"agents":["a"],"outcomes":["y"],"independents":["x"],
                "steps":[{"independent_values":[0],"measurements":[[1e999]]}]})";
        CHECK_THROWS_WITH_AS(parse_json(doc), doctest::Contains("non-finite"), ValidationError);
    }
}

TEST_CASE("parse_json reads an optional clustering block") {
    const auto report = parse_json(
        R"({"agents":["a","b"],"outcomes":["y"],"independents":["x"],
            "clustering":{"method":"kmeans","k":2,"seed":7,"metric":"manhattan"},
            "steps":[{"independent_values":[0],"measurements":[[1],[2]]}]})");
    REQUIRE(report.clustering.has_value());
    CHECK(report.clustering->method == Method::KMeans);
    CHECK(report.clustering->k == 2);
    CHECK(report.clustering->seed == 7);
    CHECK(report.clustering->metric == Metric::Manhattan);
}

TEST_CASE("parse_csv matches parse_json on the memory example") {
    const auto from_csv = parse_csv(read_fixture("memory.csv"));
    const auto from_json = parse_json(read_fixture("memory.json"));
    CHECK(from_csv.experiment == from_json.experiment);
}

TEST_CASE("parse_csv diagnostics") {
    const std::string header = "step,agent,outcome,value,iv:x\n";

    SUBCASE("duplicate triple") {
        CHECK_THROWS_WITH_AS(parse_csv(header + "0,a,y,1.0,0\n0,a,y,2.0,0\n"),
                             doctest::Contains("duplicate"), ValidationError);
    }
    SUBCASE("missing cell listed") {
        const std::string rows = header + "0,a,y,1.0,0\n0,a,z,1.0,0\n0,b,y,1.0,0\n";
        CHECK_THROWS_WITH_AS(parse_csv(rows), doctest::Contains("outcome 'z'"), ValidationError);
    }
    SUBCASE("inconsistent per-step independent value") {
        CHECK_THROWS_WITH_AS(parse_csv(header + "0,a,y,1.0,0\n0,b,y,1.0,1\n"),
                             doctest::Contains("disagree"), ValidationError);
    }
    SUBCASE("locale separators rejected") {
        CHECK_THROWS_AS(parse_csv(header + "0,a,y,\"1,5\",0\n"), ValidationError);
    }
}

TEST_CASE("write_json round trips bit-exactly") {
    const auto exp = memory_experiment();
    const auto report = parse_json(write_json(exp));
    CHECK(report.experiment == exp);

    SUBCASE("awkward floats survive") {
        Step step;
        step.independent_values = {0.1 + 0.2};
        step.measurements = {{0.1 + 0.2, 1.0 / 3.0}};
        const auto tricky = Experiment::make({"a"}, {"p", "q"}, {"x"}, {step});
        const auto round = parse_json(write_json(tricky)).experiment;
        CHECK(round == tricky);
        CHECK(round.steps()[0].measurements[0][0] == 0.1 + 0.2);
    }
    SUBCASE("minimal experiment") {
        Step step;
        step.independent_values = {0.0};
        step.measurements = {{0.0}};
        const auto tiny = Experiment::make({"a"}, {"y"}, {"x"}, {step});
        CHECK(parse_json(write_json(tiny)).experiment == tiny);
    }
}

TEST_CASE("round trip property on random experiments") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 1 + static_cast<int>(rng.next_below(5));
        const int n = 1 + static_cast<int>(rng.next_below(4));
        const int t = 1 + static_cast<int>(rng.next_below(4));
        std::vector<std::string> agents, outcomes;
        for (int j = 0; j < m; ++j) agents.push_back("a" + std::to_string(j));
        for (int i = 0; i < n; ++i) outcomes.push_back("y" + std::to_string(i));
        std::vector<Step> steps(t);
        for (auto& step : steps) {
            step.independent_values = {rng.next_double() * 10.0 - 5.0};
            step.measurements = cmdviz::testing::random_matrix(rng, m, n, -1e6, 1e6);
        }
        const auto exp = Experiment::make(agents, outcomes, {"x"}, steps);
        CHECK(parse_json(write_json(exp)).experiment == exp);
    }
}

TEST_CASE("constant outcome column produces a warning, not an error") {
    const auto report = parse_json(
        R"({"agents":["a","b"],"outcomes":["y","z"],"independents":["x"],
            "steps":[{"independent_values":[0],"measurements":[[1.0,0.3],[1.0,0.4]]},
                     {"independent_values":[1],"measurements":[[1.0,0.5],[1.0,0.6]]}]})");
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("'y'") != std::string::npos);
}
