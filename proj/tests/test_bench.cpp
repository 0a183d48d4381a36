#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "linterm/bench.hpp"

using Catch::Matchers::ContainsSubstring;
using linterm::BenchConfig;
using linterm::BenchReport;
using linterm::Rational;

TEST_CASE("random programs are bounded and well-formed", "[bench]") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        linterm::HomogeneousProgram p = linterm::random_program(3, 4, rng);
        REQUIRE(p.dimension() == 3);
        bool guard_zero = true;
        for (const Rational& g : p.guard) {
            guard_zero = guard_zero && g.is_zero();
            REQUIRE(Rational(-4) <= g);
            REQUIRE(g <= Rational(4));
        }
        REQUIRE_FALSE(guard_zero);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c) {
                REQUIRE(Rational(-4) <= p.update.at(r, c));
                REQUIRE(p.update.at(r, c) <= Rational(4));
            }
    }
    SECTION("the generator stream is seed-deterministic") {
        std::mt19937_64 a(9), b(9);
        for (int i = 0; i < 10; ++i) {
            linterm::HomogeneousProgram pa = linterm::random_program(2, 10, a);
            linterm::HomogeneousProgram pb = linterm::random_program(2, 10, b);
            REQUIRE(pa.update == pb.update);
            REQUIRE(pa.guard == pb.guard);
        }
    }
    SECTION("parameter validation") {
        REQUIRE_THROWS_AS(linterm::random_program(0, 10, rng), linterm::degenerate_input);
        REQUIRE_THROWS_AS(linterm::random_program(2, 0, rng), linterm::degenerate_input);
    }
}

TEST_CASE("suite counts are deterministic in the seed", "[bench]") {
    BenchConfig config;
    config.dimensions = {2, 3};
    config.loops_per_set = 30;
    config.entry_magnitude = 5;
    config.seed = 31337;

    BenchReport first = linterm::run_suite(config);
    BenchReport second = linterm::run_suite(config);
    REQUIRE(first.rows.size() == 2);
    for (size_t i = 0; i < first.rows.size(); ++i) {
        const auto& a = first.rows[i];
        const auto& b = second.rows[i];
        REQUIRE(a.dimension == config.dimensions[i]);
        REQUIRE(a.count_terminating == b.count_terminating);
        REQUIRE(a.count_nonterminating == b.count_nonterminating);
        REQUIRE(a.count_failed == b.count_failed);
        // Every drawn program is accounted for exactly once.
        REQUIRE(a.count_terminating + a.count_nonterminating + a.count_failed ==
                config.loops_per_set);
        REQUIRE(a.count_failed == 0);
        REQUIRE(a.failures.empty());
        // Timing is machine-bound: only its bookkeeping is checked.
        REQUIRE(a.seconds_total >= a.seconds_terminating);
        REQUIRE(a.seconds_total >= a.seconds_nonterminating);
    }
    SECTION("a different seed draws different programs") {
        BenchConfig other = config;
        other.seed = 31338;
        BenchReport third = linterm::run_suite(other);
        bool any_difference = false;
        for (size_t i = 0; i < first.rows.size(); ++i)
            any_difference = any_difference ||
                             first.rows[i].count_terminating != third.rows[i].count_terminating;
        // Not guaranteed in principle, but stable for these pinned seeds.
        REQUIRE(any_difference);
    }
}

TEST_CASE("suite configuration validation", "[bench]") {
    BenchConfig config;
    config.dimensions = {};
    REQUIRE_THROWS_AS(linterm::run_suite(config), linterm::degenerate_input);
    config.dimensions = {1};
    REQUIRE_THROWS_AS(linterm::run_suite(config), linterm::degenerate_input);
    config.dimensions = {9};
    REQUIRE_THROWS_WITH(linterm::run_suite(config), ContainsSubstring("[2, 8]"));
    config.dimensions = {2};
    config.loops_per_set = 0;
    REQUIRE_THROWS_AS(linterm::run_suite(config), linterm::degenerate_input);
    config.loops_per_set = 1;
    config.entry_magnitude = 0;
    REQUIRE_THROWS_AS(linterm::run_suite(config), linterm::degenerate_input);
}

TEST_CASE("report rendering", "[bench]") {
    BenchConfig config;
    config.dimensions = {2};
    config.loops_per_set = 10;
    config.entry_magnitude = 3;
    config.seed = 7;
    BenchReport report = linterm::run_suite(config);

    SECTION("table layout") {
        std::string table = linterm::format_table(report);
        REQUIRE_THAT(table, ContainsSubstring("dim"));
        REQUIRE_THAT(table, ContainsSubstring("#NT"));
        REQUIRE_THAT(table, ContainsSubstring("CPU/s[total]"));
        // One header line plus one row.
        REQUIRE(std::count(table.begin(), table.end(), '\n') == 2);
    }
    SECTION("json layout") {
        nlohmann::json doc = linterm::report_json(report);
        REQUIRE(doc["format_version"] == linterm::format_version);
        REQUIRE(doc["kind"] == "bench_report");
        REQUIRE(doc["seed"] == 7);
        REQUIRE(doc["rows"].size() == 1);
        REQUIRE(doc["rows"][0]["dimension"] == 2);
        size_t t = doc["rows"][0]["terminating"].get<size_t>();
        size_t nt = doc["rows"][0]["nonterminating"].get<size_t>();
        size_t failed = doc["rows"][0]["failed"].get<size_t>();
        REQUIRE(t + nt + failed == 10);
        REQUIRE(doc["rows"][0]["failures"].is_array());
    }
}
