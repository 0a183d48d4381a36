#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "linterm/frontend.hpp"
#include "oracles.hpp"

using Catch::Matchers::ContainsSubstring;
using linterm::AffineSystem;
using linterm::Comparator;
using linterm::HomogeneousProgram;
using linterm::Matrix;
using linterm::Rational;
using linterm::SourceLoop;
using oracles::mat_q;
using oracles::vec_q;

TEST_CASE("parsing simple loops", "[frontend]") {
    SECTION("declared variables and sequential body") {
        SourceLoop loop = linterm::parse(
            "vars x, y;\n"
            "while (x - y > 0) {\n"
            "  x := 3*x - 2*y;\n"
            "  y := 4/3*x + 5/3*y;\n"
            "}\n");
        REQUIRE(loop.variables == std::vector<std::string>{"x", "y"});
        REQUIRE(loop.guards.size() == 1);
        REQUIRE(loop.guards[0] ==
                linterm::GuardRow{vec_q({1, -1}), Comparator::Greater, Rational(0)});
        REQUIRE(loop.body.size() == 2);
        REQUIRE(loop.body[0] == linterm::Assignment{0, vec_q({3, -2}), Rational(0)});
        REQUIRE(loop.body[1] ==
                linterm::Assignment{1, {Rational(4, 3), Rational(5, 3)}, Rational(0)});
    }
    SECTION("undeclared variables are inferred in lexicographic order") {
        SourceLoop loop = linterm::parse("while (b > 0) { c := a; a := b; }");
        REQUIRE(loop.variables == std::vector<std::string>{"a", "b", "c"});
        REQUIRE(loop.body[0].target == 2);
        REQUIRE(loop.body[1].target == 0);
    }
    SECTION("juxtaposed coefficients and repeated terms") {
        SourceLoop loop = linterm::parse("vars x; while (2x > 0) { x := 3x - x + 1/2; }");
        REQUIRE(loop.guards[0].coefficients == vec_q({2}));
        REQUIRE(loop.body[0].coefficients == vec_q({2}));
        REQUIRE(loop.body[0].constant == Rational(1, 2));
    }
    SECTION("affine pieces and comparators") {
        SourceLoop loop = linterm::parse("vars x; while (x >= 5) { x := x - 2; }");
        REQUIRE(loop.guards[0].comparator == Comparator::GreaterEqual);
        REQUIRE(loop.guards[0].constant == Rational(5));
        REQUIRE(loop.body[0].constant == Rational(-2));
    }
    SECTION("conjunction splits into guard rows") {
        SourceLoop loop = linterm::parse("vars x, y; while (x > 0 && y > 1) { x := y; }");
        REQUIRE(loop.guards.size() == 2);
        REQUIRE(loop.guards[1].constant == Rational(1));
    }
    SECTION("comments and negative guard bounds") {
        SourceLoop loop = linterm::parse(
            "vars x; // one variable\n"
            "while (x > -3) { /* body */ x := (-1/2)*x; }");
        REQUIRE(loop.guards[0].constant == Rational(-3));
        REQUIRE(loop.body[0].coefficients == std::vector<Rational>{Rational(-1, 2)});
    }
}

TEST_CASE("parse errors carry positions and hints", "[frontend]") {
    REQUIRE_THROWS_AS(linterm::parse("vars x; while (x > 0) { x := 0.5*x; }"),
                      linterm::parse_error);
    REQUIRE_THROWS_WITH(linterm::parse("vars x; while (x > 0) { x := 0.5*x; }"),
                        ContainsSubstring("exact fraction"));
    REQUIRE_THROWS_WITH(linterm::parse("vars x; while (x > 0) { x := y; }"),
                        ContainsSubstring("undeclared variable 'y'"));
    REQUIRE_THROWS_WITH(linterm::parse("vars x, x; while (x > 0) { x := x; }"),
                        ContainsSubstring("declared twice"));
    REQUIRE_THROWS_WITH(linterm::parse("vars x; while (x > 0) { x := x; x := x; }"),
                        ContainsSubstring("assigned twice"));
    REQUIRE_THROWS_AS(linterm::parse("vars x; while (x > 0) { }"), linterm::degenerate_body);
    REQUIRE_THROWS_WITH(linterm::parse("vars x; while (x + 1 > 0) { x := x; }"),
                        ContainsSubstring("constant terms are not allowed left"));
    REQUIRE_THROWS_WITH(linterm::parse("vars x; while (x > 0) { x := x; } extra"),
                        ContainsSubstring("trailing input"));
    REQUIRE_THROWS_WITH(linterm::parse("vars x; while (x > 0) { x := x; /* open"),
                        ContainsSubstring("unterminated comment"));
    REQUIRE_THROWS_AS(linterm::parse("vars x; while (x < 0) { x := x; }"), linterm::parse_error);
    REQUIRE_THROWS_WITH(linterm::parse("vars x; while (x > 1/0) { x := x; }"),
                        ContainsSubstring("zero denominator"));

    SECTION("positions point at the offending token") {
        try {
            linterm::parse("vars x;\nwhile (x > 0) { x := 0.5; }");
            FAIL("expected a parse error");
        } catch (const linterm::parse_error& e) {
            REQUIRE(e.line == 2);
            REQUIRE(e.column == 22);
        }
    }
}

TEST_CASE("pretty printing round-trips", "[frontend]") {
    const char* sources[] = {
        "vars x, y;\nwhile (x - y > 0) {\n  x := 3*x - 2*y;\n  y := 4/3*x + 5/3*y;\n}\n",
        "vars a, b, c; while (a > 0 && b - c >= -2) { b := a - 1/3; c := -c; }",
        "vars x; while (x >= 5) { x := -x + 7/2; }",
        "while (q > 0) { q := 2*q; }",
    };
    for (const char* src : sources) {
        SourceLoop loop = linterm::parse(src);
        std::string printed = linterm::pretty_print(loop);
        REQUIRE(linterm::parse(printed) == loop);
        // A second round must be a fixed point of the formatting itself.
        REQUIRE(linterm::pretty_print(linterm::parse(printed)) == printed);
    }
}

TEST_CASE("sequential propagation golden matrices", "[frontend]") {
    SECTION("later assignments read earlier results") {
        AffineSystem sys = linterm::propagate_sequential(
            linterm::parse("vars x, y; while (x - y > 0) { x := 3*x - 2*y; y := 4/3*x + 5/3*y; }"));
        REQUIRE(sys.update == mat_q(2, {3, -2, 4, -1}));
        for (const Rational& c : sys.constant) REQUIRE(c.is_zero());
        REQUIRE(sys.guard_matrix.rows() == 1);
        REQUIRE(sys.guard_matrix.at(0, 0) == Rational(1));
        REQUIRE(sys.guard_matrix.at(0, 1) == Rational(-1));
    }
    SECTION("chained copy") {
        AffineSystem sys = linterm::propagate_sequential(
            linterm::parse("vars x, y; while (x > 0) { x := x + y; y := x; }"));
        REQUIRE(sys.update == mat_q(2, {1, 1, 1, 1}));
    }
    SECTION("unassigned variables keep identity rows") {
        AffineSystem sys = linterm::propagate_sequential(
            linterm::parse("vars x, y, z; while (z > 0) { x := x + y; z := -z; }"));
        REQUIRE(sys.update == mat_q(3, {1, 1, 0, 0, 1, 0, 0, 0, -1}));
    }
    SECTION("constants propagate through the chain") {
        // x := x + 1; y := 2*x reads the incremented x: y' = 2x + 2.
        AffineSystem sys = linterm::propagate_sequential(
            linterm::parse("vars x, y; while (x > 0) { x := x + 1; y := 2*x; }"));
        REQUIRE(sys.update == mat_q(2, {1, 0, 2, 0}));
        REQUIRE(sys.constant == vec_q({1, 2}));
    }
}

TEST_CASE("propagation agrees with direct interpretation", "[frontend]") {
    std::mt19937_64 rng(160301);
    for (int trial = 0; trial < 100; ++trial) {
        const size_t n = 2 + rng() % 3;
        SourceLoop loop;
        for (size_t i = 0; i < n; ++i) loop.variables.push_back("v" + std::to_string(i));
        loop.guards.push_back({std::vector<Rational>(n, Rational(1)), Comparator::Greater,
                               Rational(0)});

        // Random subset of targets in random order, each with a random
        // affine right-hand side.
        std::vector<size_t> targets(n);
        for (size_t i = 0; i < n; ++i) targets[i] = i;
        std::shuffle(targets.begin(), targets.end(), rng);
        size_t body_len = 1 + rng() % n;
        for (size_t i = 0; i < body_len; ++i) {
            linterm::Assignment a;
            a.target = targets[i];
            for (size_t j = 0; j < n; ++j)
                a.coefficients.emplace_back(static_cast<long>(rng() % 7) - 3,
                                            static_cast<long>(rng() % 3) + 1);
            a.constant = Rational(static_cast<long>(rng() % 7) - 3);
            loop.body.push_back(std::move(a));
        }

        AffineSystem sys = linterm::propagate_sequential(loop);
        std::vector<Rational> direct;
        for (size_t j = 0; j < n; ++j)
            direct.emplace_back(static_cast<long>(rng() % 11) - 5);
        std::vector<Rational> simultaneous = direct;
        for (int step = 0; step < 10; ++step) {
            oracles::step_body(loop, direct);
            std::vector<Rational> next = linterm::matvec(sys.update, simultaneous);
            for (size_t j = 0; j < n; ++j) next[j] += sys.constant[j];
            simultaneous = next;
            REQUIRE(direct == simultaneous);
        }
    }
}

TEST_CASE("homogenization", "[frontend]") {
    SECTION("pure linear loops pass through unchanged") {
        HomogeneousProgram p = linterm::homogenize(linterm::propagate_sequential(
            linterm::parse("vars x, y, z; while (z > 0) { x := x + y; z := -z; }")));
        REQUIRE(p.dimension() == 3);
        REQUIRE(p.update == mat_q(3, {1, 1, 0, 0, 1, 0, 0, 0, -1}));
        REQUIRE(p.guard == vec_q({0, 0, 1}));
        REQUIRE(p.variables == std::vector<std::string>{"x", "y", "z"});
    }
    SECTION("affine loops gain a pinned coordinate") {
        HomogeneousProgram p = linterm::homogenize(
            linterm::propagate_sequential(linterm::parse("vars x; while (x > 5) { x := x + 1; }")));
        REQUIRE(p.dimension() == 2);
        REQUIRE(p.update == mat_q(2, {1, 1, 0, 1}));
        REQUIRE(p.guard == vec_q({1, -5}));
        REQUIRE(p.variables == std::vector<std::string>{"x", "z"});
    }
    SECTION("a nonzero guard bound alone forces the extension") {
        HomogeneousProgram p = linterm::homogenize(
            linterm::propagate_sequential(linterm::parse("vars x; while (x > 1) { x := 2*x; }")));
        REQUIRE(p.dimension() == 2);
        REQUIRE(p.update == mat_q(2, {2, 0, 0, 1}));
        REQUIRE(p.guard == vec_q({1, -1}));
    }
    SECTION("the fresh coordinate dodges existing names") {
        HomogeneousProgram p = linterm::homogenize(linterm::propagate_sequential(
            linterm::parse("vars z; while (z > 5) { z := z + 1; }")));
        REQUIRE(p.variables == std::vector<std::string>{"z", "z1"});
    }
    SECTION("unsupported guard shapes are reported") {
        REQUIRE_THROWS_AS(
            linterm::homogenize(linterm::propagate_sequential(
                linterm::parse("vars x, y; while (x > 0 && y > 0) { x := y; }"))),
            linterm::unsupported_guard_count);
        REQUIRE_THROWS_AS(linterm::homogenize(linterm::propagate_sequential(
                              linterm::parse("vars x; while (x >= 0) { x := x; }"))),
                          linterm::unsupported_comparator);
    }
}
