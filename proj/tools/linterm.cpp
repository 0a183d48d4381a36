// Command-line surface: parse a loop, decide termination, synthesize
// nontermination witnesses, run bounded simulations, batch benchmarks.
//
// Exit codes: 0 the program terminates, 1 it does not (check/witness),
// 2 input or usage error. simulate and bench exit 0 on success, 2 on error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vendor/CLI11.hpp"

#include "linterm/linterm.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw linterm::degenerate_input("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "auto" looks at the first non-space byte: '{' starts a matrix document,
// anything else is loop source.
linterm::HomogeneousProgram load_program(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    std::string kind = format;
    if (kind == "auto") {
        size_t i = text.find_first_not_of(" \t\r\n");
        kind = (i != std::string::npos && text[i] == '{') ? "matrix" : "dsl";
    }
    if (kind == "matrix") return linterm::load_matrix_program(text);
    return linterm::homogenize(linterm::propagate_sequential(linterm::parse(text)));
}

int verdict_exit(linterm::Verdict v) {
    return v == linterm::Verdict::Terminating ? 0 : 1;
}

int cmd_check(const std::string& path, const std::string& format, bool json) {
    linterm::HomogeneousProgram p = load_program(path, format);
    linterm::Certificate cert = linterm::decide(p);
    if (json)
        std::cout << linterm::certificate_json(cert, p).dump(2) << "\n";
    else
        std::cout << linterm::certificate_text(cert, p);
    return verdict_exit(cert.verdict);
}

int cmd_witness(const std::string& path, const std::string& format, long bound, bool json) {
    linterm::HomogeneousProgram p = load_program(path, format);
    linterm::Certificate cert = linterm::decide(p);
    if (cert.verdict == linterm::Verdict::Terminating) {
        std::cerr << "error: program terminates; no nontermination witness exists\n";
        return 2;
    }
    linterm::Witness w = linterm::synthesize_witness(p, *cert.failing_eigenvalue);
    linterm::RunOutcome evidence = linterm::run(p, w.scaled_vector, w.eigenvalue, bound);
    if (json)
        std::cout << linterm::witness_json(w, evidence, bound).dump(2) << "\n";
    else
        std::cout << linterm::witness_text(w, evidence, bound);
    return 1;
}

int cmd_simulate(const std::string& path, const std::string& format, const std::string& start,
                 long bound, bool json) {
    linterm::HomogeneousProgram p = load_program(path, format);
    std::vector<linterm::Rational> x = linterm::parse_rational_vector(start);
    linterm::RunOutcome outcome = linterm::run(p, x, bound);
    if (json) {
        nlohmann::json doc = {{"format_version", linterm::format_version},
                              {"kind", "simulation"},
                              {"start", start},
                              {"bound", bound},
                              {"terminated", outcome.terminated()},
                              {"step", outcome.step}};
        std::cout << doc.dump(2) << "\n";
    } else if (outcome.terminated()) {
        std::cout << "terminated at k=" << outcome.step << "\n";
    } else {
        std::cout << "guard still positive after " << bound << " steps\n";
    }
    return 0;
}

int cmd_bench(const std::vector<size_t>& dims, size_t loops, long magnitude, uint64_t seed,
              bool json) {
    linterm::BenchConfig config{dims, loops, magnitude, seed};
    linterm::BenchReport report = linterm::run_suite(config);
    if (json)
        std::cout << linterm::report_json(report).dump(2) << "\n";
    else
        std::cout << linterm::format_table(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Termination analysis for linear loops: while (f.x > 0) { x := A x }"};
    app.require_subcommand(1);

    std::string path, format = "auto", start;
    long witness_bound = 50, simulate_bound = 100;
    bool json = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", path, "loop source file, matrix document, or '-' for stdin")
            ->required();
        cmd->add_option("--format", format, "input format (default: sniff)")
            ->check(CLI::IsMember({"auto", "dsl", "matrix"}));
        cmd->add_flag("--json", json, "machine-readable output");
    };

    CLI::App* check = app.add_subcommand("check", "decide termination and print a certificate");
    add_input(check);

    CLI::App* witness =
        app.add_subcommand("witness", "synthesize an input the loop runs on forever");
    add_input(witness);
    witness->add_option("--bound", witness_bound, "exact simulation steps on the witness");

    CLI::App* simulate = app.add_subcommand("simulate", "run the loop exactly from a start vector");
    add_input(simulate);
    simulate->add_option("--start", start, "comma-separated rational coordinates")->required();
    simulate->add_option("--bound", simulate_bound, "maximum steps");

    CLI::App* bench = app.add_subcommand("bench", "decide batches of random loops");
    std::vector<size_t> dims{3, 4, 5};
    size_t loops = 100;
    long magnitude = 10;
    uint64_t seed = 0;
    bench->add_option("--dims", dims, "dimensions to sweep");
    bench->add_option("--loops", loops, "programs per dimension");
    bench->add_option("--magnitude", magnitude, "entry magnitude bound");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(path, format, json);
        if (witness->parsed()) return cmd_witness(path, format, witness_bound, json);
        if (simulate->parsed()) return cmd_simulate(path, format, start, simulate_bound, json);
        if (bench->parsed()) return cmd_bench(dims, loops, magnitude, seed, json);
    } catch (const linterm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
