// skewgb: run a problem file and print the normalized basis.
//
//   skewgb problem.txt [--certify] [--oracle] [--trace] [--stats] [--threads N]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <skewgb/problem.hpp>

int main(int argc, char **argv)
{
    CLI::App app{"Truncated Groebner bases in skew polynomial rings, sigma-ideals and free algebras"};
    std::string path;
    skewgb::RunOptions opts;
    app.add_option("problem", path, "problem file")->required();
    app.add_flag("--certify", opts.certify, "re-check every in-window pair of the result");
    app.add_flag("--oracle", opts.oracle, "compare leading monomials with a plain Buchberger run");
    app.add_flag("--trace", opts.trace, "print one line per critical pair");
    app.add_flag("--stats", opts.stats, "print pair statistics");
    app.add_option("--threads", opts.threads, "worker threads for pair reduction")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : skewgb::exit_usage;
    }

    try {
        const skewgb::Problem problem = skewgb::load_problem(path);
        return skewgb::run_problem(problem, opts, std::cout, std::cerr);
    } catch (const skewgb::ParseError &e) {
        std::cerr << path << ": " << e.what() << "\n";
        return skewgb::exit_usage;
    } catch (const skewgb::RefusalError &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return skewgb::exit_refused;
    } catch (const skewgb::Error &e) {
        std::cerr << path << ": " << e.what() << "\n";
        return skewgb::exit_usage;
    }
}
