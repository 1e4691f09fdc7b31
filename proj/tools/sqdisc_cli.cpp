// sqdisc: classify curves, build isogeny families, verify tables, search points.
// Prints one JSON document on stdout (or a table with --human).
// Exit status: 0 when the report has no counterexamples, 1 otherwise, 2 on error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "sqdisc/errors.hpp"
#include "sqdisc/families.hpp"
#include "sqdisc/square_class.hpp"
#include "sqdisc/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for elliptic curves over Q with square discriminant"};
    app.require_subcommand(1);
    app.fallthrough();

    bool human = false;
    bool timing = false;
    std::string data_dir;
    unsigned long factor_bound = 0;
    app.add_flag("--human", human, "Render a table instead of JSON");
    app.add_flag("--timing", timing, "Include wall-clock time in the report");
    app.add_option("--data-dir", data_dir, "Directory with tables.txt and modular_polynomials.txt");
    app.add_option("--factor-bound", factor_bound, "Trial-division bound for integer factorization");

    std::string curve;
    auto* classify = app.add_subcommand("classify", "Discriminant, j, square-disc verdicts and CM data of a curve");
    classify->add_option("curve", curve, "Model as [A,B] or [a1,a2,a3,a4,a6]")->required();

    int N = 0;
    std::string t;
    auto* family = app.add_subcommand("family", "Curve with square discriminant and an N-isogeny at parameter t");
    family->add_option("--N", N, "Level in {2,3,4,6,7,8}")->required();
    family->add_option("--t", t, "Rational parameter, e.g. 3 or -5/2")->required();

    std::string suite = "all";
    sqdisc::SuiteOptions opts;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(sqdisc::kSuiteNames));
    verify->add_option("--height", opts.height, "Search height for table suites")->check(CLI::PositiveNumber);
    verify->add_option("--samples", opts.samples, "Sample count (0 = suite default)")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", opts.seed, "Seed for sampled suites");
    verify->add_option("--threads", opts.threads, "Worker threads for point searches (0 = all cores)");

    std::string which;
    long height = 0;
    unsigned threads = 1;
    auto* search = app.add_subcommand("search", "Affine rational points of bounded height on C_N or X_N");
    search->add_option("--N", N, "Level")->required();
    search->add_option("--curve", which, "C or X")->required()->check(CLI::IsMember({"C", "X"}));
    search->add_option("--height", height, "Height bound H")->required()->check(CLI::PositiveNumber);
    search->add_option("--threads", threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (!data_dir.empty()) sqdisc::set_data_dir(data_dir);
        if (factor_bound > 0) {
            auto fo = sqdisc::default_factor_options();
            fo.trial_bound = factor_bound;
            sqdisc::set_default_factor_options(fo);
        }

        const auto start = std::chrono::steady_clock::now();
        sqdisc::Report report = [&] {
            if (*classify) return sqdisc::cmd_classify(curve);
            if (*family) return sqdisc::cmd_family(N, t);
            if (*verify) return sqdisc::cmd_verify(suite, opts);
            return sqdisc::cmd_search(N, which, height, threads);
        }();
        if (timing) {
            report.set_timing(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }

        if (human) {
            std::cout << report.human();
        } else {
            std::cout << report.to_json().dump(2) << "\n";
        }
        return report.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        sqdisc::json err = {{"error", e.what()}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "sqdisc: " << e.what() << "\n";
        return 2;
    }
}
