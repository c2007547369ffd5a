#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cdgforge/verify.hpp"

using namespace cdgforge;

namespace {

int do_run(const std::string& path, const ScenarioOptions& opt, const std::string& out_path) {
    ScenarioResult res = run_scenario_file(path, opt);
    if (!res.error.empty())
        std::cerr << res.error << "\n";
    for (const Record& r : res.records)
        std::cout << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.id << "\n";
    std::cout << res.records.size() << " assertions, exit " << res.exit_code << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << records_to_json(res.records, opt.seed);
    }
    return res.exit_code;
}

int do_verify(const std::string& suite, const VerifyOptions& opt, const std::string& out_path) {
    std::vector<SuiteReport> reports;
    try {
        reports = run_verify(suite, opt);
    } catch (const ValidationError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    }
    std::cout << verify_human_text(reports);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << verify_results_json(reports, opt);
    }
    for (const SuiteReport& s : reports)
        if (!s.all_pass())
            return 1;
    return 0;
}

int do_describe(const std::string& object, long long p) {
    Corpus c = standard_corpus(p);
    if (object == "S2" || object == "S4" || object == "base") {
        const FinAlgebra& a = object == "S2" ? *c.s2 : (object == "S4" ? *c.s4 : *c.base);
        std::cout << object << ": commutative algebra of dimension " << a.dim() << " over F_" << p
                  << ", radical dimension " << a.radical().cols() << "\n";
        return 0;
    }
    if (object == "K") {
        std::cout << "K = S4[s]/(s^2), deg s = -1, del(s) = x^2; graded dimension 4 + 4 over F_" << p
                  << "\n";
        return 0;
    }
    if (object == "Sw") {
        std::cout << "Sw: Z/2-graded curved ring with even part S4, zero odd part, curvature x^2\n";
        return 0;
    }
    if (object == "X_K") {
        std::cout << "X_K = K over itself: X^0 = S4, X^-1 = S4, d = x^2, s = id\n";
        return 0;
    }
    if (object == "D1") {
        std::cout << "D1 = (S4 <=> S4; f = x, g = x), an (S4, x^2) matrix factorization\n";
        return 0;
    }
    if (object == "k") {
        std::cout << "k = S2/(x): the simple S2-module, dimension 1\n";
        return 0;
    }
    std::cerr << "unknown object " << object << " (try S2, S4, base, K, Sw, X_K, D1, k)\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cdgforge: exact computations with curved dg modules and matrix factorizations"};
    app.require_subcommand(1);

    std::string scenario_path, suite = "all", out_path, object;
    uint64_t seed = 7;
    size_t random_count = 20;
    std::vector<int> window;
    long long field = 3;
    std::string only_tag;

    CLI::App* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("file", scenario_path, "scenario JSON file")->required();
    run->add_option("--seed", seed, "random seed");
    run->add_option("--random-count", random_count, "randomized check count");
    run->add_option("--window", window, "window LO HI")->expected(2);
    run->add_option("--field", field, "field characteristic override");
    run->add_option("--only", only_tag, "run only commands with this tag");
    run->add_option("--out", out_path, "machine-readable results file");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "curvature|adjunction|bar|gorenstein|homotopy|sign|all");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--random-count", random_count, "randomized check count");
    verify->add_option("--window", window, "window LO HI")->expected(2);
    verify->add_option("--field", field, "field characteristic");
    verify->add_option("--out", out_path, "machine-readable results file");

    CLI::App* describe = app.add_subcommand("describe", "describe a standard corpus object");
    describe->add_option("object", object, "object name")->required();
    describe->add_option("--field", field, "field characteristic");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            ScenarioOptions opt;
            opt.seed = seed;
            opt.random_count = random_count;
            if (window.size() == 2) {
                opt.window_lo = window[0];
                opt.window_hi = window[1];
            }
            if (field != 3)
                opt.field_override = field;
            opt.only_tag = only_tag;
            return do_run(scenario_path, opt, out_path);
        }
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.random_count = random_count;
            if (window.size() == 2) {
                opt.window_lo = window[0];
                opt.window_hi = window[1];
            }
            opt.field = field;
            return do_verify(suite, opt, out_path);
        }
        if (describe->parsed())
            return do_describe(object, field);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
