#include "qdigits/qdigits.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_config_error = 2;

struct Config {
    int base = 3;
    std::string system = "symmetric";
    int n = 1;
    int n_minus = 0;
    std::string boundary = "periodic";
    std::string op;
    int index = 0;
    std::string amount;
    std::string representation = "default";
    bool renormalized = false;
    long long d_max = 4;
    double x = 1.0;
    std::string format;
    std::string out;
    double tolerance = 1e-10;
    int max_n = 4;
    std::string suite;
    std::string sweep;
};

struct ConfigError {
    std::string message;
};

struct StringDeleter {
    void operator()(char *s) const { qd_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

void check(qd_status status, const char *what) {
    if (status != QD_OK) {
        throw ConfigError{std::string(what) + ": " + qd_last_error()};
    }
}

void require_format(const Config &cfg, const std::string &allowed) {
    if (!cfg.format.empty() && cfg.format != allowed) {
        throw ConfigError{"this command writes " + allowed + ", not " + cfg.format};
    }
}

void emit(const Config &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        throw ConfigError{"cannot open " + cfg.out + " for writing"};
    }
    file << text;
    if (text.empty() || text.back() != '\n') {
        file << '\n';
    }
}

int run_build(const Config &cfg) {
    require_format(cfg, "json");
    static const std::map<std::string, qd_representation> reps{
        {"default", QD_REPRESENTATION_DEFAULT},
        {"nonnegative", QD_REPRESENTATION_NONNEGATIVE},
        {"signed", QD_REPRESENTATION_SIGNED},
    };
    qd_lattice *raw = nullptr;
    check(qd_lattice_create(cfg.base, cfg.n, cfg.n_minus, cfg.boundary == "antiperiodic" ? QD_ANTIPERIODIC : QD_PERIODIC,
                            &raw),
          "lattice");
    std::unique_ptr<qd_lattice, void (*)(qd_lattice *)> lattice(raw, qd_lattice_destroy);
    const qd_operator_request request{cfg.op.c_str(),
                                      cfg.system.c_str(),
                                      cfg.index,
                                      cfg.amount.empty() ? nullptr : cfg.amount.c_str(),
                                      reps.at(cfg.representation),
                                      cfg.renormalized ? 1 : 0};
    qd_matrix *m = nullptr;
    check(qd_build_operator(lattice.get(), &request, &m), "build");
    std::unique_ptr<qd_matrix, void (*)(qd_matrix *)> matrix(m, qd_matrix_destroy);
    char *json = nullptr;
    check(qd_matrix_to_json(matrix.get(), &json), "serialize");
    emit(cfg, CString(json).get());
    return exit_pass;
}

std::string first_failure(const std::string &json) {
    const std::string key = "\"first_failure\":";
    const auto at = json.find(key);
    if (at == std::string::npos) {
        return "unknown";
    }
    const auto start = json.find('"', at + key.size());
    const auto end = start == std::string::npos ? start : json.find('"', start + 1);
    return end == std::string::npos ? "unknown" : json.substr(start + 1, end - start - 1);
}

int run_verify(const Config &cfg) {
    require_format(cfg, "json");
    char *json = nullptr;
    int passed = 0;
    check(qd_verify(cfg.suite.c_str(), cfg.max_n, cfg.tolerance, &json, &passed), "verify");
    const CString owned(json);
    emit(cfg, owned.get());
    if (!passed) {
        std::cerr << "FAIL: " << first_failure(owned.get()) << '\n';
        return exit_check_failure;
    }
    return exit_pass;
}

int run_sweep(const Config &cfg) {
    require_format(cfg, "csv");
    const qd_sweep_params params{cfg.base, cfg.system.c_str(), cfg.d_max, cfg.x};
    char *csv = nullptr;
    check(qd_sweep(cfg.sweep.c_str(), &params, &csv), "sweep");
    emit(cfg, CString(csv).get());
    return exit_pass;
}

void add_lattice_options(CLI::App &cmd, Config &cfg) {
    cmd.add_option("--base", cfg.base, "Digit base")->check(CLI::IsMember({2, 3}));
    cmd.add_option("--system", cfg.system, "Digit system flavor")
        ->check(CLI::IsMember({"symmetric", "nonsymmetric"}));
}

void add_output_options(CLI::App &cmd, Config &cfg) {
    cmd.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd.add_option("--out", cfg.out, "Output file (default stdout)");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Digit-decomposition operators on finite cyclic lattices"};
    app.require_subcommand(1);
    Config cfg;

    auto *build = app.add_subcommand("build", "Build an operator matrix as a JSON document");
    add_lattice_options(*build, cfg);
    build->add_option("--n", cfg.n, "Number of digits")->check(CLI::NonNegativeNumber);
    build->add_option("--n-minus", cfg.n_minus, "Fractional digits")->check(CLI::NonNegativeNumber);
    build->add_option("--boundary", cfg.boundary, "Boundary condition")
        ->check(CLI::IsMember({"periodic", "antiperiodic"}));
    build->add_option("--op", cfg.op, "identity, x, p, x-digit, p-digit, shift, phase or projector")
        ->required()
        ->check(CLI::IsMember({"identity", "x", "p", "x-digit", "p-digit", "shift", "phase", "projector"}));
    build->add_option("--index", cfg.index, "Digit index for x-digit and p-digit");
    build->add_option("--amount", cfg.amount, "Shift length, phase or projector momentum as a rational");
    build->add_option("--representation", cfg.representation, "Coordinate window")
        ->check(CLI::IsMember({"default", "nonnegative", "signed"}));
    build->add_flag("--renormalized", cfg.renormalized, "Renormalized x reconstruction");
    add_output_options(*build, cfg);

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", cfg.suite, "examples, oracle, commutators, renorm, integral or all")
        ->required()
        ->check(CLI::IsMember({"examples", "oracle", "commutators", "renorm", "integral", "all"}));
    verify->add_option("--max-n", cfg.max_n, "Largest lattice size exponent")->check(CLI::Range(1, 6));
    verify->add_option("--tolerance", cfg.tolerance, "Max-abs entrywise tolerance")->check(CLI::PositiveNumber);
    add_output_options(*verify, cfg);

    auto *sweep = app.add_subcommand("sweep", "Write a convergence sweep as CSV");
    sweep->add_option("sweep", cfg.sweep, "line-convergence, integral-convergence or ln3-series")
        ->required()
        ->check(CLI::IsMember({"line-convergence", "integral-convergence", "ln3-series"}));
    add_lattice_options(*sweep, cfg);
    sweep->add_option("--d-max", cfg.d_max, "Largest |D| in line-convergence")->check(CLI::PositiveNumber);
    sweep->add_option("--x", cfg.x, "Evaluation point of integral-convergence")->check(CLI::PositiveNumber);
    add_output_options(*sweep, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_config_error;
    }

    try {
        if (build->parsed()) {
            return run_build(cfg);
        }
        if (verify->parsed()) {
            return run_verify(cfg);
        }
        return run_sweep(cfg);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.message << '\n';
        return exit_config_error;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }
}
