// Command-line front end: load spaces, functions and elements from JSON,
// run conjugation and norm computations, and drive the verification suites.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 infinite value.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "orliczkit/duality.hpp"
#include "orliczkit/json_io.hpp"
#include "orliczkit/norms.hpp"
#include "orliczkit/oracle.hpp"
#include "orliczkit/verify.hpp"

namespace {

using nlohmann::json;
using namespace orlicz;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfinite = 3;

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        io::save_file(out_path, report);
    }
}

int cmd_conjugate(const std::string& phi_path, const std::string& out_path, int grid) {
    OrliczFunction phi = io::orlicz_fn_from_json(io::load_file(phi_path));
    OrliczFunction psi = phi.conjugate();

    // sampled comparison against the grid oracle at points with finite psi
    json table = json::array();
    for (double s : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        double closed = psi.eval(s);
        if (closed == kInf) continue;
        double bruteforce = oracle::grid_conjugate_auto(phi, s, grid);
        table.push_back(json{{"s", s},
                             {"closed_form", closed},
                             {"grid_oracle", bruteforce},
                             {"abs_error", std::abs(closed - bruteforce)}});
    }
    json report{{"tool_version", verify::kToolVersion},
                {"input", io::orlicz_fn_to_json(phi)},
                {"conjugate", io::orlicz_fn_to_json(psi)},
                {"oracle_comparison", table}};
    emit(report, out_path);
    return kExitPass;
}

int cmd_norm(const std::string& kind, const std::string& space_path, const std::string& zeta_path,
             const std::string& element_path, const std::string& phi_path,
             const std::string& partition_path, double tol, const std::string& out_path) {
    SpacePtr space = io::space_from_json(io::load_file(space_path));
    if (zeta_path.empty() == element_path.empty()) {
        throw io::SchemaError("norm needs exactly one of --zeta or --element");
    }
    // a module element enters through its pointwise norm, |||x||| = | ||x|| |
    RandomScalar zeta =
        zeta_path.empty()
            ? io::element_from_json(io::load_file(element_path), space).norm()
            : io::random_scalar_from_json(io::load_file(zeta_path), space);
    json phi_json = io::load_file(phi_path);

    json report{{"tool_version", verify::kToolVersion}, {"kind", kind}, {"tol", tol}};
    double value = 0.0;
    if (kind == "lux" || kind == "orlicz") {
        OrliczFunction phi = io::orlicz_fn_from_json(phi_json);
        NormReport nr = kind == "lux" ? luxemburg_norm(zeta, phi, tol)
                                      : orlicz_norm(zeta, phi, tol);
        value = nr.value;
        report["report"] = io::norm_report_to_json(nr);
    } else if (kind == "cond-lux" || kind == "cond-orlicz") {
        std::optional<RandomOrliczFunction> Phi;
        if (phi_json.contains("per_block")) {
            Phi = io::random_orlicz_from_json(phi_json, space);
        } else {
            if (partition_path.empty()) {
                throw io::SchemaError("conditional norms need --partition (or a per_block phi)");
            }
            AtomPartition partition =
                io::partition_from_json(io::load_file(partition_path), space);
            Phi = RandomOrliczFunction::uniform(std::move(partition),
                                                io::orlicz_fn_from_json(phi_json));
        }
        CondNormReport nr = kind == "cond-lux" ? cond_luxemburg_norm(zeta, *Phi, tol)
                                               : cond_orlicz_norm(zeta, *Phi, tol);
        value = nr.value.max_value();
        report["report"] = io::cond_norm_report_to_json(nr);
    } else {
        throw io::SchemaError("unknown norm kind \"" + kind + "\"");
    }
    emit(report, out_path);
    if (value == kInf) {
        std::cerr << "value is +infinity\n";
        return kExitInfinite;
    }
    return kExitPass;
}

// isometry check for one explicitly supplied functional instead of random ones
int cmd_verify_single(const verify::SuiteConfig& config, const std::string& space_path,
                      const std::string& partition_path, const std::string& phi_path,
                      const std::string& functional_path, const std::string& out_path) {
    SpacePtr space = io::space_from_json(io::load_file(space_path));
    json phi_json = io::load_file(phi_path);
    RandomOrliczFunction Phi =
        phi_json.contains("per_block")
            ? io::random_orlicz_from_json(phi_json, space)
            : RandomOrliczFunction::uniform(
                  partition_path.empty()
                      ? AtomPartition::trivial(space)
                      : io::partition_from_json(io::load_file(partition_path), space),
                  io::orlicz_fn_from_json(phi_json));
    RandomFunctional f = io::functional_from_json(io::load_file(functional_path), space);

    IsometryReport report = verify_isometry(f, Phi, config.tol, config.samples, config.seed);
    json lower = json::array(), upper = json::array(), rhs = json::array();
    for (std::size_t b = 0; b < Phi.partition().block_count(); ++b) {
        std::size_t rep = Phi.partition().block(b).front();
        lower.push_back(report.lower[rep]);
        upper.push_back(report.upper[rep]);
        rhs.push_back(report.rhs[rep]);
    }
    emit(json{{"tool_version", verify::kToolVersion},
              {"suite", "isometry"},
              {"property",
               "dual operator norm of T f equals the conditional Orlicz norm of ||f||*"},
              {"seed", config.seed},
              {"tolerances", json{{"tol", config.tol}}},
              {"samples", config.samples},
              {"instances", json::array({json{{"instance", 0},
                                              {"lhs_interval", json::array({lower, upper})},
                                              {"rhs", rhs},
                                              {"pass", report.pass},
                                              {"residual", report.residual}}})},
              {"pass", report.pass}},
         out_path);
    return report.pass ? kExitPass : kExitVerifyFail;
}

int cmd_verify(const std::string& suite, const verify::SuiteConfig& config,
               const std::string& out_path) {
    verify::SuiteResult result;
    if (suite == "isometry") {
        result = verify::run_isometry(config);
    } else if (suite == "surjectivity") {
        result = verify::run_surjectivity(config);
    } else if (suite == "example32") {
        result = verify::run_example_norms(config);
    } else if (suite == "delta2") {
        result = verify::run_delta2(config);
    } else if (suite == "denseness") {
        result = verify::run_denseness(config);
    } else {
        throw io::SchemaError("unknown suite \"" + suite + "\"");
    }
    emit(verify::to_json(result, config), out_path);
    return result.pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conditional Orlicz space toolkit"};
    app.set_version_flag("--version", verify::kToolVersion);
    app.require_subcommand(1);

    std::string phi_path, space_path, zeta_path, element_path, functional_path;
    std::string partition_path, out_path, kind, suite;
    double tol = 1e-8;
    int grid = 100000;
    verify::SuiteConfig config;

    CLI::App* conjugate = app.add_subcommand("conjugate", "closed-form conjugate of a function");
    conjugate->add_option("--phi", phi_path, "Orlicz function JSON")->required();
    conjugate->add_option("--out", out_path, "output path (default stdout)");
    conjugate->add_option("--samples", grid, "grid resolution for the oracle comparison");

    CLI::App* norm = app.add_subcommand("norm", "Luxemburg/Orlicz norms, plain or conditional");
    norm->add_option("--kind", kind, "lux | orlicz | cond-lux | cond-orlicz")->required();
    norm->add_option("--space", space_path, "probability space JSON")->required();
    norm->add_option("--zeta", zeta_path, "random scalar JSON");
    norm->add_option("--element", element_path, "module element JSON (norm of ||x||)");
    norm->add_option("--phi", phi_path, "Orlicz function JSON (scalar or per_block)")->required();
    norm->add_option("--partition", partition_path, "partition JSON for conditional kinds");
    norm->add_option("--tol", tol, "solver tolerance");
    norm->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "randomized verification suites");
    verify_cmd->add_option("--suite", suite,
                           "isometry | surjectivity | example32 | delta2 | denseness")
        ->required();
    verify_cmd->add_option("--instances", config.instances, "number of random instances");
    verify_cmd->add_option("--seed", config.seed, "rng seed")->envname("ORLICZKIT_SEED");
    verify_cmd->add_option("--tol", config.tol, "pass/fail tolerance");
    verify_cmd->add_option("--samples", config.samples, "sampling effort per instance");
    verify_cmd->add_option("--max-outcomes", config.max_outcomes, "largest outcome count");
    verify_cmd->add_option("--max-dim", config.max_dim, "largest fiber dimension");
    verify_cmd->add_option("--max-blocks", config.max_blocks, "largest block count");
    verify_cmd->add_option("--space", space_path, "space JSON for a single-instance check");
    verify_cmd->add_option("--partition", partition_path, "partition JSON (single instance)");
    verify_cmd->add_option("--phi", phi_path, "Orlicz function JSON (single instance)");
    verify_cmd->add_option("--functional", functional_path,
                           "functional JSON: check this instance instead of random ones");
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (conjugate->parsed()) return cmd_conjugate(phi_path, out_path, grid);
        if (norm->parsed()) {
            return cmd_norm(kind, space_path, zeta_path, element_path, phi_path, partition_path,
                            tol, out_path);
        }
        if (!functional_path.empty()) {
            if (suite != "isometry") {
                throw io::SchemaError("--functional only applies to the isometry suite");
            }
            if (space_path.empty() || phi_path.empty()) {
                throw io::SchemaError("single-instance isometry needs --space and --phi");
            }
            return cmd_verify_single(config, space_path, partition_path, phi_path,
                                     functional_path, out_path);
        }
        return cmd_verify(suite, config, out_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    } catch (const orlicz::io::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
