#include "seqtrial/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "seqtrial/analytic.hpp"
#include "seqtrial/montecarlo.hpp"
#include "seqtrial/table.hpp"

namespace seqtrial::cli {
namespace {

using nlohmann::json;

struct RunConfig {
    double alpha = 0.0;
    std::optional<double> beta;
    bool deterministic = false;
    double mu = 0.0;
    std::int64_t n = 0;
    double x = 1.96;
    std::size_t replicates = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string format = "csv";
    std::optional<double> tol;
    std::string out_path;
    int table_id = 0;
};

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

void add_law_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--alpha", cfg.alpha, "Probit intercept (default 0)");
    auto* beta = cmd->add_option("--beta", cfg.beta, "Probit slope, >= 0");
    auto* det = cmd->add_flag("--deterministic", cfg.deterministic, "Stop exactly when K_n > 0");
    beta->excludes(det);
    cmd->add_option("--mu", cfg.mu, "Population mean")->required();
    cmd->add_option("--n", cfg.n, "Stage size")->required()->check(CLI::PositiveNumber);
    add_output_options(cmd, cfg);
}

StoppingRule make_rule(const RunConfig& cfg) {
    if (cfg.deterministic) return StoppingRule::deterministic();
    if (!cfg.beta) throw CLI::ValidationError("one of --beta or --deterministic is required");
    return StoppingRule::probabilistic(cfg.alpha, *cfg.beta);
}

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

json law_inputs(const RunConfig& cfg, const StoppingRule& rule) {
    json in;
    if (rule.is_deterministic()) {
        in["rule"] = "deterministic";
    } else {
        in["rule"] = "probabilistic";
        in["alpha"] = rule.probit().alpha;
        in["beta"] = rule.probit().beta;
    }
    in["mu"] = cfg.mu;
    in["n"] = cfg.n;
    return in;
}

void emit_scalar(std::ostream& out, const RunConfig& cfg, const std::string& command, json inputs,
                 double value) {
    if (cfg.format == "json") {
        out << json{{"command", command}, {"inputs", std::move(inputs)}, {"value", value}}.dump(2) << '\n';
    } else {
        out << fixed6(value) << '\n';
    }
}

json row_json(const table::TableRow& r) {
    return {{"beta", r.beta_label}, {"mu", r.mu}, {"n", r.n}, {"C", r.C},
            {"K", r.K},             {"L", r.L},   {"flagged", r.flagged}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distribution of the sample average after a two-stage sequential trial", "seqtrial"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* bound = app.add_subcommand("bound", "Total-variation upper bound C");
    add_law_options(bound, cfg);
    bound->add_option("--tol", cfg.tol, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);

    auto* cdf = app.add_subcommand("cdf", "Exact CDF of sqrt(N)(mu_hat - mu) at --x");
    add_law_options(cdf, cfg);
    cdf->add_option("--x", cfg.x, "Evaluation point")->required();
    cdf->add_option("--tol", cfg.tol, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);

    auto* kolmogorov = app.add_subcommand("kolmogorov", "Exact Kolmogorov distance to N(0,1)");
    add_law_options(kolmogorov, cfg);

    auto* coverage = app.add_subcommand("coverage", "Exact coverage of mu_hat -+ x/sqrt(N)");
    add_law_options(coverage, cfg);
    coverage->add_option("--x", cfg.x, "Interval half-width multiplier (default 1.96)")
        ->check(CLI::NonNegativeNumber);
    coverage->add_option("--tol", cfg.tol, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo summary: K, L, coverage, bias");
    add_law_options(simulate, cfg);
    simulate->add_option("--x", cfg.x, "Interval half-width multiplier (default 1.96)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--replicates", cfg.replicates, "Number of replicates")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", cfg.seed, "Master seed");
    simulate->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

    auto* tab = app.add_subcommand("table", "Reproduce one of the three simulation tables");
    tab->add_option("id", cfg.table_id, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));
    tab->add_option("--replicates", cfg.replicates, "Replicates per row")->check(CLI::PositiveNumber);
    tab->add_option("--seed", cfg.seed, "Master seed");
    tab->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    add_output_options(tab, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    std::ostringstream buffer;
    try {
        if (*tab) {
            const auto rows = table::compute_table(cfg.table_id, cfg.seed, cfg.replicates, cfg.threads);
            if (cfg.format == "json") {
                json doc{{"table", cfg.table_id}, {"seed", cfg.seed}, {"replicates", cfg.replicates},
                         {"rows", json::array()}};
                for (const auto& r : rows) doc["rows"].push_back(row_json(r));
                buffer << doc.dump(2) << '\n';
            } else {
                table::write_csv(buffer, rows);
            }
        } else {
            const StoppingRule rule = make_rule(cfg);
            const TrialParams params(cfg.mu, cfg.n);
            const analytic::StatisticLaw law{rule, params};
            json inputs = law_inputs(cfg, rule);

            if (*bound) {
                const double tol = cfg.tol.value_or(quadrature::kDefaultBoundTolerance);
                emit_scalar(buffer, cfg, "bound", inputs, analytic::tv_bound(rule, params, tol));
            } else if (*cdf) {
                inputs["x"] = cfg.x;
                const double tol = cfg.tol.value_or(analytic::kDefaultCdfTolerance);
                emit_scalar(buffer, cfg, "cdf", inputs, analytic::statistic_cdf(law, cfg.x, tol));
            } else if (*kolmogorov) {
                const auto k = analytic::exact_kolmogorov(law);
                if (cfg.format == "json") {
                    buffer << json{{"command", "kolmogorov"}, {"inputs", inputs},
                                   {"value", k.distance}, {"argmax", k.argmax}}
                                  .dump(2)
                           << '\n';
                } else {
                    buffer << fixed6(k.distance) << '\n';
                }
            } else if (*coverage) {
                inputs["x"] = cfg.x;
                const double tol = cfg.tol.value_or(analytic::kDefaultCdfTolerance);
                emit_scalar(buffer, cfg, "coverage", inputs, analytic::exact_coverage(law, cfg.x, tol));
            } else if (*simulate) {
                montecarlo::SimulationPlan plan{rule, params, cfg.replicates, cfg.x, cfg.seed};
                const auto sample = montecarlo::run_simulation(plan, cfg.threads);
                const auto s = montecarlo::summarize(sample, plan);
                if (cfg.format == "json") {
                    inputs["x"] = cfg.x;
                    inputs["replicates"] = cfg.replicates;
                    inputs["seed"] = cfg.seed;
                    buffer << json{{"command", "simulate"},
                                   {"inputs", inputs},
                                   {"K", s.empirical_kolmogorov},
                                   {"L", s.coverage_count},
                                   {"coverage_rate", s.coverage_rate},
                                   {"bias", s.bias_estimate},
                                   {"stop_count", sample.stop_count},
                                   {"flagged", s.flagged}}
                                  .dump(2)
                           << '\n';
                } else {
                    buffer << "K,L,coverage_rate,bias,stop_count,flagged\n"
                           << fixed6(s.empirical_kolmogorov) << ',' << s.coverage_count << ','
                           << fixed6(s.coverage_rate) << ',' << fixed6(s.bias_estimate) << ','
                           << sample.stop_count << ',' << (s.flagged ? "true" : "false") << '\n';
                }
            }
        }
    } catch (const quadrature::ConvergenceError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (cfg.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out_path);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << " for writing\n";
            return kUsage;
        }
        file << buffer.str();
    }
    return kSuccess;
}

}  // namespace seqtrial::cli
