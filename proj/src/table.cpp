#include "seqtrial/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "seqtrial/analytic.hpp"
#include "seqtrial/montecarlo.hpp"
#include "seqtrial/random_stream.hpp"

namespace seqtrial::table {
namespace {

constexpr double kMeans[] = {-10.0, -1.0, 0.0, 1.0, 10.0};
constexpr std::int64_t kStageSizes[] = {10, 100, 1000};

void append_rule(std::vector<GridPoint>& grid, const StoppingRule& rule) {
    for (double mu : kMeans)
        for (std::int64_t n : kStageSizes) grid.push_back({rule, TrialParams(mu, n)});
}

// Three decimals, with negative zero printed as zero.
std::string three_decimals(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string plain_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::vector<GridPoint> table_grid(int table_id) {
    std::vector<GridPoint> grid;
    switch (table_id) {
        case 1:
            append_rule(grid, StoppingRule::probabilistic(0.0, 0.0));
            append_rule(grid, StoppingRule::probabilistic(0.0, 1.0));
            break;
        case 2:
            append_rule(grid, StoppingRule::probabilistic(0.0, 10.0));
            append_rule(grid, StoppingRule::probabilistic(0.0, 100.0));
            break;
        case 3:
            append_rule(grid, StoppingRule::deterministic());
            break;
        default:
            throw std::invalid_argument("table id must be 1, 2 or 3");
    }
    return grid;
}

std::vector<TableRow> compute_table(int table_id, std::uint64_t seed, std::size_t replicates,
                                    unsigned threads) {
    const auto grid = table_grid(table_id);
    std::vector<TableRow> rows;
    rows.reserve(grid.size());
    for (std::size_t r = 0; r < grid.size(); ++r) {
        const auto& point = grid[r];
        montecarlo::SimulationPlan plan{point.rule, point.params, replicates, 1.96,
                                        derive_seed(seed, 100u * static_cast<unsigned>(table_id) + r)};
        const auto sample = montecarlo::run_simulation(plan, threads);
        const auto summary = montecarlo::summarize(sample, plan);

        TableRow row;
        row.beta_label = point.rule.label();
        row.mu = point.params.mu();
        row.n = point.params.n();
        row.C = analytic::tv_bound(point.rule, point.params);
        row.K = summary.empirical_kolmogorov;
        row.L = summary.coverage_count;
        row.flagged = summary.flagged;
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.beta_label << ',' << plain_number(r.mu) << ',' << r.n << ',' << three_decimals(r.C) << ','
            << three_decimals(r.K) << ',' << r.L << ',' << (r.flagged ? "true" : "false") << '\n';
    }
}

}  // namespace seqtrial::table
