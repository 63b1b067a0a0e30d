#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqtrial/model.hpp"

namespace seqtrial::table {

// One parameter point of a reproduction table.
struct GridPoint {
    StoppingRule rule;
    TrialParams params;
};

struct TableRow {
    std::string beta_label;
    double mu = 0.0;
    std::int64_t n = 0;
    double C = 0.0;  // full precision; rounded only when written as CSV
    double K = 0.0;
    std::size_t L = 0;
    bool flagged = false;
};

// Table 1: beta in {0, 1}; table 2: beta in {10, 100}; table 3: deterministic.
// Each with mu in {-10, -1, 0, 1, 10}, n in {10, 100, 1000} and alpha = 0.
// Throws std::invalid_argument for any other id.
std::vector<GridPoint> table_grid(int table_id);

// Row r (0-based) of table t is simulated with master seed derive_seed(seed, 100 * t + r).
std::vector<TableRow> compute_table(int table_id, std::uint64_t seed, std::size_t replicates,
                                    unsigned threads = 0);

inline constexpr const char* kCsvHeader = "beta,mu,n,C,K,L,flagged";

void write_csv(std::ostream& out, const std::vector<TableRow>& rows);

}  // namespace seqtrial::table
