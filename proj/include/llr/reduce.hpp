#ifndef LLR_REDUCE_HPP
#define LLR_REDUCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "llr/matrix_core.hpp"

namespace llr {

/// A maximal run of consecutive selected columns, 1-based inclusive.
struct Run {
    long first;
    long last;

    bool operator==(const Run&) const = default;
};

/// Column selection for rank-r reduction: a sorted set C of m - r columns
/// from {2..m} together with its unique maximal-interval partition.
struct BingoPlan {
    long m = 0;  // column count of the target matrix
    long r = 0;  // target rank
    std::vector<long> selected;  // sorted, 1-based
    std::vector<Run> partition;

    /// True when nothing is selected (no-op reduction).
    bool empty() const { return selected.empty(); }
};

struct ReductionResult {
    Matrix output;
    BingoPlan plan;
    double kl_from_input = 0.0;
    double ls_from_input = 0.0;
    double elapsed_seconds = 0.0;
    bool transposed = false;      // reduced as the transpose (n < m case)
    std::string rng_algorithm;    // set when the plan was sampled
};

/// Rank-1 reduction: out_ij = rowsum_i * colsum_j / total. Closed form,
/// O(nm); preserves row and column sums and minimizes the normalized KL
/// divergence from `a` over all rank-1 matrices.
Matrix l1rr(const Matrix& a);

/// Builds the plan for an explicit column list (must be m - r distinct
/// values in {2..m}).
BingoPlan make_plan(long m, long r, const std::vector<long>& columns);

/// Samples m - r columns from {2..m} without replacement, seeded.
BingoPlan make_plan(long m, long r, std::uint64_t seed);

/// Rank-r reduction with a fixed plan: each run S_j replaces the column
/// block (min S_j - 1)..(max S_j) with its L1RR; other columns are copied.
/// O(n(m - r)) excluding the divergence scoring.
ReductionResult lrrr(const Matrix& a, const BingoPlan& plan);

/// make_plan + lrrr with the transpose convention: when n_rows < n_cols the
/// input is reduced as its transpose. r >= min(n, m) is a no-op.
ReductionResult lrrr_auto(const Matrix& a, long r, std::uint64_t seed);

/// Human-readable partition, e.g. "{3,4,5},{9},{14,15}".
std::string format_partition(const BingoPlan& plan);

}  // namespace llr

#endif  // LLR_REDUCE_HPP
