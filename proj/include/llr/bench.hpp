#ifndef LLR_BENCH_HPP
#define LLR_BENCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "llr/matrix_core.hpp"

namespace llr {

/// One benchmark measurement. phi values are the method's errors relative
/// to LrRR on the same input and rank; the timing covers only the
/// reduction/factorization call.
struct BenchRecord {
    std::string method;
    long n_rows = 0;
    long n_cols = 0;
    long target_rank = 0;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
    double kl_error = 0.0;
    double ls_error = 0.0;
    double phi_kl = 0.0;
    double phi_ls = 0.0;
};

enum class SweepAxis { size, rank };

struct SweepSpec {
    SweepAxis axis = SweepAxis::size;
    std::vector<long> values;     // sizes (n = m) or target ranks
    long fixed_value = 0;         // r for size sweeps, n for rank sweeps
    long trials = 5;
    std::vector<std::string> methods;  // lrrr, nmf-ls, nmf-kl, lra-nmf
    std::uint64_t seed = 0;
    long nmf_max_iters = 200;
};

/// Monotonic clock in seconds; injectable for timing-isolation tests.
using Clock = std::function<double()>;

Clock steady_clock_seconds();

/// Known method identifiers, in canonical order.
const std::vector<std::string>& known_methods();

/// Entries i.i.d. uniform on (1e-9, 1.0], deterministic per seed.
Matrix gen_uniform(long n, long m, std::uint64_t seed);

/// Runs the full sweep: per grid point and trial, generate an input, run
/// LrRR first (the phi denominator), then each requested method. A warm-up
/// run per method per grid point is timed and discarded.
std::vector<BenchRecord> run_sweep(const SweepSpec& spec,
                                   Clock clock = steady_clock_seconds());

/// Per-(method, grid point) aggregate over trials.
struct BenchSummary {
    std::string method;
    long n_rows = 0;
    long n_cols = 0;
    long target_rank = 0;
    long trials = 0;
    double median_elapsed = 0.0;
    double min_elapsed = 0.0;
    double max_elapsed = 0.0;
    double median_phi_kl = 0.0;
    double median_phi_ls = 0.0;
};

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

}  // namespace llr

#endif  // LLR_BENCH_HPP
