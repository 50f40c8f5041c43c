#ifndef LLR_NMF_HPP
#define LLR_NMF_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "llr/matrix_core.hpp"

namespace llr {

struct SolverConfig {
    long max_iters = 200;
    double rel_tol = 1e-5;       // relative objective-change stopping rule
    std::uint64_t seed = 0;
    long inner_rank = 0;         // lraNMF pre-compression rank; 0 = min(n,m)
};

/// Result of an iterative factorization A ~ W H.
struct FactorPair {
    Matrix w;  // n x r, nonnegative
    Matrix h;  // r x m, nonnegative
    std::vector<std::pair<long, double>> objective_trace;

    Matrix product() const { return w * h; }
};

/// Standard NMF with Lee-Seung multiplicative updates on the Frobenius
/// objective ||A - WH||_F.
FactorPair nmf_ls(const Matrix& a, long r, const SolverConfig& cfg);

/// KL-NMF: multiplicative updates on the generalized KL divergence
/// sum_ij (a log(a / wh) - a + wh).
FactorPair nmf_kl(const Matrix& a, long r, const SolverConfig& cfg);

/// lraNMF: pre-compress A ~ L R^T by an exact truncated SVD at inner_rank,
/// then run LS multiplicative updates against the compressed form. Per-
/// iteration cost depends on inner_rank and r, not on n*m.
FactorPair lra_nmf(const Matrix& a, long r, const SolverConfig& cfg);

enum class OracleMode { grid, multistart };

/// Independent rank-1 KL minimizer used to verify the closed-form reduction:
/// exhaustive grid over normalized factor vectors (2x2 only) or budget-many
/// random-restart projected-gradient descents on the two probability
/// simplices. Never uses the closed form.
std::pair<Matrix, double> rank1_kl_oracle(const Matrix& a, OracleMode mode,
                                          long budget);

}  // namespace llr

#endif  // LLR_NMF_HPP
