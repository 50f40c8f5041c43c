#ifndef LLR_POSET_HPP
#define LLR_POSET_HPP

#include <vector>

#include "llr/matrix_core.hpp"

namespace llr {

// The index set {1..n} x {1..m} ordered componentwise is a poset with least
// element (1,1). A positive matrix scaled to unit sum is a distribution on
// it, and the log-linear model on that poset gives two dual coordinate
// grids: canonical (theta) and expectation (eta).

/// Canonical parameters: log p_ij = sum of theta over the order ideal below
/// (i,j). theta(0,0) is the normalizing factor log p_11.
struct ThetaCoords {
    Matrix theta;

    long rows() const { return theta.rows(); }
    long cols() const { return theta.cols(); }
};

/// Expectation parameters: eta_ij = sum of p over the filter above (i,j).
/// eta(0,0) == 1 always; monotone nonincreasing along rows and columns.
struct EtaCoords {
    Matrix eta;

    long rows() const { return eta.rows(); }
    long cols() const { return eta.cols(); }
};

/// Vertical / horizontal bingo report. Indices are 1-based; column 1 and
/// row 1 are never reported (they carry no rank information).
struct Bingos {
    std::vector<long> vertical;    // column indices in {2..m}
    std::vector<long> horizontal;  // row indices in {2..n}
};

/// Mobius inversion of log p over the grid poset:
///   theta_ij = log p_ij - log p_(i-1)j - log p_i(j-1) + log p_(i-1)(j-1),
/// out-of-range terms dropped.
ThetaCoords theta_from_p(const ProbMatrix& p);

/// Zeta transform: p_ij = exp(prefix sum of theta). Throws NotNormalizedError
/// when the implied total deviates from 1 by more than 1e-9.
ProbMatrix p_from_theta(const ThetaCoords& t);

/// Suffix (south-east) cumulative sums of p.
EtaCoords eta_from_p(const ProbMatrix& p);

/// Inverse of eta_from_p:
///   p_ij = eta_ij - eta_i(j+1) - eta_(i+1)j + eta_(i+1)(j+1),
/// out-of-range eta treated as 0. Throws NotADistributionError if any
/// reconstructed cell is <= 0 or the total is off unity.
ProbMatrix p_from_eta(const EtaCoords& e);

/// Default tolerance for treating a theta entry as zero, scaled by max|theta|
/// when that exceeds 1 so detection survives transform noise.
double default_bingo_tol(const ThetaCoords& t, double base_tol = 1e-8);

/// Column k in {2..m} has a vertical bingo when theta_ik ~ 0 for all i >= 2;
/// row j in {2..n} a horizontal one when theta_jk ~ 0 for all k >= 2.
Bingos find_bingos(const ThetaCoords& t, double zero_tol);

/// True when every eligible column and row has a bingo, i.e. theta_ij = 0
/// for all i >= 2 and j >= 2 (the rank-1 submanifold).
bool has_full_bingo(const ThetaCoords& t, double zero_tol);

/// Decomposes a full-bingo distribution into its two marginal distributions
/// (row sums and column sums); their outer product reconstructs p. Throws
/// NotRankOneError when p is not in the full-bingo space.
std::pair<Vector, Vector> rank1_factors(const ProbMatrix& p);

}  // namespace llr

#endif  // LLR_POSET_HPP
