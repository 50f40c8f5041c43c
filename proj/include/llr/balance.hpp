#ifndef LLR_BALANCE_HPP
#define LLR_BALANCE_HPP

#include <vector>

#include "llr/poset.hpp"

namespace llr {

/// Target marginals for (s, t)-balancing. Both vectors are strictly
/// positive and sum to one.
struct BalanceSpec {
    Vector s;  // row sums, length n
    Vector t;  // column sums, length m

    /// Throws InvalidSpecError on non-positive components or totals != 1.
    void validate() const;
};

/// The unique balanced rank-1 matrix: out_ij = s_i * t_j. This is the
/// singleton intersection of the balancing submanifold with the full-bingo
/// space.
Matrix balanced_rank1(const BalanceSpec& spec);

/// True iff, after normalizing `a` to unit total, row sums match s and
/// column sums match t within tol.
bool check_balanced(const Matrix& a, const BalanceSpec& spec, double tol);

/// One sample of the 2x2 balanced family, parametrized by the B22 entry.
struct CurvePoint {
    double b22;
    Matrix b;      // the balanced matrix
    Matrix theta;  // its canonical coordinates
    Matrix eta;    // its expectation coordinates
};

/// Sweeps the one-parameter family of 2x2 matrices balanced to `spec`:
///   B = [[1-s2-t2+b22, t2-b22], [s2-b22, b22]].
/// Each sample must keep all four entries positive, i.e.
/// max(0, s2+t2-1) < b22 < min(s2, t2); otherwise OutOfDomainError.
std::vector<CurvePoint> curve_2x2(const BalanceSpec& spec,
                                  const std::vector<double>& b22_samples);

}  // namespace llr

#endif  // LLR_BALANCE_HPP
