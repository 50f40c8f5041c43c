#ifndef LLR_MATRIX_CORE_HPP
#define LLR_MATRIX_CORE_HPP

#include <Eigen/Dense>

#include "llr/errors.hpp"

namespace llr {

/// Dense real matrix, the carrier type for every operation in the library.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A strictly positive matrix whose entries sum to one, i.e. a probability
/// distribution over index pairs.
struct ProbMatrix {
    Matrix p;

    long rows() const { return p.rows(); }
    long cols() const { return p.cols(); }
};

/// Throws unless `a` is non-empty with all entries finite and > 0.
void require_positive(const Matrix& a);

/// Throws ShapeMismatchError unless a and b have identical shape.
void require_same_shape(const Matrix& a, const Matrix& b);

/// Scales a positive matrix to unit total. Returns the distribution and the
/// original total sum, so that p.p * total recovers the input.
std::pair<ProbMatrix, double> normalize(const Matrix& a);

/// KL divergence between the normalized versions of a and b:
///   sum_ij a_ij log(a_ij / b_ij)  with a, b scaled to unit total.
/// Scale-invariant in both arguments.
double kl_divergence(const Matrix& a, const Matrix& b);

/// Frobenius norm of (a - b) on the raw, unnormalized matrices.
double ls_error(const Matrix& a, const Matrix& b);

/// Number of singular values above rel_tol * sigma_max. Zero matrix -> 0.
long numerical_rank(const Matrix& a, double rel_tol = 1e-8);

}  // namespace llr

#endif  // LLR_MATRIX_CORE_HPP
