#include "llr/matrix_core.hpp"

#include <cmath>

namespace llr {

void require_positive(const Matrix& a) {
    if (a.size() == 0) throw EmptyMatrixError();
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            double v = a(i, j);
            if (!std::isfinite(v) || v <= 0.0)
                throw NonPositiveEntryError(i + 1, j + 1);
        }
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatchError(a.rows(), a.cols(), b.rows(), b.cols());
}

std::pair<ProbMatrix, double> normalize(const Matrix& a) {
    require_positive(a);
    double total = a.sum();
    return {ProbMatrix{a / total}, total};
}

double kl_divergence(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    auto [pa, ta] = normalize(a);
    auto [pb, tb] = normalize(b);
    double kl = 0.0;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            double x = pa.p(i, j), y = pb.p(i, j);
            if (x != y) kl += x * std::log(x / y);
        }
    return kl;
}

double ls_error(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    return (a - b).norm();
}

long numerical_rank(const Matrix& a, double rel_tol) {
    Eigen::BDCSVD<Matrix> svd(a);
    const Vector& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    double cutoff = rel_tol * sv(0);
    long r = 0;
    for (long k = 0; k < sv.size(); ++k)
        if (sv(k) > cutoff) ++r;
    return r;
}

}  // namespace llr
