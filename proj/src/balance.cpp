#include "llr/balance.hpp"

#include <cmath>

namespace llr {

void BalanceSpec::validate() const {
    if (s.size() == 0 || t.size() == 0)
        throw InvalidSpecError("empty marginal vector");
    if ((s.array() <= 0.0).any() || (t.array() <= 0.0).any())
        throw InvalidSpecError("marginals must be strictly positive");
    if (std::abs(s.sum() - 1.0) > 1e-12 || std::abs(t.sum() - 1.0) > 1e-12)
        throw InvalidSpecError("marginals must each sum to 1");
}

Matrix balanced_rank1(const BalanceSpec& spec) {
    spec.validate();
    return spec.s * spec.t.transpose();
}

bool check_balanced(const Matrix& a, const BalanceSpec& spec, double tol) {
    spec.validate();
    if (a.rows() != spec.s.size() || a.cols() != spec.t.size())
        throw ShapeMismatchError(a.rows(), a.cols(), spec.s.size(),
                                 spec.t.size());
    auto [p, total] = normalize(a);
    Vector rs = p.p.rowwise().sum();
    Vector cs = p.p.colwise().sum().transpose();
    return (rs - spec.s).cwiseAbs().maxCoeff() <= tol &&
           (cs - spec.t).cwiseAbs().maxCoeff() <= tol;
}

std::vector<CurvePoint> curve_2x2(const BalanceSpec& spec,
                                  const std::vector<double>& b22_samples) {
    spec.validate();
    if (spec.s.size() != 2 || spec.t.size() != 2)
        throw InvalidSpecError("curve_2x2 requires 2x2 marginals");
    const double s2 = spec.s(1), t2 = spec.t(1);
    const double lo = std::max(0.0, s2 + t2 - 1.0);
    const double hi = std::min(s2, t2);

    std::vector<CurvePoint> points;
    points.reserve(b22_samples.size());
    for (double b22 : b22_samples) {
        if (!(b22 > lo && b22 < hi)) throw OutOfDomainError(b22);
        Matrix b(2, 2);
        b << 1.0 - s2 - t2 + b22, t2 - b22,
             s2 - b22, b22;
        ProbMatrix p{b};
        points.push_back({b22, b, theta_from_p(p).theta, eta_from_p(p).eta});
    }
    return points;
}

}  // namespace llr
