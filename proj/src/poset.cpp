#include "llr/poset.hpp"

#include <cmath>

namespace llr {

ThetaCoords theta_from_p(const ProbMatrix& p) {
    const long n = p.rows(), m = p.cols();
    Matrix lp = p.p.array().log();
    Matrix theta(n, m);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m; ++j) {
            double v = lp(i, j);
            if (i > 0) v -= lp(i - 1, j);
            if (j > 0) v -= lp(i, j - 1);
            if (i > 0 && j > 0) v += lp(i - 1, j - 1);
            theta(i, j) = v;
        }
    return ThetaCoords{std::move(theta)};
}

ProbMatrix p_from_theta(const ThetaCoords& t) {
    const long n = t.rows(), m = t.cols();
    // Running 2-D prefix sum, O(nm).
    Matrix acc(n, m);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m; ++j) {
            double v = t.theta(i, j);
            if (i > 0) v += acc(i - 1, j);
            if (j > 0) v += acc(i, j - 1);
            if (i > 0 && j > 0) v -= acc(i - 1, j - 1);
            acc(i, j) = v;
        }
    Matrix p = acc.array().exp();
    double total = p.sum();
    if (std::abs(total - 1.0) > 1e-9) throw NotNormalizedError(total);
    return ProbMatrix{std::move(p)};
}

EtaCoords eta_from_p(const ProbMatrix& p) {
    const long n = p.rows(), m = p.cols();
    Matrix eta(n, m);
    for (long i = n - 1; i >= 0; --i)
        for (long j = m - 1; j >= 0; --j) {
            double v = p.p(i, j);
            if (i + 1 < n) v += eta(i + 1, j);
            if (j + 1 < m) v += eta(i, j + 1);
            if (i + 1 < n && j + 1 < m) v -= eta(i + 1, j + 1);
            eta(i, j) = v;
        }
    eta(0, 0) = 1.0;  // exact by construction up to rounding; pin it
    return EtaCoords{std::move(eta)};
}

ProbMatrix p_from_eta(const EtaCoords& e) {
    const long n = e.rows(), m = e.cols();
    Matrix p(n, m);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m; ++j) {
            double v = e.eta(i, j);
            if (j + 1 < m) v -= e.eta(i, j + 1);
            if (i + 1 < n) v -= e.eta(i + 1, j);
            if (i + 1 < n && j + 1 < m) v += e.eta(i + 1, j + 1);
            if (v <= 0.0)
                throw NotADistributionError(
                    "reconstructed p(" + std::to_string(i + 1) + ", " +
                    std::to_string(j + 1) + ") = " + std::to_string(v));
            p(i, j) = v;
        }
    double total = p.sum();
    if (std::abs(total - 1.0) > 1e-9)
        throw NotADistributionError("reconstructed p sums to " +
                                    std::to_string(total));
    return ProbMatrix{std::move(p)};
}

double default_bingo_tol(const ThetaCoords& t, double base_tol) {
    double mx = t.theta.array().abs().maxCoeff();
    return mx > 1.0 ? base_tol * mx : base_tol;
}

Bingos find_bingos(const ThetaCoords& t, double zero_tol) {
    const long n = t.rows(), m = t.cols();
    Bingos b;
    for (long k = 1; k < m; ++k) {
        bool bingo = true;
        for (long i = 1; i < n && bingo; ++i)
            bingo = std::abs(t.theta(i, k)) <= zero_tol;
        if (bingo) b.vertical.push_back(k + 1);
    }
    for (long j = 1; j < n; ++j) {
        bool bingo = true;
        for (long k = 1; k < m && bingo; ++k)
            bingo = std::abs(t.theta(j, k)) <= zero_tol;
        if (bingo) b.horizontal.push_back(j + 1);
    }
    return b;
}

bool has_full_bingo(const ThetaCoords& t, double zero_tol) {
    for (long i = 1; i < t.rows(); ++i)
        for (long j = 1; j < t.cols(); ++j)
            if (std::abs(t.theta(i, j)) > zero_tol) return false;
    return true;
}

std::pair<Vector, Vector> rank1_factors(const ProbMatrix& p) {
    ThetaCoords t = theta_from_p(p);
    if (!has_full_bingo(t, default_bingo_tol(t))) throw NotRankOneError();
    Vector rowdist = p.p.rowwise().sum();
    Vector coldist = p.p.colwise().sum().transpose();
    return {std::move(rowdist), std::move(coldist)};
}

}  // namespace llr
