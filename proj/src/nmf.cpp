#include "llr/nmf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "llr/rng.hpp"

namespace llr {

namespace {

constexpr double kEps = 1e-12;  // denominator guard for multiplicative updates

void require_nonnegative(const Matrix& a) {
    if (a.size() == 0) throw EmptyMatrixError();
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (!(a(i, j) >= 0.0)) throw NegativeEntryError(i + 1, j + 1);
}

void require_rank(const Matrix& a, long r) {
    // Full-rank factorization (r = min(n, m)) is allowed; it reproduces
    // the input exactly.
    if (r < 1 || r > std::min(a.rows(), a.cols()))
        throw InvalidRankError("rank " + std::to_string(r) +
                               " must satisfy 1 <= r <= min(n, m)");
}

/// Seeded init: entries uniform(0,1] scaled by sqrt(mean(A)/r).
std::pair<Matrix, Matrix> init_factors(const Matrix& a, long r,
                                       std::uint64_t seed) {
    double scale = std::sqrt(a.mean() / static_cast<double>(r));
    Rng rng(seed);
    Matrix w(a.rows(), r), h(r, a.cols());
    for (long i = 0; i < w.rows(); ++i)
        for (long j = 0; j < w.cols(); ++j) w(i, j) = scale * rng.uniform01();
    for (long i = 0; i < h.rows(); ++i)
        for (long j = 0; j < h.cols(); ++j) h(i, j) = scale * rng.uniform01();
    return {std::move(w), std::move(h)};
}

bool converged(const std::vector<std::pair<long, double>>& trace,
               double rel_tol) {
    if (trace.size() < 2) return false;
    double prev = trace[trace.size() - 2].second;
    double cur = trace.back().second;
    return std::abs(prev - cur) <= rel_tol * std::max(std::abs(prev), kEps);
}

double gkl_objective(const Matrix& a, const Matrix& wh) {
    double obj = 0.0;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            double x = a(i, j), y = std::max(wh(i, j), kEps);
            if (x > 0.0) obj += x * std::log(x / y) - x + y;
            else obj += y;
        }
    return obj;
}

}  // namespace

FactorPair nmf_ls(const Matrix& a, long r, const SolverConfig& cfg) {
    require_nonnegative(a);
    require_rank(a, r);
    auto [w, h] = init_factors(a, r, cfg.seed);

    FactorPair fp;
    fp.objective_trace.push_back({0, (a - w * h).norm()});
    for (long it = 1; it <= cfg.max_iters; ++it) {
        h.array() *= (w.transpose() * a).array() /
                     ((w.transpose() * w) * h).array().max(kEps);
        w.array() *= (a * h.transpose()).array() /
                     (w * (h * h.transpose())).array().max(kEps);
        fp.objective_trace.push_back({it, (a - w * h).norm()});
        if (converged(fp.objective_trace, cfg.rel_tol)) break;
    }
    fp.w = std::move(w);
    fp.h = std::move(h);
    return fp;
}

FactorPair nmf_kl(const Matrix& a, long r, const SolverConfig& cfg) {
    require_nonnegative(a);
    require_rank(a, r);
    auto [w, h] = init_factors(a, r, cfg.seed);

    FactorPair fp;
    fp.objective_trace.push_back({0, gkl_objective(a, w * h)});
    for (long it = 1; it <= cfg.max_iters; ++it) {
        Matrix ratio = a.array() / (w * h).array().max(kEps);
        h.array() *= (w.transpose() * ratio).array() /
                     (w.colwise().sum().transpose().replicate(1, h.cols()))
                         .array().max(kEps);
        ratio = a.array() / (w * h).array().max(kEps);
        w.array() *= (ratio * h.transpose()).array() /
                     (h.rowwise().sum().transpose().replicate(w.rows(), 1))
                         .array().max(kEps);
        fp.objective_trace.push_back({it, gkl_objective(a, w * h)});
        if (converged(fp.objective_trace, cfg.rel_tol)) break;
    }
    fp.w = std::move(w);
    fp.h = std::move(h);
    return fp;
}

FactorPair lra_nmf(const Matrix& a, long r, const SolverConfig& cfg) {
    require_nonnegative(a);
    require_rank(a, r);
    long k = cfg.inner_rank > 0
                 ? std::min(cfg.inner_rank, std::min(a.rows(), a.cols()))
                 : std::min(a.rows(), a.cols());

    // One-time compression A ~ L R^T; every later step is O((n+m) k r).
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Matrix l = svd.matrixU().leftCols(k) *
               svd.singularValues().head(k).asDiagonal();
    Matrix rt = svd.matrixV().leftCols(k);  // m x k

    const double c0 = ((l.transpose() * l).array() *
                       (rt.transpose() * rt).array()).sum();
    auto objective = [&](const Matrix& w, const Matrix& h) {
        Matrix m1 = w.transpose() * l;   // r x k
        Matrix m2 = h * rt;              // r x k
        double cross = (m1.array() * m2.array()).sum();
        double q = ((w.transpose() * w).array() *
                    (h * h.transpose()).array()).sum();
        return std::sqrt(std::max(0.0, c0 - 2.0 * cross + q));
    };

    auto [w, h] = init_factors(a, r, cfg.seed);
    FactorPair fp;
    fp.objective_trace.push_back({0, objective(w, h)});
    for (long it = 1; it <= cfg.max_iters; ++it) {
        Matrix num_h = ((w.transpose() * l) * rt.transpose()).cwiseMax(0.0);
        h.array() *= num_h.array() /
                     ((w.transpose() * w) * h).array().max(kEps);
        Matrix num_w = (l * (h * rt).transpose()).cwiseMax(0.0);
        w.array() *= num_w.array() /
                     (w * (h * h.transpose())).array().max(kEps);
        fp.objective_trace.push_back({it, objective(w, h)});
        if (converged(fp.objective_trace, cfg.rel_tol)) break;
    }
    fp.w = std::move(w);
    fp.h = std::move(h);
    return fp;
}

namespace {

double kl_to_rank1(const Matrix& pa, const Vector& u, const Vector& v) {
    double kl = 0.0;
    for (long i = 0; i < pa.rows(); ++i)
        for (long j = 0; j < pa.cols(); ++j)
            kl += pa(i, j) * std::log(pa(i, j) / (u(i) * v(j)));
    return kl;
}

}  // namespace

std::pair<Matrix, double> rank1_kl_oracle(const Matrix& a, OracleMode mode,
                                          long budget) {
    require_positive(a);
    if (budget < 1) throw InvalidModeError("budget must be >= 1");
    Matrix pa = a / a.sum();

    if (mode == OracleMode::grid) {
        if (a.rows() != 2 || a.cols() != 2)
            throw InvalidModeError("grid mode is defined for 2x2 only");
        long steps = std::max<long>(budget, 2);
        double best_kl = std::numeric_limits<double>::infinity();
        Vector u(2), v(2), bu(2), bv(2);
        for (long i = 1; i < steps; ++i) {
            u(0) = static_cast<double>(i) / steps;
            u(1) = 1.0 - u(0);
            for (long j = 1; j < steps; ++j) {
                v(0) = static_cast<double>(j) / steps;
                v(1) = 1.0 - v(0);
                double kl = kl_to_rank1(pa, u, v);
                if (kl < best_kl) { best_kl = kl; bu = u; bv = v; }
            }
        }
        return {bu * bv.transpose(), best_kl};
    }

    // Multistart mirror descent on the two probability simplices.
    Rng rng(12345);
    double best_kl = std::numeric_limits<double>::infinity();
    Matrix best;
    for (long start = 0; start < budget; ++start) {
        Vector u(a.rows()), v(a.cols());
        for (long i = 0; i < u.size(); ++i) u(i) = rng.uniform01();
        for (long j = 0; j < v.size(); ++j) v(j) = rng.uniform01();
        u /= u.sum();
        v /= v.sum();
        for (long it = 0; it < 300; ++it) {
            double lr = 0.5 / std::sqrt(1.0 + it);
            Vector gu = Vector::Zero(u.size());
            Vector gv = Vector::Zero(v.size());
            for (long i = 0; i < pa.rows(); ++i)
                for (long j = 0; j < pa.cols(); ++j) {
                    gu(i) -= pa(i, j) / u(i);
                    gv(j) -= pa(i, j) / v(j);
                }
            // Clamp the exponent so tiny coordinates cannot overflow exp.
            u = (u.array() *
                 (-lr * gu.array()).min(30.0).max(-30.0).exp()).matrix();
            v = (v.array() *
                 (-lr * gv.array()).min(30.0).max(-30.0).exp()).matrix();
            u /= u.sum();
            v /= v.sum();
        }
        double kl = kl_to_rank1(pa, u, v);
        if (kl < best_kl) {
            best_kl = kl;
            best = u * v.transpose();
        }
    }
    return {best, best_kl};
}

}  // namespace llr
