#include <doctest.h>

#include <cmath>
#include <vector>

#include "llr/nmf.hpp"
#include "llr/poset.hpp"
#include "llr/reduce.hpp"
#include "test_helpers.hpp"

using namespace llr;

TEST_CASE("l1rr: fixed points and the hand example") {
    Matrix ones(2, 2);
    ones.setConstant(1.0);
    CHECK((l1rr(ones) - ones).cwiseAbs().maxCoeff() <= 1e-15);

    Matrix a(2, 2);
    a << 1, 2, 3, 4;
    Matrix expected(2, 2);
    expected << 1.2, 1.8, 2.8, 4.2;
    CHECK((l1rr(a) - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("l1rr: idempotent and rank one on rank-1 inputs") {
    for (int k = 0; k < 10; ++k) {
        Vector u = test::random_simplex(4, 11 + k) * 3.0;
        Vector v = test::random_simplex(5, 22 + k) * 2.0;
        Matrix r1 = u * v.transpose();
        CHECK((l1rr(r1) - r1).cwiseAbs().maxCoeff() <= 1e-12);

        Matrix a = test::random_positive(4, 5, 33 + k);
        Matrix once = l1rr(a);
        CHECK(numerical_rank(once, 1e-8) == 1);
        CHECK((l1rr(once) - once).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("l1rr: preserves row and column sums") {
    Matrix a = test::random_positive(6, 4, 44);
    Matrix out = l1rr(a);
    CHECK((out.rowwise().sum() - a.rowwise().sum()).cwiseAbs().maxCoeff() <=
          1e-10 * a.sum());
    CHECK((out.colwise().sum() - a.colwise().sum()).cwiseAbs().maxCoeff() <=
          1e-10 * a.sum());
}

TEST_CASE("l1rr: output theta has full bingo") {
    Matrix a = test::random_positive(5, 6, 55);
    ProbMatrix p = normalize(l1rr(a)).first;
    ThetaCoords t = theta_from_p(p);
    for (long i = 1; i < 5; ++i)
        for (long j = 1; j < 6; ++j)
            CHECK(std::abs(t.theta(i, j)) <= 1e-8);
}

TEST_CASE("l1rr: m-projection preserves first-row/column eta") {
    Matrix a = test::random_positive(5, 5, 66);
    EtaCoords before = eta_from_p(normalize(a).first);
    EtaCoords after = eta_from_p(normalize(l1rr(a)).first);
    for (long i = 0; i < 5; ++i)
        CHECK(after.eta(i, 0) ==
              doctest::Approx(before.eta(i, 0)).epsilon(1e-10));
    for (long j = 0; j < 5; ++j)
        CHECK(after.eta(0, j) ==
              doctest::Approx(before.eta(0, j)).epsilon(1e-10));
}

TEST_CASE("l1rr: KL-optimal against the 2x2 grid oracle") {
    Matrix a(2, 2);
    a << 1, 2, 3, 4;
    auto [b, oracle_kl] = rank1_kl_oracle(a, OracleMode::grid, 1000);
    CHECK(kl_divergence(a, l1rr(a)) <= oracle_kl + 1e-8);
}

TEST_CASE("l1rr: integer inputs give integer total*normalized entries") {
    Rng rng(7);
    for (int k = 0; k < 10; ++k) {
        Matrix a(3, 4);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 4; ++j)
                a(i, j) = static_cast<double>(1 + rng.below(9));
        Matrix out = l1rr(a);
        double total = a.sum();
        // out * total has integer entries (row sum * col sum products)
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 4; ++j) {
                double v = out(i, j) * total;
                CHECK(std::abs(v - std::round(v)) <= 1e-9);
            }
    }
}

TEST_CASE("make_plan: paper partition example") {
    BingoPlan plan = make_plan(15, 9, std::vector<long>{3, 4, 5, 9, 14, 15});
    REQUIRE(plan.partition.size() == 3);
    CHECK(plan.partition[0] == Run{3, 5});
    CHECK(plan.partition[1] == Run{9, 9});
    CHECK(plan.partition[2] == Run{14, 15});
    CHECK(format_partition(plan) == "{3,4,5},{9},{14,15}");
}

TEST_CASE("make_plan: singleton run and validation") {
    BingoPlan plan = make_plan(5, 4, std::vector<long>{3});
    REQUIRE(plan.partition.size() == 1);
    CHECK(plan.partition[0] == Run{3, 3});

    CHECK_THROWS_AS(make_plan(5, 4, std::vector<long>{1}),
                    InvalidColumnsError);
    CHECK_THROWS_AS(make_plan(5, 4, std::vector<long>{6}),
                    InvalidColumnsError);
    CHECK_THROWS_AS(make_plan(5, 3, std::vector<long>{3, 3}),
                    InvalidColumnsError);
    CHECK_THROWS_AS(make_plan(5, 5, std::vector<long>{}), InvalidRankError);
    CHECK_THROWS_AS(make_plan(5, 0, std::vector<long>{}), InvalidRankError);
}

TEST_CASE("make_plan: seeded sampling is deterministic and in range") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        BingoPlan p1 = make_plan(12, 5, seed);
        BingoPlan p2 = make_plan(12, 5, seed);
        CHECK(p1.selected == p2.selected);
        CHECK(p1.selected.size() == 7);
        for (long c : p1.selected) {
            CHECK(c >= 2);
            CHECK(c <= 12);
        }
    }
    CHECK(make_plan(12, 5, 1ULL).selected != make_plan(12, 5, 2ULL).selected);
}

TEST_CASE("lrrr: r=1 plan agrees with l1rr") {
    Matrix a = test::random_positive(5, 5, 88);
    std::vector<long> all_cols{2, 3, 4, 5};
    ReductionResult res = lrrr(a, make_plan(5, 1, all_cols));
    CHECK((res.output - l1rr(a)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("lrrr: single trailing run on a 4x4") {
    Matrix a = test::random_positive(4, 4, 99);
    ReductionResult res = lrrr(a, make_plan(4, 3, std::vector<long>{4}));
    // Columns 1,2 untouched; 3:4 block replaced by its L1RR.
    CHECK(res.output.col(0) == a.col(0));
    CHECK(res.output.col(1) == a.col(1));
    Matrix block = l1rr(a.middleCols(2, 2));
    CHECK((res.output.middleCols(2, 2) - block).cwiseAbs().maxCoeff() <=
          1e-14);
    CHECK(numerical_rank(res.output, 1e-8) <= 3);
    CHECK(res.kl_from_input == doctest::Approx(
              kl_divergence(a, res.output)).epsilon(1e-14));
    CHECK(res.ls_from_input == doctest::Approx(
              ls_error(a, res.output)).epsilon(1e-14));
}

TEST_CASE("lrrr: fixed point on planted-bingo inputs") {
    // Build a 5x6 distribution with bingos exactly at C = {3, 4, 6}.
    Rng rng(123);
    Matrix theta = Matrix::Zero(5, 6);
    for (long i = 0; i < 5; ++i)
        for (long j = 0; j < 6; ++j)
            theta(i, j) = rng.uniform01() - 0.5;
    for (long j : {2L, 3L, 5L})  // 0-based bingo columns
        for (long i = 1; i < 5; ++i) theta(i, j) = 0.0;
    // Normalize via the zeta transform.
    Matrix acc(5, 6);
    for (long i = 0; i < 5; ++i)
        for (long j = 0; j < 6; ++j) {
            double v = theta(i, j);
            if (i > 0) v += acc(i - 1, j);
            if (j > 0) v += acc(i, j - 1);
            if (i > 0 && j > 0) v -= acc(i - 1, j - 1);
            acc(i, j) = v;
        }
    Matrix a = acc.array().exp();
    a /= a.sum();

    ReductionResult res = lrrr(a, make_plan(6, 3, std::vector<long>{3, 4, 6}));
    CHECK((res.output - a).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("lrrr: marginal conservation and rank bound on random instances") {
    Rng rng(1357);
    for (int k = 0; k < 30; ++k) {
        long n = 3 + rng.below(8);
        long m = 3 + rng.below(8);
        long r = 1 + rng.below(std::min(n, m) - 1);
        Matrix a = test::random_positive(n, m, 500 + k);
        BingoPlan plan = make_plan(m, std::max(r, 1L), rng.next());
        ReductionResult res = lrrr(a, plan);
        double scale = a.sum();
        CHECK((res.output.rowwise().sum() - a.rowwise().sum())
                  .cwiseAbs().maxCoeff() <= 1e-10 * scale);
        CHECK((res.output.colwise().sum() - a.colwise().sum())
                  .cwiseAbs().maxCoeff() <= 1e-10 * scale);
        CHECK(numerical_rank(res.output, 1e-8) <= plan.r);
        CHECK(res.output.sum() == doctest::Approx(scale).epsilon(1e-9));
    }
}

TEST_CASE("lrrr: plan shape mismatch") {
    Matrix a = test::random_positive(3, 4, 1);
    CHECK_THROWS_AS(lrrr(a, make_plan(5, 2, std::vector<long>{3, 4, 5})),
                    PlanShapeMismatchError);
}

TEST_CASE("lrrr: optimal over the bingo-constrained family (3x4, r=2)") {
    // Independent oracle: gradient descent on the free canonical parameters
    // of the family {theta | theta_ij = 0 for i >= 2, j in C}, using the
    // expectation-matching gradient d KL / d theta_s = eta_s(q) - eta_s(p).
    Matrix a = test::random_positive(3, 4, 246);
    ProbMatrix p = normalize(a).first;
    std::vector<long> cols{3, 4};  // C, 1-based
    ReductionResult res = lrrr(a, make_plan(4, 2, cols));

    Matrix theta = theta_from_p(p).theta;  // start from the input itself
    auto is_constrained = [&](long i, long j) {
        if (i == 0) return false;
        for (long c : cols)
            if (j == c - 1) return true;
        return false;
    };
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 4; ++j)
            if (is_constrained(i, j)) theta(i, j) = 0.0;

    Matrix q;
    for (int it = 0; it < 5000; ++it) {
        Matrix acc(3, 4);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 4; ++j) {
                double v = theta(i, j);
                if (i > 0) v += acc(i - 1, j);
                if (j > 0) v += acc(i, j - 1);
                if (i > 0 && j > 0) v -= acc(i - 1, j - 1);
                acc(i, j) = v;
            }
        q = acc.array().exp();
        q /= q.sum();
        EtaCoords eq = eta_from_p(ProbMatrix{q});
        EtaCoords ep = eta_from_p(p);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 4; ++j) {
                if (is_constrained(i, j)) continue;
                if (i == 0 && j == 0) continue;
                theta(i, j) -= 0.8 * (eq.eta(i, j) - ep.eta(i, j));
            }
    }
    double oracle_kl = kl_divergence(p.p, q);
    CHECK(res.kl_from_input <= oracle_kl + 1e-6);
}

TEST_CASE("lrrr_auto: no-op at full rank") {
    Matrix a = test::random_positive(4, 4, 135);
    ReductionResult res = lrrr_auto(a, 4, 0);
    CHECK(res.output == a);
    CHECK(res.plan.empty());
    CHECK(res.kl_from_input == 0.0);
}

TEST_CASE("lrrr_auto: deterministic given the seed") {
    Matrix a = test::random_positive(8, 6, 975);
    ReductionResult r1 = lrrr_auto(a, 3, 42);
    ReductionResult r2 = lrrr_auto(a, 3, 42);
    CHECK(r1.output == r2.output);
    CHECK(r1.plan.selected == r2.plan.selected);
    CHECK(r1.rng_algorithm == kRngAlgorithm);
}

TEST_CASE("lrrr_auto: wide matrices reduce via the transpose") {
    Matrix a = test::random_positive(4, 9, 531);
    ReductionResult res = lrrr_auto(a, 2, 7);
    CHECK(res.transposed);
    CHECK(res.plan.m == 4);  // plan applies to the transposed column count
    CHECK(res.output.rows() == 4);
    CHECK(res.output.cols() == 9);
    CHECK(numerical_rank(res.output, 1e-8) <= 2);
    double scale = a.sum();
    CHECK((res.output.rowwise().sum() - a.rowwise().sum())
              .cwiseAbs().maxCoeff() <= 1e-10 * scale);
    CHECK((res.output.colwise().sum() - a.colwise().sum())
              .cwiseAbs().maxCoeff() <= 1e-10 * scale);
}
