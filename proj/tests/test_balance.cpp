#include <doctest.h>

#include <cmath>
#include <vector>

#include "llr/balance.hpp"
#include "llr/reduce.hpp"
#include "test_helpers.hpp"

using namespace llr;

namespace {

BalanceSpec spec2(double s2, double t2) {
    BalanceSpec spec;
    spec.s = Vector(2);
    spec.t = Vector(2);
    spec.s << 1.0 - s2, s2;
    spec.t << 1.0 - t2, t2;
    return spec;
}

}  // namespace

TEST_CASE("balanced_rank1: uniform and the 0.4/0.6 example") {
    Matrix u = balanced_rank1(spec2(0.5, 0.5));
    CHECK((u.array() - 0.25).abs().maxCoeff() <= 1e-15);

    Matrix b = balanced_rank1(spec2(0.6, 0.6));
    Matrix expected(2, 2);
    expected << 0.16, 0.24, 0.24, 0.36;
    CHECK((b - expected).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(numerical_rank(b, 1e-8) == 1);
}

TEST_CASE("balanced_rank1: marginals, eta condition, invalid specs") {
    Vector s = test::random_simplex(4, 5);
    Vector t = test::random_simplex(3, 6);
    BalanceSpec spec{s, t};
    Matrix b = balanced_rank1(spec);
    CHECK((b.rowwise().sum() - s).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((b.colwise().sum().transpose() - t).cwiseAbs().maxCoeff() <= 1e-12);

    EtaCoords e = eta_from_p(ProbMatrix{b});
    for (long i = 0; i < 4; ++i) {
        double suffix = s.tail(4 - i).sum();
        CHECK(e.eta(i, 0) == doctest::Approx(suffix).epsilon(1e-12));
    }
    for (long j = 0; j < 3; ++j) {
        double suffix = t.tail(3 - j).sum();
        CHECK(e.eta(0, j) == doctest::Approx(suffix).epsilon(1e-12));
    }

    BalanceSpec zero;
    zero.s = Vector::Zero(2);
    zero.s(0) = 1.0;
    zero.t = s;
    CHECK_THROWS_AS(balanced_rank1(zero), InvalidSpecError);
    BalanceSpec off{s * 1.1, t};
    CHECK_THROWS_AS(balanced_rank1(off), InvalidSpecError);
}

TEST_CASE("check_balanced: positive and negative cases") {
    BalanceSpec spec = spec2(0.6, 0.6);
    CHECK(check_balanced(balanced_rank1(spec), spec, 1e-12));

    Matrix uniform(2, 2);
    uniform.setConstant(0.25);
    CHECK_FALSE(check_balanced(uniform, spec, 1e-9));

    Matrix wide(2, 3);
    wide.setConstant(1.0);
    CHECK_THROWS_AS(check_balanced(wide, spec, 1e-9), ShapeMismatchError);
}

TEST_CASE("check_balanced: Sinkhorn-balanced random matrix passes") {
    Vector s = Vector::Constant(3, 1.0 / 3.0);
    Matrix a = test::random_positive(3, 3, 9);
    Matrix b = test::sinkhorn_balance(a, s, s);
    CHECK(check_balanced(b, BalanceSpec{s, s}, 1e-10));
    // scale invariance of the check (normalizes internally)
    CHECK(check_balanced(b * 57.0, BalanceSpec{s, s}, 1e-10));
}

TEST_CASE("uniqueness: balanced full-bingo matrices equal s t^T") {
    for (int k = 0; k < 20; ++k) {
        Vector s = test::random_simplex(3, 100 + k);
        Vector t = test::random_simplex(4, 200 + k);
        // Start from a random rank-1 matrix; Sinkhorn keeps it rank-1 and
        // balances it, so the result must be the singleton intersection.
        Matrix r1 = test::random_simplex(3, 300 + k) *
                    test::random_simplex(4, 400 + k).transpose();
        Matrix b = test::sinkhorn_balance(r1, s, t);
        BalanceSpec spec{s, t};
        REQUIRE(check_balanced(b, spec, 1e-9));
        ThetaCoords th = theta_from_p(ProbMatrix{b / b.sum()});
        REQUIRE(has_full_bingo(th, 1e-8));
        CHECK((b - s * t.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("consistency: l1rr of a balanced matrix is the singleton") {
    Vector s = test::random_simplex(4, 42);
    Vector t = test::random_simplex(4, 43);
    Matrix a = test::sinkhorn_balance(test::random_positive(4, 4, 44), s, t);
    Matrix out = l1rr(a);
    CHECK((out - s * t.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("curve_2x2: passes through the singleton at b22 = s2*t2") {
    BalanceSpec spec = spec2(0.6, 0.6);
    auto pts = curve_2x2(spec, {0.36});
    REQUIRE(pts.size() == 1);
    CHECK((pts[0].b - balanced_rank1(spec)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(pts[0].theta(1, 1)) <= 1e-12);
}

TEST_CASE("curve_2x2: theta curve is a straight line only for 0.5/0.5") {
    auto collinearity = [](const std::vector<CurvePoint>& pts) {
        // max residual from the line through first and last sample in
        // (theta_21, theta_12, theta_22) space
        Eigen::Vector3d p0(pts.front().theta(1, 0), pts.front().theta(0, 1),
                           pts.front().theta(1, 1));
        Eigen::Vector3d p1(pts.back().theta(1, 0), pts.back().theta(0, 1),
                           pts.back().theta(1, 1));
        Eigen::Vector3d d = (p1 - p0).normalized();
        double worst = 0.0;
        for (const auto& pt : pts) {
            Eigen::Vector3d x(pt.theta(1, 0), pt.theta(0, 1),
                              pt.theta(1, 1));
            Eigen::Vector3d r = (x - p0) - d.dot(x - p0) * d;
            worst = std::max(worst, r.norm());
        }
        return worst;
    };

    std::vector<double> samples;
    for (int k = 1; k <= 21; ++k) samples.push_back(0.25 + 0.2 * k / 22.0);
    auto line = curve_2x2(spec2(0.5, 0.5), samples);
    CHECK(collinearity(line) <= 1e-9);

    std::vector<double> samples46;
    for (int k = 1; k <= 21; ++k) samples46.push_back(0.21 + 0.18 * k / 22.0);
    auto curved = curve_2x2(spec2(0.6, 0.6), samples46);
    CHECK(collinearity(curved) > 1e-4);
}

TEST_CASE("curve_2x2: eta rank-1 surface identity along the curve") {
    std::vector<double> samples;
    for (int k = 1; k <= 9; ++k) samples.push_back(0.21 + 0.18 * k / 10.0);
    for (const auto& pt : curve_2x2(spec2(0.6, 0.6), samples)) {
        CHECK(pt.eta(0, 0) == 1.0);
        CHECK(pt.eta(0, 1) == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(pt.eta(1, 0) == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(pt.eta(1, 1) == doctest::Approx(pt.b22).epsilon(1e-12));
    }
    // Points of the rank-1 family satisfy eta_22 = eta_21 * eta_12.
    for (int k = 0; k < 10; ++k) {
        Vector u = test::random_simplex(2, 700 + k);
        Vector v = test::random_simplex(2, 800 + k);
        EtaCoords e = eta_from_p(ProbMatrix{u * v.transpose()});
        CHECK(e.eta(1, 1) ==
              doctest::Approx(e.eta(1, 0) * e.eta(0, 1)).epsilon(1e-10));
    }
}

TEST_CASE("curve_2x2: domain guard") {
    BalanceSpec spec = spec2(0.6, 0.6);
    CHECK_THROWS_AS(curve_2x2(spec, {0.6}), OutOfDomainError);
    CHECK_THROWS_AS(curve_2x2(spec, {0.0}), OutOfDomainError);
    BalanceSpec tall;
    tall.s = test::random_simplex(3, 1);
    tall.t = test::random_simplex(2, 2);
    CHECK_THROWS_AS(curve_2x2(tall, {0.1}), InvalidSpecError);
}
