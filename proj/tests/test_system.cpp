#include <catch2/catch_amalgamated.hpp>

#include "difftrans/diff_system.hpp"
#include "support/generators.hpp"

using namespace difftrans;

namespace {
Matrix rand_invertible(testgen::Rng& rng, std::size_t n) {
    while (true) {
        Matrix m(n, std::vector<RatFunc>(n));
        for (auto& row : m)
            for (auto& e : row) e = testgen::rand_ratfunc(rng, 1, 4);
        if (!detail::mat_det(m).is_zero()) return m;
    }
}
}  // namespace

TEST_CASE("system construction enforces invertibility") {
    StepH s(Rat(1));
    Matrix singular{{RatFunc(1), RatFunc(1)}, {RatFunc(1), RatFunc(1)}};
    CHECK_THROWS_AS(DiffSystem(s, singular), SingularMatrixError);
    Matrix ragged{{RatFunc(1), RatFunc(1)}, {RatFunc(1)}};
    CHECK_THROWS_AS(DiffSystem(s, ragged), DomainError);
}

TEST_CASE("system_det examples") {
    StepH s(Rat(1));
    DiffSystem d(s, Matrix{{RatFunc(2), RatFunc()}, {RatFunc(), RatFunc(Poly::x())}});
    CHECK(system_det(d) == RatFunc(Poly(2) * Poly::x()));
    DiffSystem comp(s, Matrix{{RatFunc(), RatFunc(1)}, {RatFunc(Poly::x()), RatFunc()}});
    CHECK(system_det(comp) == RatFunc(-Poly::x()));
}

TEST_CASE("iterate_system examples") {
    StepH s(Rat(1));
    DiffSystem a(s, Matrix{{RatFunc(Poly::x())}});
    DiffSystem a2 = iterate_system(a, 2);
    CHECK(a2.step().h == 2);
    CHECK(a2.matrix()[0][0] == RatFunc(Poly::x() * (Poly::x() + Poly(1))));
    CHECK(iterate_system(a, 1) == a);
    CHECK_THROWS_AS(iterate_system(a, 0), DomainError);

    DiffSystem d(s, Matrix{{RatFunc(2), RatFunc()}, {RatFunc(), RatFunc(Poly::x())}});
    DiffSystem d2 = iterate_system(d, 2);
    CHECK(d2.matrix()[0][0] == RatFunc(4));
    CHECK(d2.matrix()[1][1] == RatFunc(Poly::x() * (Poly::x() + Poly(1))));
}

TEST_CASE("gauge_transform examples") {
    StepH s(Rat(1));
    DiffSystem a(s, Matrix{{RatFunc(Poly::x())}});
    CHECK(gauge_transform(a, detail::mat_identity<RatFunc>(1)) == a);
    DiffSystem b = gauge_transform(a, Matrix{{RatFunc(Poly::x())}});
    CHECK(b.matrix()[0][0] == RatFunc(Poly::x() + Poly(1)));
    Matrix singular{{RatFunc()}};
    CHECK_THROWS_AS(gauge_transform(a, singular), SingularMatrixError);
}

TEST_CASE("gauge composition law") {
    testgen::Rng rng(51);
    StepH s(Rat(1));
    for (int i = 0; i < 25; ++i) {
        Matrix am = rand_invertible(rng, 2);
        DiffSystem a(s, am);
        Matrix t = rand_invertible(rng, 2);
        Matrix u = rand_invertible(rng, 2);
        CHECK(gauge_transform(gauge_transform(a, t), u) == gauge_transform(a, detail::mat_mul(u, t)));
    }
}

TEST_CASE("gauge scales determinant by the coboundary of det T") {
    testgen::Rng rng(52);
    StepH s(Rat(1, 2));
    for (int i = 0; i < 20; ++i) {
        DiffSystem a(s, rand_invertible(rng, 2));
        Matrix t = rand_invertible(rng, 2);
        RatFunc dt = detail::mat_det(t);
        RatFunc lhs = system_det(gauge_transform(a, t));
        RatFunc rhs = system_det(a) * dt.shift(s.h) / dt;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("iterate composition and determinant multiplicativity") {
    testgen::Rng rng(53);
    StepH s(Rat(1));
    for (int i = 0; i < 15; ++i) {
        DiffSystem a(s, rand_invertible(rng, 2));
        for (long ell = 1; ell <= 3; ++ell)
            for (long m = 1; m <= 3; ++m)
                CHECK(iterate_system(a, ell * m) == iterate_system(iterate_system(a, ell), m));
        for (long ell = 1; ell <= 4; ++ell) {
            RatFunc expect(1);
            RatFunc da = system_det(a);
            for (long k = 0; k < ell; ++k) expect *= da.shift(s.h * Rat(k));
            CHECK(system_det(iterate_system(a, ell)) == expect);
        }
    }
}

TEST_CASE("companion_from_scalar examples") {
    StepH s(Rat(1));
    // a0 = -x, a1 = 0, a2 = 1  ->  [[0,1],[x,0]]
    DiffSystem c = companion_from_scalar({RatFunc(-Poly::x()), RatFunc(), RatFunc(1)}, s);
    CHECK(c.matrix() == Matrix{{RatFunc(), RatFunc(1)}, {RatFunc(Poly::x()), RatFunc()}});
    // order 1: a0 = -1, a1 = 1 -> [1]
    DiffSystem c1 = companion_from_scalar({RatFunc(-1), RatFunc(1)}, s);
    CHECK(c1.matrix() == Matrix{{RatFunc(1)}});
    CHECK_THROWS_AS(companion_from_scalar({RatFunc(), RatFunc(1)}, s), DomainError);
    CHECK_THROWS_AS(companion_from_scalar({RatFunc(1), RatFunc()}, s), DomainError);
}

TEST_CASE("companion determinant is +- a0/an") {
    testgen::Rng rng(54);
    StepH s(Rat(1));
    for (int i = 0; i < 20; ++i) {
        std::size_t n = static_cast<std::size_t>(testgen::rand_long(rng, 1, 3));
        std::vector<RatFunc> coeffs(n + 1);
        for (auto& c : coeffs) c = testgen::rand_ratfunc(rng, 1, 4);
        if (coeffs.front().is_zero()) coeffs.front() = RatFunc(1);
        if (coeffs.back().is_zero()) coeffs.back() = RatFunc(1);
        DiffSystem c = companion_from_scalar(coeffs, s);
        // expansion along the first column gives det = (-1)^n a0/an
        RatFunc expect = coeffs.front() / coeffs.back();
        if (n % 2 == 1) expect = -expect;
        CHECK(system_det(c) == expect);
    }
}
