#include <catch2/catch_amalgamated.hpp>

#include "difftrans/solve.hpp"
#include "difftrans/verify.hpp"
#include "support/generators.hpp"

using namespace difftrans;

namespace {
ExpConst EC(long n, long d = 1) { return ExpConst::from_rational(Rat(n, d)); }
}  // namespace

TEST_CASE("verify_certificate examples") {
    StepH s(Rat(1));
    RatFunc a(Poly::x() + Poly(2), Poly::x());
    Certificate good{EC(1), RatFunc(Poly::x() * (Poly::x() + Poly(1)))};
    CHECK(verify_certificate(a, good, s));
    Certificate bad{EC(1), RatFunc(Poly::x())};
    CHECK(!verify_certificate(a, bad, s));
    Certificate triv{EC(1), RatFunc(1)};
    CHECK(verify_certificate(RatFunc(1), triv, s));
    // irrational constant cannot certify a rational a
    Certificate irr{EC(2).root(2), RatFunc(1)};
    CHECK(!verify_certificate(RatFunc(2), irr, s));
}

TEST_CASE("verify_closed_form examples") {
    StepH s(Rat(1));
    CHECK(verify_closed_form(RatFunc(1), ExpPoly(RatFunc(1)), ClosedForm{ExpPoly(RatFunc(Poly::x()))}, s));
    CHECK(verify_closed_form(RatFunc(2), ExpPoly(), ClosedForm{ExpPoly::unit(EC(2))}, s));
    // wrong form: x^2 does not solve rho(y) = y + 1
    CHECK(!verify_closed_form(RatFunc(1), ExpPoly(RatFunc(1)),
                              ClosedForm{ExpPoly(RatFunc(Poly::x() * Poly::x()))}, s));
    // irrational unit in the form cannot verify against rational data
    CHECK(!verify_closed_form(RatFunc(1), ExpPoly(),
                              ClosedForm{ExpPoly::unit(EC(2).root(2))}, s));
}

TEST_CASE("numeric_crosscheck on exact forms") {
    StepH s(Rat(1));
    // y = E_2 solves rho(y) = 2y
    NumericReport r = numeric_crosscheck(RatFunc(2), ExpPoly(), ClosedForm{ExpPoly::unit(EC(2))}, s,
                                         0.3, 50, 1e-9);
    CHECK(r.passed);
    CHECK(r.max_relative_error < 1e-9);

    // constant solution
    NumericReport r2 = numeric_crosscheck(RatFunc(1), ExpPoly(), ClosedForm{ExpPoly(RatFunc(1))}, s,
                                          -1.7, 25, 1e-12);
    CHECK(r2.passed);
    CHECK(r2.max_relative_error == 0.0);

    // wrong form diverges
    NumericReport r3 = numeric_crosscheck(RatFunc(1), ExpPoly(RatFunc(1)),
                                          ClosedForm{ExpPoly(RatFunc(Poly::x() * Poly::x()))}, s,
                                          0.5, 10, 1e-9);
    CHECK(!r3.passed);
}

TEST_CASE("numeric_crosscheck error handling") {
    StepH s(Rat(1));
    // negative multiplier rejected
    CHECK_THROWS_AS(numeric_crosscheck(RatFunc(-2), ExpPoly(), ClosedForm{ExpPoly::unit(EC(-2))}, s,
                                       0.3, 10, 1e-9),
                    EvaluationError);
    // pole on the orbit: a = 1/x starting at x0 = -3 hits x = 0 at k = 3
    RatFunc a(Poly(1), Poly::x());
    ClosedForm f{ExpPoly(RatFunc(1))};
    try {
        numeric_crosscheck(a, ExpPoly(), f, s, -3.0, 10, 1e-9);
        FAIL("expected pole error");
    } catch (const EvaluationError& e) {
        CHECK(std::string(e.what()).find("k=3") != std::string::npos);
    }
}

TEST_CASE("symbolic and numeric checks agree on solver output") {
    testgen::Rng rng(91);
    StepH s(Rat(1));
    int checked = 0;
    for (int i = 0; i < 60 && checked < 20; ++i) {
        // positive multiplier instances only
        long cnum = testgen::rand_long(rng, 1, 6);
        Poly root1 = Poly::x() - Poly(Rat(testgen::rand_long(rng, 5, 9)));
        RatFunc g(root1);
        RatFunc a = RatFunc(Rat(cnum)) * g.shift(s.h) / g;
        ExpPoly b;
        if (i % 2 == 0) b = ExpPoly(RatFunc(1));
        Verdict v = solve_order1(a, b, s);
        if (!v.is_da()) continue;
        REQUIRE(verify_closed_form(a, b, v.form(), s));
        bool neg = false;
        for (const auto& [mu, coeff] : v.form().value.terms())
            if (mu.sign() < 0) neg = true;
        if (neg) continue;
        NumericReport r = numeric_crosscheck(a, b, v.form(), s, 0.3, 50, 1e-9);
        CHECK(r.passed);
        ++checked;
    }
    CHECK(checked >= 20);
}
